#include <functional>
#include <set>

#include "foliation_edit.hpp"

namespace legkit {

namespace {

std::string sid(int id) { return std::to_string(id); }

bool has_link(const FoliationState& s, int p, const LeafRef& l) {
    return l.type == LeafRef::Link && (s.linked(p, l.other) || s.linked(l.other, p));
}

// directed cycle through same-sign singularities: a closed orbit, not allowed in a tight disk
void check_no_cycle(const FoliationState& s) {
    std::map<int, int> state;
    std::function<bool(int)> visit = [&](int v) {
        state[v] = 1;
        for (int t : s.targets_of(v)) {
            if (s.at(t).sign != s.at(v).sign) continue;
            if (state[t] == 1) return true;
            if (state[t] == 0 && visit(t)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (const auto& [id, x] : s.singularities())
        if (state[id] == 0 && visit(id))
            throw Error(Err::TightnessViolation, "separatrices close up into a cycle through " + sid(id));
}

FoliationState convert_boundary(const FoliationState& s, int p, LeafRef gamma, LeafRef tau) {
    if (tau.type != LeafRef::Boundary) throw Error(Err::BadLeaves, "a boundary singularity converts along the boundary leaf");
    if (gamma.type == LeafRef::Boundary) throw Error(Err::BadLeaves, "both leaves are the boundary");
    if (gamma.type == LeafRef::Link && !has_link(s, p, gamma))
        throw Error(Err::BadLeaves, sid(p) + " has no leaf to " + sid(gamma.other));
    StateEditor ed(s);
    auto& x = ed.at(p);
    const Singularity before = x;
    int a;
    if (x.kind == Kind::Elliptic) {
        // the interior half of the elliptic point moves inward
        a = ed.add(x.sign, Kind::Elliptic, Locus::Interior);
        ed.retarget(p, a);
        if (before.sign > 0) ed.link(a, p);
        else ed.link(p, a);
    } else {
        // the interior separatrix now ends on a new hyperbolic point
        a = ed.add(x.sign, Kind::Hyperbolic, Locus::Interior);
        ed.retarget(p, a);
        if (before.sign > 0) ed.link(p, a);
        else ed.link(a, p);
    }
    ed.at(p).kind = before.kind == Kind::Elliptic ? Kind::Hyperbolic : Kind::Elliptic;
    ed.log("convert " + sid(p) + " " + label(before) + " -> " + label(ed.at(p)) + " on boundary, new " +
           label(ed.at(a)) + " " + sid(a));
    return ed.done();
}

FoliationState convert_interior(const FoliationState& s, int p, LeafRef gamma, LeafRef tau) {
    if (gamma == tau) throw Error(Err::BadLeaves, "gamma and tau must be different leaves");
    if (gamma.type == LeafRef::Boundary || tau.type == LeafRef::Boundary)
        throw Error(Err::BadLeaves, sid(p) + " is not on the boundary");
    for (const auto& l : {gamma, tau})
        if (l.type == LeafRef::Link && !has_link(s, p, l)) throw Error(Err::BadLeaves, sid(p) + " has no leaf to " + sid(l.other));
    const Singularity before = s.at(p);
    StateEditor ed(s);
    const int sg = before.sign;
    int a, b;
    if (before.kind == Kind::Elliptic) {
        a = ed.add(sg, Kind::Elliptic, Locus::Interior);
        b = ed.add(sg, Kind::Elliptic, Locus::Interior);
        const int keep = tau.type == LeafRef::Link ? tau.other : -1;
        ed.retarget(p, a, keep);
        if (sg > 0) {
            ed.link(a, p);
            ed.link(b, p);
        } else {
            ed.link(p, a);
            ed.link(p, b);
        }
        ed.at(p).kind = Kind::Hyperbolic;
    } else {
        // gamma runs along the separatrices that split; tau must be of the other kind
        const bool g_in = gamma.type == LeafRef::Link && s.linked(gamma.other, p);
        const bool t_in = tau.type == LeafRef::Link && s.linked(tau.other, p);
        const bool want_in = sg < 0;
        if (gamma.type != LeafRef::Link || g_in != want_in)
            throw Error(Err::BadLeaves, std::string("gamma must be ") + (want_in ? "a stable" : "an unstable") + " separatrix of " + sid(p));
        if (tau.type == LeafRef::Link && t_in == want_in) throw Error(Err::BadLeaves, "tau must be on the other side of " + sid(p));
        auto ins = s.sources_of(p), outs = s.targets_of(p);
        auto& split = want_in ? ins : outs;
        std::erase(split, gamma.other);
        split.insert(split.begin(), gamma.other);  // gamma's separatrix goes to a
        a = ed.add(sg, Kind::Hyperbolic, Locus::Interior);
        b = ed.add(sg, Kind::Hyperbolic, Locus::Interior);
        for (int z : ins) ed.unlink(z, p);
        for (int z : outs) ed.unlink(p, z);
        const int nh[2] = {a, b};
        for (std::size_t i = 0; i < ins.size() && i < 2; ++i) ed.link(ins[i], nh[i]);
        for (std::size_t i = 0; i < outs.size() && i < 2; ++i) ed.link(nh[i], outs[i]);
        for (int h : nh) {
            if (sg > 0) ed.link(p, h);
            else ed.link(h, p);
        }
        ed.at(p).kind = Kind::Elliptic;
    }
    ed.log("convert " + sid(p) + " " + label(before) + " -> " + label(ed.at(p)) + ", new " + label(ed.at(a)) + " " + sid(a) + " " +
           label(ed.at(b)) + " " + sid(b));
    return ed.done();
}

}  // namespace

FoliationState convert(const FoliationState& s, int p, LeafRef gamma, LeafRef tau) {
    return s.at(p).locus == Locus::Boundary ? convert_boundary(s, p, gamma, tau) : convert_interior(s, p, gamma, tau);
}

FoliationState eliminate(const FoliationState& s, int e, int h) {
    const auto& se = s.at(e);
    const auto& sh = s.at(h);
    if (se.kind != Kind::Elliptic || sh.kind != Kind::Hyperbolic)
        throw Error(Err::PatternMismatch, "eliminate takes an elliptic and a hyperbolic point");
    if (se.sign != sh.sign) throw Error(Err::SignMismatch, sid(e) + " and " + sid(h) + " have opposite signs");
    if (se.locus != Locus::Interior || sh.locus != Locus::Interior)
        throw Error(Err::PatternMismatch, "only interior points can be eliminated");
    const bool pos = se.sign > 0;
    if (!(pos ? s.linked(e, h) : s.linked(h, e)))
        throw Error(Err::NotConnected, sid(e) + " and " + sid(h) + " are not joined by a separatrix");

    // the hyperbolic point's other separatrix on the elliptic side
    auto side = pos ? s.sources_of(h) : s.targets_of(h);
    std::erase(side, e);
    if (side.empty()) throw Error(Err::NotConnected, sid(h) + " has no second separatrix to absorb " + sid(e));
    const int other = side.front();
    if (other == e) throw Error(Err::TightnessViolation, "both separatrices of " + sid(h) + " meet " + sid(e));

    StateEditor ed(s);
    const auto far = pos ? s.targets_of(h) : s.sources_of(h);
    ed.unlink(pos ? e : h, pos ? h : e);
    ed.retarget(e, other);
    for (int f : far) {
        if (pos) ed.link(other, f);
        else ed.link(f, other);
    }
    ed.remove(e);
    ed.remove(h);
    ed.log("eliminate " + sid(e) + " " + sid(h) + " into " + sid(other));
    auto out = ed.done();
    check_no_cycle(out);
    return out;
}

FoliationState create_pair(const FoliationState& s, int from, int to, int sign) {
    if (sign != 1 && sign != -1) throw Error(Err::BadLeaves, "sign must be +1 or -1");
    if (!s.linked(from, to)) throw Error(Err::NotConnected, "no leaf from " + sid(from) + " to " + sid(to));
    const auto& x = s.at(from);
    const auto& y = s.at(to);
    if (sign > 0 && !(x.kind == Kind::Elliptic && x.sign > 0))
        throw Error(Err::BadLeaves, "a positive pair needs a leaf leaving a positive elliptic point");
    if (sign < 0 && !(y.kind == Kind::Elliptic && y.sign < 0))
        throw Error(Err::BadLeaves, "a negative pair needs a leaf entering a negative elliptic point");
    const bool family = x.kind == Kind::Elliptic && y.kind == Kind::Elliptic;

    StateEditor ed(s);
    if (!family) ed.unlink(from, to);
    const int n = ed.add(sign, Kind::Elliptic, Locus::Interior);
    const int m = ed.add(sign, Kind::Hyperbolic, Locus::Interior);
    ed.link(from, m);
    ed.link(m, to);
    if (sign > 0) ed.link(n, m);
    else ed.link(m, n);
    ed.log("create " + std::string(sign > 0 ? "+" : "-") + " pair " + sid(n) + " " + sid(m) + " on " + sid(from) + "->" + sid(to));
    return ed.done();
}

FoliationState singularity_curve_move(const FoliationState& s, int from, int to, CurveDirection dir) {
    StateEditor ed(s);
    Link* k = ed.find(from, to);
    if (!k) throw Error(Err::PatternMismatch, "no leaf segment " + sid(from) + "->" + sid(to));
    if (s.at(from).kind != Kind::Elliptic || s.at(to).kind != Kind::Elliptic)
        throw Error(Err::PatternMismatch, "segment " + sid(from) + "->" + sid(to) + " is a separatrix, not a leaf family");
    const bool want = dir == CurveDirection::ToCurve;
    if (k->curve == want)
        throw Error(Err::PatternMismatch, "segment " + sid(from) + "->" + sid(to) + (want ? " is already" : " is not") + " a singularity curve");
    k->curve = want;
    ed.log(std::string(want ? "curve on " : "curve off ") + sid(from) + "->" + sid(to));
    return ed.done();
}

FoliationState to_naf(const FoliationState& s) {
    FoliationState cur = s;
    for (int id : s.boundary()) {
        const auto& x = cur.at(id);
        if ((x.sign > 0) != (x.kind == Kind::Hyperbolic)) cur = convert(cur, id, LeafRef::free(), LeafRef::boundary());
    }
    return cur;
}

}  // namespace legkit
