#include <functional>
#include <numeric>
#include <set>

#include "foliation_edit.hpp"

namespace legkit {

namespace {

bool interior_is(const Singularity& x, int sign, Kind k) { return x.locus == Locus::Interior && x.sign == sign && x.kind == k; }

std::vector<int> interior_of(const FoliationState& s, int sign, Kind k) {
    std::vector<int> out;
    for (const auto& [id, x] : s.singularities())
        if (interior_is(x, sign, k)) out.push_back(id);
    return out;
}

bool try_eliminate(FoliationState& s, int e, int h) {
    try {
        s = eliminate(s, e, h);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// push every hyperbolic-to-hyperbolic connection off to the far side
FoliationState break_connections(FoliationState s) {
    for (bool again = true; again;) {
        again = false;
        for (const auto& k : s.links()) {
            if (s.at(k.from).kind != Kind::Hyperbolic || s.at(k.to).kind != Kind::Hyperbolic) continue;
            StateEditor ed(s);
            const int h1 = k.from, h2 = k.to;
            auto outs = s.targets_of(h2);
            auto ins = s.sources_of(h1);
            ed.unlink(h1, h2);
            if (!outs.empty()) ed.link(h1, outs.front());
            if (!ins.empty()) ed.link(ins.front(), h2);
            ed.log("push " + std::to_string(h1) + "->" + std::to_string(h2) + " off");
            s = ed.done();
            again = true;
            break;
        }
    }
    return s;
}

}  // namespace

FoliationState reduce_interior(const FoliationState& s0) {
    if (!s0.boundary_in_naf()) throw Error(Err::PatternMismatch, "reduce_interior needs a boundary in normal form");
    FoliationState s = break_connections(s0);
    for (bool again = true; again;) {
        again = false;
        for (int e : interior_of(s, -1, Kind::Elliptic)) {
            for (int h : s.sources_of(e)) {
                if (interior_is(s.at(h), -1, Kind::Hyperbolic) && try_eliminate(s, e, h)) {
                    again = true;
                    break;
                }
            }
            if (again) break;
        }
        if (again) continue;
        for (int h : interior_of(s, 1, Kind::Hyperbolic)) {
            auto src = s.sources_of(h);
            // the freshest elliptic point has the fewest leaves
            std::stable_sort(src.begin(), src.end(), [&](int a, int b) {
                return s.targets_of(a).size() + s.sources_of(a).size() < s.targets_of(b).size() + s.sources_of(b).size();
            });
            for (int e : src) {
                if (interior_is(s.at(e), 1, Kind::Elliptic) && try_eliminate(s, e, h)) {
                    again = true;
                    break;
                }
            }
            if (again) break;
        }
    }
    const auto c = s.interior_counts();
    const auto inv = s.declared();
    if (c.e_neg != 0 || c.h_pos != 0 || c.e_pos != (1 - inv.tb + inv.r) / 2 || c.h_neg != (-1 - inv.tb + inv.r) / 2)
        throw Error(Err::TightnessViolation, "interior does not reduce to the normal counts");
    return s;
}

std::string region_name(Region::Type t) {
    switch (t) {
        case Region::A: return "a";
        case Region::B: return "b";
        case Region::SemiA: return "semi-a";
    }
    return "?";
}

int RegionDecomposition::count(Region::Type t) const {
    return static_cast<int>(std::count_if(regions.begin(), regions.end(), [t](const Region& r) { return r.type == t; }));
}

bool in_elliptic_form(const FoliationState& s) {
    for (const auto& [id, x] : s.singularities())
        if (x.locus == Locus::Interior && x.kind == Kind::Hyperbolic) return false;
    return true;
}

RegionDecomposition decompose(const FoliationState& s) {
    if (!in_elliptic_form(s)) throw Error(Err::NotEllipticForm, "interior still has hyperbolic points");
    RegionDecomposition d;
    for (const auto& k : s.links()) {
        if (s.at(k.from).kind != Kind::Elliptic || s.at(k.to).kind != Kind::Elliptic) continue;
        const bool ia = s.at(k.from).locus == Locus::Interior, ib = s.at(k.to).locus == Locus::Interior;
        d.regions.push_back({ia && ib ? Region::A : Region::B, k.from, k.to});
    }
    if (d.count(Region::A) == 0) d.regions.push_back({Region::SemiA, -1, -1});
    return d;
}

std::pair<FoliationState, RegionDecomposition> to_elliptic_form(const FoliationState& s0) {
    if (in_elliptic_form(s0)) return {s0, decompose(s0)};
    FoliationState s = reduce_interior(to_naf(s0));

    // group boundary sinks with the interior h- whose unstable separatrices reach them
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [id, x] : s.singularities())
        if (x.sign < 0) parent[id] = id;
    for (const auto& k : s.links())
        if (parent.count(k.from) && parent.count(k.to)) parent[find(k.from)] = find(k.to);
    std::map<int, std::vector<int>> groups;
    for (int id : s.boundary())
        if (s.at(id).kind == Kind::Elliptic) groups[find(id)].push_back(id);

    for (const auto& [root, sinks] : groups) {
        if (sinks.size() < 2) continue;
        std::set<int> inner;
        for (int p : sinks) {
            s = convert(s, p, LeafRef::free(), LeafRef::boundary());
            inner.insert(s.targets_of(p).front());
        }
        // contract the region down to one interior sink
        for (bool again = true; again;) {
            again = false;
            for (int h : interior_of(s, -1, Kind::Hyperbolic)) {
                auto outs = s.targets_of(h);
                if (outs.empty() || !inner.count(outs.front())) continue;
                const int e = outs.front();
                if (try_eliminate(s, e, h)) {
                    inner.erase(e);
                    again = true;
                    break;
                }
            }
        }
    }
    if (!in_elliptic_form(s)) throw Error(Err::TightnessViolation, "hyperbolic points survive the region contraction");

    // interior sources reaching the boundary through a single h+ slide onto it
    for (int u : interior_of(s, 1, Kind::Elliptic)) {
        const auto c = s.interior_counts();
        if (c.e_pos + c.e_neg <= 1) break;
        std::vector<int> hs;
        for (int t : s.targets_of(u))
            if (s.at(t).locus == Locus::Boundary && s.at(t).kind == Kind::Hyperbolic) hs.push_back(t);
        if (hs.size() != 1) continue;
        s = convert(s, hs[0], LeafRef::to(u), LeafRef::boundary());
        const int a = s.targets_of(hs[0]).front();
        s = eliminate(s, u, a);
    }
    return {s, decompose(s)};
}

SkeletonTree extract_skeleton(const FoliationState& s) {
    if (!in_elliptic_form(s)) throw Error(Err::NotEllipticForm, "interior still has hyperbolic points");
    std::vector<TreeVertex> vs;
    std::vector<TreeEdge> es;
    for (const auto& [id, x] : s.singularities())
        if (x.kind == Kind::Elliptic) vs.push_back({id, Rational(0), Rational(0), x.sign});
    for (const auto& k : s.links())
        if (s.at(k.from).kind == Kind::Elliptic && s.at(k.to).kind == Kind::Elliptic) es.push_back({k.from, k.to});
    SignedTree t(std::move(vs), std::move(es));
    if (t.size() < 2) throw Error(Err::NotATree, "skeleton has a single vertex");
    int anchor = -1;
    for (const auto& v : t.vertices())
        if (t.is_leaf(v.id) && (anchor < 0 || v.id < anchor)) anchor = v.id;
    SkeletonTree out{canonical_layout(t, anchor), {}};
    for (const auto& v : out.tree.vertices()) out.boundary.push_back(s.at(v.id).locus == Locus::Boundary);
    return out;
}

PipelineRun run_pipeline(int tb, int r) {
    std::vector<std::pair<std::string, FoliationState>> stages;
    auto s = init_boundary(tb, r);
    stages.emplace_back("init", s);

    // knock the state out of normal form so every stage has work to do
    int hp = -1, en = -1;
    for (int id : s.boundary()) {
        const auto& x = s.at(id);
        if (hp < 0 && x.sign > 0) hp = id;
        if (en < 0 && x.sign < 0) en = id;
    }
    const int u0 = s.sources_of(hp).front();
    s = create_pair(s, u0, en, 1);
    s = create_pair(s, u0, en, -1);
    s = convert(s, hp, LeafRef::free(), LeafRef::boundary());
    s = convert(s, en, LeafRef::free(), LeafRef::boundary());
    stages.emplace_back("perturbed", s);

    s = to_naf(s);
    stages.emplace_back("naf", s);
    s = reduce_interior(s);
    stages.emplace_back("reduced", s);
    auto [ef, regions] = to_elliptic_form(s);
    stages.emplace_back("elliptic", ef);
    auto sk = extract_skeleton(ef);
    return {std::move(stages), std::move(regions), std::move(sk)};
}

}  // namespace legkit
