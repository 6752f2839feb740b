#include <sstream>

#include "foliation_edit.hpp"

namespace legkit {

std::string label(const Singularity& s) {
    return std::string(s.kind == Kind::Elliptic ? "e" : "h") + (s.sign > 0 ? "+" : "-");
}

const Singularity& FoliationState::at(int id) const {
    auto it = sing_.find(id);
    if (it == sing_.end()) throw Error(Err::OutOfRange, "no singularity " + std::to_string(id));
    return it->second;
}

bool FoliationState::linked(int a, int b) const {
    for (const auto& k : links_)
        if (k.from == a && k.to == b) return true;
    return false;
}

std::vector<int> FoliationState::sources_of(int id) const {
    std::vector<int> out;
    for (const auto& k : links_)
        if (k.to == id) out.push_back(k.from);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FoliationState::targets_of(int id) const {
    std::vector<int> out;
    for (const auto& k : links_)
        if (k.from == id) out.push_back(k.to);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Counts count_where(const std::map<int, Singularity>& sing, Locus where) {
    Counts c;
    for (const auto& [id, s] : sing) {
        if (s.locus != where) continue;
        if (s.kind == Kind::Elliptic) (s.sign > 0 ? c.e_pos : c.e_neg)++;
        else (s.sign > 0 ? c.h_pos : c.h_neg)++;
    }
    return c;
}

}  // namespace

Counts FoliationState::interior_counts() const { return count_where(sing_, Locus::Interior); }
Counts FoliationState::boundary_counts() const { return count_where(sing_, Locus::Boundary); }

std::pair<int, int> FoliationState::ledger() const {
    auto i = interior_counts(), b = boundary_counts();
    return {2 * (i.e_pos - i.h_pos) + (b.e_pos - b.h_pos), 2 * (i.e_neg - i.h_neg) + (b.e_neg - b.h_neg)};
}

bool FoliationState::boundary_in_naf() const {
    for (int id : boundary_) {
        const auto& s = at(id);
        if ((s.sign > 0) != (s.kind == Kind::Hyperbolic)) return false;
    }
    return true;
}

bool FoliationState::boundary_alternates() const {
    const auto n = boundary_.size();
    if (n % 2) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (at(boundary_[i]).sign == at(boundary_[(i + 1) % n]).sign) return false;
    return true;
}

std::string FoliationState::dump() const {
    std::ostringstream os;
    os << "declared tb=" << declared_.tb << " r=" << declared_.r << "\n";
    os << "boundary";
    for (int id : boundary_) os << " " << id << ":" << label(at(id));
    os << "\ninterior";
    for (const auto& [id, s] : sing_)
        if (s.locus == Locus::Interior) os << " " << id << ":" << label(s);
    os << "\n";
    for (const auto& k : links_) os << (k.curve ? "curve " : "link ") << k.from << " " << k.to << "\n";
    return os.str();
}

FoliationState init_boundary(int tb, int r) {
    if (tb >= 0 || ((tb + r) % 2 + 2) % 2 != 1 || std::abs(r) > -tb - 1)
        throw Error(Err::BadInvariants,
                    "no tight unknot disk with tb=" + std::to_string(tb) + " r=" + std::to_string(r));
    StateEditor ed{FoliationState{}};
    ed.declare({tb, r});
    const int E = (1 - tb + r) / 2, B = -tb;

    // interior: a path of positive elliptics joined through negative hyperbolics
    std::vector<int> u, w;
    for (int i = 0; i < E; ++i) u.push_back(ed.add(1, Kind::Elliptic, Locus::Interior));
    for (int i = 0; i + 1 < E; ++i) {
        w.push_back(ed.add(-1, Kind::Hyperbolic, Locus::Interior));
        ed.link(u[i], w[i]);
        ed.link(u[i + 1], w[i]);
    }

    // walk once around the thickened path; every elliptic owns at least one h+ on the boundary
    std::map<int, int> owner;
    int last = -1;
    for (int i = 0; i < E; ++i) {
        const int own = 1 + (i == E - 1 ? B - E : 0);
        for (int k = 0; k < own; ++k) {
            int h = ed.add(1, Kind::Hyperbolic, Locus::Boundary);
            int e = ed.add(-1, Kind::Elliptic, Locus::Boundary);
            ed.boundary().push_back(h);
            ed.boundary().push_back(e);
            ed.link(u[i], h);
            owner[h] = u[i];
            last = e;
        }
        if (i + 1 < E) ed.link(w[i], last);
    }
    for (int i = E - 2; i >= 0; --i) ed.link(w[i], last);  // the far side of the path

    const auto& bd = ed.view().boundary();
    const int n = static_cast<int>(bd.size());
    for (int k = 1; k < n; k += 2) {
        ed.link(owner[bd[k - 1]], bd[k]);
        ed.link(owner[bd[(k + 1) % n]], bd[k]);
    }
    for (int x : u) ed.link(x, last);
    ed.log("init tb=" + std::to_string(tb) + " r=" + std::to_string(r));
    return ed.done();
}

}  // namespace legkit
