#include "legkit/classify.hpp"

#include <json.hpp>

#include "legkit/errors.hpp"

namespace legkit {

std::string ContactTag::str() const {
    switch (ambient) {
        case TightStandard: return "tight";
        case Overtwisted: return "overtwisted h=" + std::to_string(h);
        case OvertwistedAtInfinity: return "R3 overtwisted at infinity";
    }
    return "?";
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Isotopic: return "isotopic";
        case Status::NotIsotopic: return "not-isotopic";
        case Status::InvalidInvariants: return "invalid-invariants";
        case Status::LooseClass: return "loose-class";
        case Status::ExceptionalClass: return "exceptional-class";
        case Status::NoSuchKnot: return "no-such-knot";
        case Status::Undetermined: return "undetermined-by-this-test";
    }
    return "?";
}

std::string Verdict::json() const {
    nlohmann::ordered_json j;
    j["status"] = status_name(status);
    j["ambient"] = tag.str();
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& inv : inputs) j["inputs"].push_back({{"tb", inv.tb}, {"r", inv.r}});
    j["representative"] = representative ? nlohmann::ordered_json(*representative) : nlohmann::ordered_json(nullptr);
    if (coarse) j["coarsely_equivalent"] = *coarse;
    if (coarse) j["legendrian_isotopic"] = legendrian_isotopic ? nlohmann::ordered_json(*legendrian_isotopic) : nlohmann::ordered_json(nullptr);
    j["citation"] = citation;
    return j.dump(2);
}

Verdict classify_tight_unknot(Invariants a, Invariants b) {
    Verdict v{Status::InvalidInvariants, ContactTag::tight(), {a, b}, std::nullopt,
              "Legendrian unknots in the standard tight contact structure are classified by (tb, r); "
              "realizable pairs have tb <= -1, |r| <= -tb-1 and tb+r odd",
              std::nullopt, std::nullopt};
    if (!in_unknot_range(a) || !in_unknot_range(b)) return v;
    if (a == b) {
        v.status = Status::Isotopic;
        v.representative = serialize(build_front(catalog_tree(a)));
    } else {
        v.status = Status::NotIsotopic;
    }
    return v;
}

Verdict loose_check(const ContactTag& tag, int tb, bool topologically_trivial) {
    if (!tag.is_overtwisted()) throw Error(Err::NotOvertwisted, "looseness is only defined in an overtwisted structure");
    Verdict v{Status::Undetermined, tag, {}, std::nullopt,
              "a topologically trivial Legendrian knot with tb <= 0 in an overtwisted structure is loose "
              "(one-directional: tb > 0 is not decided here)",
              std::nullopt, std::nullopt};
    if (topologically_trivial && tb <= 0) v.status = Status::LooseClass;
    return v;
}

Verdict classify_loose(const ContactTag& tag, Invariants a, Invariants b) {
    Verdict v{Status::Undetermined, tag, {a, b}, std::nullopt,
              "loose unknots are coarsely equivalent iff they share (tb, r); for tb < 0, or in R3 overtwisted at "
              "infinity, coarse equivalence is Legendrian isotopy",
              std::nullopt, std::nullopt};
    if (!tag.is_overtwisted()) return v;
    const bool same = a == b;
    v.coarse = same;
    v.status = same ? Status::LooseClass : Status::NotIsotopic;
    if (!same) v.legendrian_isotopic = false;
    else if (a.tb < 0 || tag.ambient == ContactTag::OvertwistedAtInfinity) v.legendrian_isotopic = true;
    return v;
}

bool ExceptionalClasses::contains(Invariants inv) const {
    if (h_ != -1) return false;
    if (inv.tb == 1 && inv.r == 0) return true;
    return inv.tb >= 2 && std::abs(inv.r) == inv.tb - 1;
}

std::vector<Invariants> ExceptionalClasses::take(std::size_t count) const {
    std::vector<Invariants> out;
    if (h_ != -1) return out;
    if (count > 0) out.push_back({1, 0});
    for (int n = 2; out.size() < count; ++n) {
        out.push_back({n, n - 1});
        if (out.size() < count) out.push_back({n, -(n - 1)});  // the same knot, opposite orientation
    }
    return out;
}

ExceptionalClasses exceptional_unknot_classes(int h) { return ExceptionalClasses(h); }

std::int64_t hopf_after_lutz(const std::vector<std::int64_t>& sl, const std::vector<std::vector<std::int64_t>>& lk) {
    const std::size_t k = sl.size();
    if (k == 0) throw Error(Err::DimensionMismatch, "need at least one component");
    if (lk.size() != k) throw Error(Err::DimensionMismatch, "linking matrix has " + std::to_string(lk.size()) + " rows, expected " + std::to_string(k));
    for (const auto& row : lk)
        if (row.size() != k) throw Error(Err::DimensionMismatch, "linking matrix is not square");
    std::int64_t h = 0;
    for (std::size_t i = 0; i < k; ++i) {
        h += sl[i];
        for (std::size_t j = i + 1; j < k; ++j) {
            if (lk[i][j] != lk[j][i])
                throw Error(Err::DimensionMismatch, "linking matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            h += 2 * lk[i][j];
        }
    }
    return h;
}

std::int64_t hopf_after_lutz_front(const FrontDiagram& f) {
    const auto of = orient(f);
    std::vector<std::int64_t> sl;
    for (const auto& inv : invariants(of)) sl.push_back(inv.tb - inv.r);
    std::vector<std::vector<std::int64_t>> lk;
    for (const auto& row : linking_matrix(of)) lk.emplace_back(row.begin(), row.end());
    return hopf_after_lutz(sl, lk);
}

Rational d3_from_hopf(std::int64_t h) { return Rational(-2 * h - 1, 2); }

std::int64_t hopf_from_d3(const Rational& d3) {
    if (d3.den() != 2) throw Error(Err::OutOfRange, "d3 = " + d3.str() + " is not of the form -h - 1/2");
    return (-d3.num() - 1) / 2;
}

TorusData complement_torus_data(std::int64_t n) {
    if (n == 0) throw Error(Err::ZeroSlope, "the dividing slope must be nonzero");
    TorusData t{{-n, 1}, n, 0, 0, "the ruling-curve pushoff has rotation number -r(L)"};
    auto wedge = [](std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1) { return a0 * b1 - a1 * b0; };
    t.wedge_theta = wedge(1, 0, t.meridian[0], t.meridian[1]);
    t.wedge_x = wedge(0, 1, t.meridian[0], t.meridian[1]);
    return t;
}

}  // namespace legkit
