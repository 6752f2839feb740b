#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legkit/front.hpp"
#include "legkit/trees.hpp"

namespace legkit {

struct ContactTag {
    enum Ambient { TightStandard, Overtwisted, OvertwistedAtInfinity } ambient = TightStandard;
    int h = 0;  // Hopf invariant of the overtwisted S^3 structure

    static ContactTag tight() { return {TightStandard, 0}; }
    static ContactTag overtwisted(int h) { return {Overtwisted, h}; }
    static ContactTag r3_at_infinity() { return {OvertwistedAtInfinity, 0}; }
    bool is_overtwisted() const { return ambient != TightStandard; }
    std::string str() const;
};

enum class Status { Isotopic, NotIsotopic, InvalidInvariants, LooseClass, ExceptionalClass, NoSuchKnot, Undetermined };

std::string status_name(Status s);

struct Verdict {
    Status status;
    ContactTag tag;
    std::vector<Invariants> inputs;
    std::optional<std::string> representative;  // front text
    std::string citation;
    // loose classification only
    std::optional<bool> coarse;
    std::optional<bool> legendrian_isotopic;

    std::string json() const;  // stable key order
};

Verdict classify_tight_unknot(Invariants a, Invariants b);
Verdict loose_check(const ContactTag& tag, int tb, bool topologically_trivial);
Verdict classify_loose(const ContactTag& tag, Invariants a, Invariants b);

// exceptional (non-loose) unknots in an overtwisted S^3; empty unless h = -1
class ExceptionalClasses {
public:
    explicit ExceptionalClasses(int h) : h_(h) {}
    bool empty() const { return h_ != -1; }
    bool contains(Invariants inv) const;
    // first `count` members in order (1,0), (2,1), (2,-1), (3,2), (3,-2), ...
    std::vector<Invariants> take(std::size_t count) const;
    int hopf() const { return h_; }

private:
    int h_;
};

ExceptionalClasses exceptional_unknot_classes(int h);

std::int64_t hopf_after_lutz(const std::vector<std::int64_t>& sl, const std::vector<std::vector<std::int64_t>>& lk);
std::int64_t hopf_after_lutz_front(const FrontDiagram& f);

Rational d3_from_hopf(std::int64_t h);
std::int64_t hopf_from_d3(const Rational& d3);  // inverse; OutOfRange if d3 is not h-and-a-half

struct TorusData {
    std::int64_t meridian[2];  // in the (e_theta, e_x) basis
    std::int64_t slope;
    std::int64_t wedge_theta;  // e_theta ^ mu
    std::int64_t wedge_x;      // e_x ^ mu
    std::string pushoff_rule;
};

TorusData complement_torus_data(std::int64_t n);

}  // namespace legkit
