#pragma once

#include <algorithm>
#include <string>

#include "legkit/errors.hpp"
#include "legkit/foliation.hpp"

namespace legkit {

// mutable access to a copy of a state; every rewrite goes through one of these
class StateEditor {
public:
    explicit StateEditor(FoliationState s) : s_(std::move(s)) {}

    const FoliationState& view() const { return s_; }
    Singularity& at(int id) {
        auto it = s_.sing_.find(id);
        if (it == s_.sing_.end()) throw Error(Err::OutOfRange, "no singularity " + std::to_string(id));
        return it->second;
    }

    int add(int sign, Kind k, Locus l) {
        int id = s_.next_id_++;
        s_.sing_[id] = {id, sign, k, l};
        return id;
    }
    void remove(int id) {
        s_.sing_.erase(id);
        std::erase_if(s_.links_, [id](const Link& k) { return k.from == id || k.to == id; });
        std::erase(s_.boundary_, id);
    }
    void link(int a, int b, bool curve = false) {
        if (a == b) throw Error(Err::TightnessViolation, "flow line from " + std::to_string(a) + " to itself");
        if (!s_.linked(a, b)) s_.links_.push_back({a, b, curve});
    }
    void unlink(int a, int b) {
        std::erase_if(s_.links_, [&](const Link& k) { return k.from == a && k.to == b; });
    }
    Link* find(int a, int b) {
        for (auto& k : s_.links_)
            if (k.from == a && k.to == b) return &k;
        return nullptr;
    }
    // re-point every link ending at `from` (or starting at it) to `to`
    void retarget(int from, int to, int skip = -1) {
        auto old = s_.links_;
        std::erase_if(s_.links_, [&](const Link& k) { return (k.to == from && k.from != skip) || (k.from == from && k.to != skip); });
        for (const auto& k : old) {
            if (k.to == from && k.from != skip) link(k.from, to, k.curve);
            if (k.from == from && k.to != skip) link(to, k.to, k.curve);
        }
    }

    std::vector<int>& boundary() { return s_.boundary_; }
    void declare(Invariants inv) { s_.declared_ = inv; }
    void log(std::string line) {
        auto [lp, ln] = s_.ledger();
        s_.trace_.push_back(std::move(line) + "  ledger=(" + std::to_string(lp) + "," + std::to_string(ln) + ")");
    }

    FoliationState done() {
        std::sort(s_.links_.begin(), s_.links_.end());
        return std::move(s_);
    }

private:
    FoliationState s_;
};

}  // namespace legkit
