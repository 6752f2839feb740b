#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "legkit/trees.hpp"

namespace legkit {

namespace {

std::vector<int> children_of(const SignedTree& t, int v, int parent) {
    auto ns = t.neighbors(v);
    ns.erase(std::remove(ns.begin(), ns.end(), parent), ns.end());
    return ns;
}

Rational slope(const TreeVertex& a, const TreeVertex& b) { return (b.y - a.y) / (b.x - a.x); }

}  // namespace

FrontDiagram build_front(const SignedTree& t, std::vector<std::string>* steps) {
    const int a = anchor_of(t);
    std::vector<Event> ev{{EventKind::L, 1}};

    // each internal vertex gets a half twist (one crossing), then its band splits
    std::function<void(int, int, int, int)> emit = [&](int v, int parent, int p, int parity) {
        auto ch = children_of(t, v, parent);
        const int n = static_cast<int>(ch.size());
        auto note = [&](const std::string& what) {
            if (steps) steps->push_back("vertex " + std::to_string(v) + " at " + std::to_string(p) + ": " + what);
        };
        if (n == 0) {
            note("right cusp");
            ev.push_back({EventKind::R, p});
            return;
        }
        ev.push_back({EventKind::X, p});
        parity ^= 1;
        for (int i = 1; i < n; ++i) ev.push_back({EventKind::L, p + 1});
        const auto& tv = t.vertex(v);
        std::sort(ch.begin(), ch.end(), [&](int x, int y) { return slope(tv, t.vertex(x)) > slope(tv, t.vertex(y)); });
        if (parity) std::reverse(ch.begin(), ch.end());
        note("crossing, " + std::to_string(n - 1) + " left cusp(s)");
        for (int i = 0; i < n; ++i) emit(ch[i], v, p + 2 * (n - 1 - i), parity);
    };
    if (steps) steps->push_back("anchor " + std::to_string(a) + ": left cusp at 1");
    emit(t.neighbors(a).front(), a, 1, 0);

    std::map<int, int> orient;
    // a positive anchor needs its cusp traversed upward
    if (t.vertex(a).sign * kRotationSign > 0) orient[0] = -1;
    return FrontDiagram(std::move(ev), std::move(orient));
}

Invariants expected_invariants(const SignedTree& t) {
    return {-(t.size() - 1), kRotationSign * (t.positive() - t.negative())};
}

SignedTree canonical_layout(const SignedTree& t, int anchor) {
    if (!t.is_leaf(anchor)) throw Error(Err::NotEndEdge, "anchor " + std::to_string(anchor) + " is not an end vertex");
    std::map<int, long long> row, depth;
    long long next_row = 0;
    std::function<void(int, int, int)> place = [&](int v, int parent, int d) {
        depth[v] = d;
        auto ch = children_of(t, v, parent);
        if (ch.empty()) {
            row[v] = next_row++;
            return;
        }
        for (int c : ch) place(c, v, d + 1);
        row[v] = row[ch.front()];
    };
    place(anchor, -1, 0);
    long long span = 0;
    for (const auto& e : t.edges()) span = std::max(span, std::abs(row[e.a] - row[e.b]));
    const long long w = 2 * span + 1;
    std::vector<TreeVertex> vs;
    for (const auto& v : t.vertices()) vs.push_back({v.id, Rational(depth[v.id] * w), Rational(-row[v.id]), v.sign});
    return SignedTree(std::move(vs), t.edges());
}

SignedTree move_end_edge(const SignedTree& t, TreeEdge edge, int target) {
    bool has = false;
    for (const auto& e : t.edges()) has = has || (e.a == edge.a && e.b == edge.b) || (e.a == edge.b && e.b == edge.a);
    if (!has) throw Error(Err::OutOfRange, "no edge " + std::to_string(edge.a) + "-" + std::to_string(edge.b));
    int leaf, attach;
    if (t.is_leaf(edge.b) && !t.is_leaf(edge.a)) {
        leaf = edge.b;
        attach = edge.a;
    } else if (t.is_leaf(edge.a) && !t.is_leaf(edge.b)) {
        leaf = edge.a;
        attach = edge.b;
    } else if (t.is_leaf(edge.a)) {
        throw Error(Err::OutOfRange, "a single edge has nowhere to move");
    } else {
        throw Error(Err::NotEndEdge, "edge " + std::to_string(edge.a) + "-" + std::to_string(edge.b) + " is not an end edge");
    }
    t.index_of(target);
    if (target == leaf) throw Error(Err::OutOfRange, "cannot attach a vertex to itself");
    if (t.vertex(target).sign != t.vertex(attach).sign)
        throw Error(Err::SignMismatch, "vertex " + std::to_string(target) + " has the wrong sign");

    std::vector<TreeEdge> es;
    for (const auto& e : t.edges()) {
        if ((e.a == leaf && e.b == attach) || (e.a == attach && e.b == leaf)) es.push_back({target, leaf});
        else es.push_back(e);
    }
    SignedTree moved(t.vertices(), std::move(es));
    // keep the old leftmost vertex as anchor unless it just stopped being a leaf
    int anchor = std::min_element(t.vertices().begin(), t.vertices().end(), [](const auto& a, const auto& b) { return a.x < b.x; })->id;
    if (!moved.is_leaf(anchor)) {
        anchor = -1;
        for (const auto& v : moved.vertices())
            if (moved.is_leaf(v.id) && (anchor < 0 || v.id < anchor)) anchor = v.id;
    }
    return canonical_layout(moved, anchor);
}

bool is_almost_linear(const SignedTree& t) {
    int hub = -1;
    for (const auto& v : t.vertices()) {
        if (t.degree(v.id) > 2) {
            if (hub >= 0) return false;
            hub = v.id;
        }
    }
    if (hub < 0) return true;
    int inner = 0;
    for (int n : t.neighbors(hub)) inner += !t.is_leaf(n);
    return inner <= 1;
}

}  // namespace legkit
