#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "legkit/trees.hpp"

namespace legkit {

namespace {

// farthest vertex from `src`, smallest id on ties; fills parent links
int farthest(const SignedTree& t, int src, std::map<int, int>& parent) {
    std::map<int, int> dist{{src, 0}};
    parent.clear();
    parent[src] = -1;
    std::queue<int> q;
    q.push(src);
    int best = src;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
        for (int n : t.neighbors(v)) {
            if (dist.count(n)) continue;
            dist[n] = dist[v] + 1;
            parent[n] = v;
            q.push(n);
        }
    }
    return best;
}

int min_id(const SignedTree& t) {
    int m = t.vertices().front().id;
    for (const auto& v : t.vertices()) m = std::min(m, v.id);
    return m;
}

Invariants front_invariants(const SignedTree& t) { return knot_invariants(build_front(t)); }

int leftmost(const SignedTree& t) {
    return std::min_element(t.vertices().begin(), t.vertices().end(), [](const auto& a, const auto& b) { return a.x < b.x; })->id;
}

// AHU style canonical string of the signed tree rooted at v
std::string encode(const SignedTree& t, int v, int parent) {
    std::vector<std::string> parts;
    for (int n : t.neighbors(v))
        if (n != parent) parts.push_back(encode(t, n, v));
    std::sort(parts.begin(), parts.end());
    std::string s = t.vertex(v).sign > 0 ? "(+" : "(-";
    for (auto& p : parts) s += p;
    return s + ")";
}

std::string canonical_form(const SignedTree& t) {
    // centers: repeatedly strip leaves
    std::map<int, int> deg;
    for (const auto& v : t.vertices()) deg[v.id] = t.degree(v.id);
    std::vector<int> layer;
    for (auto [id, d] : deg)
        if (d <= 1) layer.push_back(id);
    int remaining = t.size();
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int n : t.neighbors(v)) {
                if (--deg[n] == 1) next.push_back(n);
            }
            deg[v] = 0;
        }
        layer = next;
    }
    std::string best;
    for (int c : layer) {
        auto s = encode(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

Normalized normalize_to_almost_linear(const SignedTree& t0) {
    check_acceptable(t0);
    SignedTree t = canonical_layout(t0, leftmost(t0));
    Normalized out{t, {}};
    if (is_almost_linear(t)) return out;

    std::map<int, int> par;
    int a = farthest(t, min_id(t), par);
    int b = farthest(t, a, par);
    std::vector<int> path;
    for (int v = b; v != -1; v = par[v]) path.push_back(v);
    std::map<int, bool> on_path;
    for (int v : path) on_path[v] = true;
    int tail = path.back();
    int head = path[path.size() - 2];

    const int limit = 4 * t.size() * t.size();
    for (int step = 0; !is_almost_linear(t); ++step) {
        if (step > limit) throw std::logic_error("normalization did not terminate");
        int leaf = -1, parent = -1;
        for (const auto& v : t.vertices()) {
            if (on_path[v.id] || !t.is_leaf(v.id)) continue;
            int p = t.neighbors(v.id).front();
            if (p == head) continue;
            if (leaf < 0 || v.id < leaf) {
                leaf = v.id;
                parent = p;
            }
        }
        if (leaf < 0) throw std::logic_error("normalization found no movable leaf");
        int target;
        if (t.vertex(parent).sign == t.vertex(head).sign) {
            target = head;
        } else {
            target = tail;
        }
        MoveRecord rec{leaf, parent, target, front_invariants(t), {}};
        t = move_end_edge(t, {parent, leaf}, target);
        rec.after = front_invariants(t);
        out.moves.push_back(rec);
        if (target == tail) {
            on_path[leaf] = true;
            head = tail;
            tail = leaf;
        }
    }
    out.tree = t;
    return out;
}

bool in_unknot_range(Invariants inv) {
    return inv.tb <= -1 && std::abs(inv.r) <= -inv.tb - 1 && ((inv.tb + inv.r) % 2 + 2) % 2 == 1;
}

SignedTree catalog_tree(Invariants inv) {
    if (!in_unknot_range(inv))
        throw Error(Err::OutOfRange, "(" + std::to_string(inv.tb) + ", " + std::to_string(inv.r) + ") is not a tight unknot class");
    const int v = 1 - inv.tb;
    const int r = kRotationSign * inv.r;
    const int pos = (v + r) / 2, neg = (v - r) / 2;
    const int a = std::min(pos, neg), b = std::max(pos, neg);
    const int major = r > 0 ? 1 : -1;  // r == 0 puts a negative vertex at the anchor
    const int m = b - a;

    std::vector<TreeVertex> vs;
    std::vector<TreeEdge> es;
    for (int i = 0; i < 2 * a; ++i) {
        vs.push_back({i, Rational(i), Rational(0), i % 2 == 0 ? major : -major});
        if (i > 0) es.push_back({i - 1, i});
    }
    const int hub = 2 * a - 1;
    const int d = 2 * m;
    for (int j = 0; j < m; ++j) {
        vs.push_back({2 * a + j, Rational(hub + d), Rational(j), major});
        es.push_back({hub, 2 * a + j});
    }
    return SignedTree(std::move(vs), std::move(es));
}

CatalogResult normalize_front_to_catalog(const SignedTree& t0) {
    auto norm = normalize_to_almost_linear(t0);
    SignedTree t = norm.tree;
    const Invariants inv = front_invariants(t);

    int hub = -1;
    for (const auto& v : t.vertices())
        if (t.degree(v.id) > 2) hub = v.id;
    if (hub >= 0) {
        int inner = -1;
        for (int n : t.neighbors(hub))
            if (!t.is_leaf(n)) inner = n;
        if (inner >= 0) {
            // walk to the far end of the tail
            int prev = hub, cur = inner, len = 2;
            while (!t.is_leaf(cur)) {
                auto ns = t.neighbors(cur);
                int nx = ns[0] == prev ? ns[1] : ns[0];
                prev = cur;
                cur = nx;
                ++len;
            }
            if (len % 2 == 1) {
                int leaf = -1;
                for (int n : t.neighbors(hub))
                    if (t.is_leaf(n) && (leaf < 0 || n < leaf)) leaf = n;
                MoveRecord rec{leaf, hub, cur, inv, {}};
                t = move_end_edge(t, {hub, leaf}, cur);
                rec.after = front_invariants(t);
                norm.moves.push_back(rec);
            }
        }
    }
    const auto cat = catalog_tree(inv);
    if (canonical_form(t) != canonical_form(cat)) throw std::logic_error("normal form is not the catalog shape");
    return {build_front(cat), std::move(norm.moves)};
}

SignedTree random_acceptable_tree(std::mt19937_64& rng, int n) {
    if (n < 2) throw Error(Err::OutOfRange, "a tree needs at least two vertices");
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<int> depth(n, 0);
    std::vector<TreeEdge> es;
    for (int i = 1; i < n; ++i) {
        int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
        depth[i] = depth[p] + 1;
        es.push_back({ids[p], ids[i]});
    }
    const int root_sign = (rng() & 1) ? 1 : -1;
    std::vector<TreeVertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back({ids[i], Rational(0), Rational(0), depth[i] % 2 == 0 ? root_sign : -root_sign});
    SignedTree abstract(std::move(vs), std::move(es));
    std::vector<int> leaves;
    for (const auto& v : abstract.vertices())
        if (abstract.is_leaf(v.id)) leaves.push_back(v.id);
    int anchor = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
    return canonical_layout(abstract, anchor);
}

}  // namespace legkit
