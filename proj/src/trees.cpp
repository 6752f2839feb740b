#include "legkit/trees.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace legkit {

// ---- Rational ----

namespace {

using i128 = __int128;

Rational make(i128 n, i128 d) {
    if (d == 0) throw Error(Err::OutOfRange, "division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    constexpr i128 lim = static_cast<i128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw Error(Err::OutOfRange, "rational overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw Error(Err::OutOfRange, "zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_, static_cast<i128>(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}
std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("bad number '" + std::string(s) + "'"); };
    auto to_i64 = [&](std::string_view t) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || p != t.data() + t.size() || t.empty()) throw bad();
        return v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto d = to_i64(s.substr(slash + 1));
        if (d == 0) throw bad();
        return Rational(to_i64(s.substr(0, slash)), d);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view ip = s.substr(0, dot), fp = dot == std::string_view::npos ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
    if (fp.size() > 15 || ip.size() > 15) throw bad();
    for (char c : ip)
        if (c < '0' || c > '9') throw bad();
    for (char c : fp)
        if (c < '0' || c > '9') throw bad();
    std::int64_t den = 1, num = ip.empty() ? 0 : to_i64(ip);
    for (char c : fp) {
        den *= 10;
        num = num * 10 + (c - '0');
    }
    return Rational(neg ? -num : num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    // exact decimal when the denominator allows it
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) d /= 2, ++twos;
    while (d % 5 == 0) d /= 5, ++fives;
    if (d != 1 || std::max(twos, fives) > 15) return std::to_string(num_) + "/" + std::to_string(den_);
    int digits = std::max(twos, fives);
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 n = static_cast<i128>(num_) * (scale / den_);
    bool neg = n < 0;
    if (neg) n = -n;
    auto ipart = static_cast<std::int64_t>(n / scale);
    auto fpart = static_cast<std::int64_t>(n % scale);
    std::string f = std::to_string(fpart);
    f.insert(0, digits - f.size(), '0');
    return (neg ? "-" : "") + std::to_string(ipart) + "." + f;
}

// ---- SignedTree ----

SignedTree::SignedTree(std::vector<TreeVertex> v, std::vector<TreeEdge> e) : v_(std::move(v)), e_(std::move(e)) {
    std::map<int, int> idx;
    for (int i = 0; i < size(); ++i) {
        if (!idx.emplace(v_[i].id, i).second) throw Error(Err::NotATree, "duplicate vertex " + std::to_string(v_[i].id));
        if (v_[i].sign != 1 && v_[i].sign != -1) throw Error(Err::BadSigning, "vertex sign must be + or -");
    }
    if (v_.empty()) throw Error(Err::NotATree, "no vertices");
    std::vector<int> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& ed : e_) {
        auto ia = idx.find(ed.a), ib = idx.find(ed.b);
        if (ia == idx.end() || ib == idx.end())
            throw Error(Err::NotATree, "edge " + std::to_string(ed.a) + "-" + std::to_string(ed.b) + " names a missing vertex");
        int ra = find(ia->second), rb = find(ib->second);
        if (ra == rb) throw Error(Err::NotATree, "edge " + std::to_string(ed.a) + "-" + std::to_string(ed.b) + " closes a cycle");
        parent[ra] = rb;
    }
    if (static_cast<int>(e_.size()) != size() - 1) throw Error(Err::NotATree, "graph is disconnected");
    for (const auto& ed : e_) {
        if (vertex(ed.a).sign == vertex(ed.b).sign)
            throw Error(Err::BadSigning, "adjacent vertices " + std::to_string(ed.a) + " and " + std::to_string(ed.b) + " share a sign");
    }
}

int SignedTree::index_of(int id) const {
    for (int i = 0; i < size(); ++i)
        if (v_[i].id == id) return i;
    throw Error(Err::OutOfRange, "no vertex " + std::to_string(id));
}

std::vector<int> SignedTree::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& e : e_) {
        if (e.a == id) out.push_back(e.b);
        if (e.b == id) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SignedTree::degree(int id) const {
    int d = 0;
    for (const auto& e : e_) d += (e.a == id) + (e.b == id);
    return d;
}

int SignedTree::positive() const {
    return static_cast<int>(std::count_if(v_.begin(), v_.end(), [](const auto& v) { return v.sign > 0; }));
}
int SignedTree::negative() const { return size() - positive(); }

SignedTree parse_tree(std::string_view text) {
    std::vector<TreeVertex> vs;
    std::vector<TreeEdge> es;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto to_int = [&](const std::string& s, int& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "v") {
            TreeVertex v{};
            if (tok.size() != 5 || !to_int(tok[1], v.id)) throw SyntaxError(lineno, "expected 'v <id> <x> <y> <+|->'");
            try {
                v.x = Rational::parse(tok[2]);
                v.y = Rational::parse(tok[3]);
            } catch (const std::exception& e) {
                throw SyntaxError(lineno, e.what());
            }
            if (tok[4] == "+") v.sign = 1;
            else if (tok[4] == "-") v.sign = -1;
            else throw SyntaxError(lineno, "sign must be + or -");
            vs.push_back(v);
        } else if (tok[0] == "e") {
            TreeEdge e{};
            if (tok.size() != 3 || !to_int(tok[1], e.a) || !to_int(tok[2], e.b)) throw SyntaxError(lineno, "expected 'e <id> <id>'");
            es.push_back(e);
        } else {
            throw SyntaxError(lineno, "unknown record '" + tok[0] + "'");
        }
    }
    return SignedTree(std::move(vs), std::move(es));
}

std::string serialize(const SignedTree& t) {
    std::string out;
    for (const auto& v : t.vertices())
        out += "v " + std::to_string(v.id) + " " + v.x.str() + " " + v.y.str() + (v.sign > 0 ? " +" : " -") + "\n";
    for (const auto& e : t.edges()) out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

// ---- acceptability ----

namespace {

int orientation(const TreeVertex& p, const TreeVertex& q, const TreeVertex& r) {
    auto c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return c > Rational(0) ? 1 : c < Rational(0) ? -1 : 0;
}

bool on_segment(const TreeVertex& p, const TreeVertex& q, const TreeVertex& r) {
    // r collinear with pq, inside its bounding box
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool segments_meet(const TreeVertex& a, const TreeVertex& b, const TreeVertex& c, const TreeVertex& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

void check_acceptable(const SignedTree& t) {
    if (t.edges().empty()) throw NotAcceptable(1, "tree has no edges");
    for (const auto& e : t.edges()) {
        const auto& a = t.vertex(e.a);
        const auto& b = t.vertex(e.b);
        if (a.x == b.x) throw NotAcceptable(2, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " is vertical");
        auto dy = b.y - a.y, dx = b.x - a.x;
        if (dy < Rational(0)) dy = -dy;
        if (dx < Rational(0)) dx = -dx;
        if (!(dy < kEpsilon * dx))
            throw NotAcceptable(2, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " is too steep");
    }
    for (const auto& v : t.vertices()) {
        int left = 0;
        for (int n : t.neighbors(v.id)) left += t.vertex(n).x < v.x;
        if (left > 1) throw NotAcceptable(3, "vertex " + std::to_string(v.id) + " has " + std::to_string(left) + " left edges");
    }
    const auto lm = std::min_element(t.vertices().begin(), t.vertices().end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    if (!t.is_leaf(lm->id)) throw NotAcceptable(4, "leftmost vertex " + std::to_string(lm->id) + " is not an end vertex");

    const auto& es = t.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& e = es[i];
            const auto& f = es[j];
            int shared = -1;
            if (e.a == f.a || e.a == f.b) shared = e.a;
            if (e.b == f.a || e.b == f.b) shared = e.b;
            const auto &a = t.vertex(e.a), &b = t.vertex(e.b), &c = t.vertex(f.a), &d = t.vertex(f.b);
            if (shared >= 0) {
                // only a collinear overlap counts
                const auto& o = t.vertex(shared);
                const auto& p = t.vertex(e.a == shared ? e.b : e.a);
                const auto& q = t.vertex(f.a == shared ? f.b : f.a);
                if (orientation(o, p, q) == 0 && (on_segment(o, p, q) || on_segment(o, q, p)))
                    throw NotAcceptable(0, "edges overlap at vertex " + std::to_string(shared));
                continue;
            }
            if (segments_meet(a, b, c, d))
                throw NotAcceptable(0, "edges " + std::to_string(e.a) + "-" + std::to_string(e.b) + " and " + std::to_string(f.a) +
                                           "-" + std::to_string(f.b) + " cross");
        }
    }
}

bool is_acceptable(const SignedTree& t) {
    try {
        check_acceptable(t);
        return true;
    } catch (const Error&) {
        return false;
    }
}

int anchor_of(const SignedTree& t) {
    check_acceptable(t);
    return std::min_element(t.vertices().begin(), t.vertices().end(), [](const auto& a, const auto& b) { return a.x < b.x; })->id;
}

}  // namespace legkit
