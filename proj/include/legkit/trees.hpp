#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "legkit/front.hpp"

namespace legkit {

// exact coordinates for tree embeddings; normalized, den > 0
class Rational {
public:
    Rational(std::int64_t n = 0, std::int64_t d = 1);
    static Rational parse(std::string_view s);  // "3", "-0.25", "7/4"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_, den_;
};

struct TreeVertex {
    int id;
    Rational x, y;
    int sign;  // +1 / -1
};

struct TreeEdge {
    int a, b;  // vertex ids
};

class SignedTree {
public:
    SignedTree() = default;
    // throws NotATree / BadSigning
    SignedTree(std::vector<TreeVertex> v, std::vector<TreeEdge> e);

    const std::vector<TreeVertex>& vertices() const { return v_; }
    const std::vector<TreeEdge>& edges() const { return e_; }
    int size() const { return static_cast<int>(v_.size()); }
    int index_of(int id) const;  // throws OutOfRange
    const TreeVertex& vertex(int id) const { return v_[index_of(id)]; }
    std::vector<int> neighbors(int id) const;  // ids, sorted
    int degree(int id) const;
    bool is_leaf(int id) const { return degree(id) == 1; }

    int positive() const;
    int negative() const;

private:
    std::vector<TreeVertex> v_;
    std::vector<TreeEdge> e_;
};

SignedTree parse_tree(std::string_view text);
std::string serialize(const SignedTree& t);

// slope bound for tree edges
inline const Rational kEpsilon{1, 2};

// the global sign linking r of the built front to V+ - V-
inline constexpr int kRotationSign = +1;

// throws NotAcceptable(k), k = 1..4 for the listed conditions and 0 for a non-planar embedding
void check_acceptable(const SignedTree& t);
bool is_acceptable(const SignedTree& t);

// leftmost vertex of an acceptable tree
int anchor_of(const SignedTree& t);

// `steps`, if given, receives one line per visited vertex
FrontDiagram build_front(const SignedTree& t, std::vector<std::string>* steps = nullptr);
Invariants expected_invariants(const SignedTree& t);

// relayout with the given end vertex at the far left; children ordered by id, top to bottom
SignedTree canonical_layout(const SignedTree& t, int anchor);

// detaches an end edge from its non-leaf endpoint and hangs it off `target`,
// which must carry the same sign; the result is re-embedded with canonical_layout
SignedTree move_end_edge(const SignedTree& t, TreeEdge edge, int target);

bool is_almost_linear(const SignedTree& t);

struct MoveRecord {
    int leaf;
    int from;
    int to;
    Invariants before;
    Invariants after;
};

struct Normalized {
    SignedTree tree;
    std::vector<MoveRecord> moves;
};

Normalized normalize_to_almost_linear(const SignedTree& t);

// the catalog tree for an unknot class; throws OutOfRange outside the tight unknot range
SignedTree catalog_tree(Invariants inv);
bool in_unknot_range(Invariants inv);

struct CatalogResult {
    FrontDiagram front;
    std::vector<MoveRecord> moves;
};
CatalogResult normalize_front_to_catalog(const SignedTree& t);

// random acceptable tree with `n` vertices, for fuzzing
SignedTree random_acceptable_tree(std::mt19937_64& rng, int n);

}  // namespace legkit
