#include <random>

#include "doctest.h"
#include "legkit/trees.hpp"

using namespace legkit;

namespace {

Err code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Err::OutOfRange;
}

int condition_of(const char* text) {
    try {
        check_acceptable(parse_tree(text));
    } catch (const NotAcceptable& e) {
        return e.condition();
    }
    return -1;
}

const char* kPath3 = "v 0 0 0 +\nv 1 1 0 -\nv 2 2 0 +\ne 0 1\ne 1 2\n";
const char* kPath5 = "v 0 0 0 +\nv 1 1 0 -\nv 2 2 0 +\nv 3 3 0 -\nv 4 4 0 +\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n";
// binary tree: root 1 with children 2, 3 each with two leaves, anchor 0 on the left
const char* kBinary =
    "v 0 0 0 -\nv 1 4 0 +\nv 2 8 1 -\nv 3 8 -1 -\nv 4 12 2 +\nv 5 12 1 +\nv 6 12 -1 +\nv 7 12 -2 +\n"
    "e 0 1\ne 1 2\ne 1 3\ne 2 4\ne 2 5\ne 3 6\ne 3 7\n";

}  // namespace

TEST_CASE("rationals") {
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational(-1, 4).str() == "-0.25");
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS(Rational::parse("1.2.3"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("tree parsing") {
    auto t = parse_tree(kPath3);
    CHECK(t.size() == 3);
    CHECK(t.positive() == 2);
    CHECK(parse_tree(serialize(t)).vertices().size() == 3);
    CHECK(serialize(parse_tree(serialize(t))) == serialize(t));

    try {
        parse_tree("v 0 0 0 +\nv 1 1 0 x\n");
        FAIL("bad sign accepted");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
    }
    CHECK(code_of([] { parse_tree("v 0 0 0 +\nv 1 1 0 -\nv 2 2 0 +\ne 0 1\n"); }) == Err::NotATree);
    CHECK(code_of([] { parse_tree("v 0 0 0 +\nv 1 1 0 -\ne 0 1\ne 1 0\n"); }) == Err::NotATree);
    CHECK(code_of([] { parse_tree("v 0 0 0 +\nv 1 1 0 -\ne 0 5\n"); }) == Err::NotATree);
    CHECK(code_of([] { parse_tree("v 0 0 0 +\nv 1 1 0 +\ne 0 1\n"); }) == Err::BadSigning);
}

TEST_CASE("acceptability conditions") {
    CHECK(condition_of(kPath3) == -1);
    CHECK(condition_of("v 0 0 0 +\n") == 1);
    CHECK(condition_of("v 0 0 0 +\nv 1 0 1 -\ne 0 1\n") == 2);          // vertical
    CHECK(condition_of("v 0 0 0 +\nv 1 1 0.5 -\ne 0 1\n") == 2);        // slope exactly 1/2
    CHECK(condition_of("v 0 0 0 +\nv 1 1 0.49 -\ne 0 1\n") == -1);
    // vertex 2 has two left neighbours
    CHECK(condition_of("v 0 0 0 +\nv 1 1 0 -\nv 2 2 0.2 +\nv 3 1 0.3 -\ne 0 1\ne 1 2\ne 2 3\n") == 3);
    // leftmost vertex has two edges
    CHECK(condition_of("v 0 0 0 +\nv 1 1 0 -\nv 2 1 0.4 -\ne 0 1\ne 0 2\n") == 4);
    // two edges crossing
    CHECK(condition_of("v 0 0 0 +\nv 1 1 0 -\nv 2 5 1 +\nv 3 5 -1 +\nv 4 13 -1 -\nv 5 13 1 -\n"
                       "e 0 1\ne 1 2\ne 1 3\ne 2 4\ne 3 5\n") == 0);
}

TEST_CASE("tree to front invariants") {
    auto f = build_front(parse_tree(kPath3));
    CHECK(knot_invariants(f) == Invariants{-2, 1});
    CHECK(expected_invariants(parse_tree(kPath3)) == Invariants{-2, 1});
    auto g = build_front(parse_tree("v 0 0 0 -\nv 1 1 0 +\nv 2 2 0 -\ne 0 1\ne 1 2\n"));
    CHECK(knot_invariants(g) == Invariants{-2, -1});
    CHECK(knot_invariants(build_front(parse_tree(kBinary))) == Invariants{-7, 2});
    CHECK(knot_invariants(build_front(parse_tree("v 0 0 0 -\nv 1 1 0 +\ne 0 1\n"))) == Invariants{-1, 0});
}

TEST_CASE("rotation sign is pinned") {
    static_assert(kRotationSign == 1);
    CHECK(knot_invariants(build_front(catalog_tree({-2, 1}))).r == 1);
    CHECK(knot_invariants(build_front(catalog_tree({-2, -1}))).r == -1);
}

TEST_CASE("fuzzed trees") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        int n = std::uniform_int_distribution<int>(2, 14)(rng);
        auto t = random_acceptable_tree(rng, n);
        REQUIRE(is_acceptable(t));
        auto inv = knot_invariants(build_front(t));
        CAPTURE(serialize(t));
        REQUIRE(inv == expected_invariants(t));
        CHECK(((inv.tb + inv.r) % 2 + 2) % 2 == 1);
        CHECK(inv.tb + std::abs(inv.r) <= -1);
    }
}

TEST_CASE("end edge moves") {
    auto t = parse_tree(kPath5);
    auto before = knot_invariants(build_front(t));
    auto m = move_end_edge(t, {3, 4}, 1);
    CHECK(is_acceptable(m));
    CHECK(m.degree(1) == 3);
    CHECK(knot_invariants(build_front(m)) == before);
    CHECK(code_of([&] { move_end_edge(t, {3, 4}, 0); }) == Err::SignMismatch);
    CHECK(code_of([&] { move_end_edge(t, {1, 2}, 3); }) == Err::NotEndEdge);
    CHECK(code_of([&] { move_end_edge(t, {0, 4}, 3); }) == Err::OutOfRange);
}

TEST_CASE("almost linear normalization") {
    auto t = parse_tree(kBinary);
    CHECK_FALSE(is_almost_linear(t));
    auto n = normalize_to_almost_linear(t);
    CHECK(is_almost_linear(n.tree));
    CHECK(n.moves.size() <= 5);
    for (const auto& mv : n.moves) CHECK(mv.before == mv.after);
    CHECK(knot_invariants(build_front(n.tree)) == Invariants{-7, 2});
}

TEST_CASE("catalog trees") {
    CHECK(serialize(build_front(catalog_tree({-1, 0}))) == "L 1\nR 1");
    CHECK_THROWS_AS(catalog_tree({0, 1}), Error);
    CHECK_THROWS_AS(catalog_tree({-3, 3}), Error);
    CHECK_THROWS_AS(catalog_tree({-3, 1}), Error);
    for (int tb = -1; tb >= -8; --tb) {
        for (int r = tb + 1; r <= -tb - 1; r += 2) {
            auto t = catalog_tree({tb, r});
            CHECK(is_acceptable(t));
            CHECK(is_almost_linear(t));
            CHECK(knot_invariants(build_front(t)) == Invariants{tb, r});
        }
    }
}

TEST_CASE("normalization is confluent") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto t = random_acceptable_tree(rng, n);
        auto res = normalize_front_to_catalog(t);
        auto inv = expected_invariants(t);
        CHECK(serialize(res.front) == serialize(build_front(catalog_tree(inv))));
        for (const auto& mv : res.moves) CHECK(mv.before == mv.after);
    }
    // same abstract tree, two different anchors and embeddings
    auto t = parse_tree(kBinary);
    auto other = canonical_layout(t, 7);
    CHECK(serialize(normalize_front_to_catalog(t).front) == serialize(normalize_front_to_catalog(other).front));
}
