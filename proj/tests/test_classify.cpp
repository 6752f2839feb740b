#include <json.hpp>

#include "doctest.h"
#include "legkit/classify.hpp"
#include "legkit/errors.hpp"

using namespace legkit;

TEST_CASE("tight unknot oracle") {
    auto v = classify_tight_unknot({-1, 0}, {-1, 0});
    CHECK(v.status == Status::Isotopic);
    REQUIRE(v.representative);
    CHECK(*v.representative == "L 1\nR 1");
    CHECK(classify_tight_unknot({-3, 0}, {-3, 2}).status == Status::NotIsotopic);
    CHECK(classify_tight_unknot({-2, 0}, {-1, 0}).status == Status::InvalidInvariants);
    CHECK(classify_tight_unknot({-3, 0}, {-2, 0}).status == Status::InvalidInvariants);
    CHECK(classify_tight_unknot({1, 0}, {1, 0}).status == Status::InvalidInvariants);

    // equivalence relation on valid pairs
    std::vector<Invariants> valid;
    for (int tb = -1; tb >= -5; --tb)
        for (int r = tb + 1; r <= -tb - 1; r += 2) valid.push_back({tb, r});
    for (auto a : valid)
        for (auto b : valid) {
            auto ab = classify_tight_unknot(a, b).status, ba = classify_tight_unknot(b, a).status;
            CHECK(ab == ba);
            CHECK((ab == Status::Isotopic) == (a == b));
        }

    auto j = nlohmann::json::parse(v.json());
    CHECK(j["status"] == "isotopic");
    CHECK(j["inputs"][1]["tb"] == -1);
}

TEST_CASE("loose knots") {
    CHECK(loose_check(ContactTag::overtwisted(0), 0, true).status == Status::LooseClass);
    CHECK(loose_check(ContactTag::overtwisted(-1), 1, true).status == Status::Undetermined);
    CHECK(loose_check(ContactTag::overtwisted(3), -2, false).status == Status::Undetermined);
    CHECK_THROWS_AS(loose_check(ContactTag::tight(), 0, true), Error);

    auto same = classify_loose(ContactTag::overtwisted(2), {-4, 1}, {-4, 1});
    CHECK(same.coarse == true);
    CHECK(same.legendrian_isotopic == true);
    auto diff = classify_loose(ContactTag::overtwisted(2), {-4, 1}, {-4, -1});
    CHECK(diff.coarse == false);
    CHECK(diff.status == Status::NotIsotopic);
    auto pos = classify_loose(ContactTag::overtwisted(2), {3, 0}, {3, 0});
    CHECK(pos.coarse == true);
    CHECK_FALSE(pos.legendrian_isotopic.has_value());
    CHECK(classify_loose(ContactTag::r3_at_infinity(), {3, 0}, {3, 0}).legendrian_isotopic == true);
}

TEST_CASE("exceptional unknots") {
    for (int h = -5; h <= 5; ++h)
        if (h != -1) CHECK(exceptional_unknot_classes(h).take(10).empty());
    auto ex = exceptional_unknot_classes(-1);
    CHECK(ex.contains({1, 0}));
    CHECK(ex.contains({3, 2}));
    CHECK(ex.contains({3, -2}));
    CHECK_FALSE(ex.contains({2, 0}));
    CHECK_FALSE(ex.contains({-1, 0}));
    auto first = ex.take(5);
    CHECK(first == std::vector<Invariants>{{1, 0}, {2, 1}, {2, -1}, {3, 2}, {3, -2}});
    for (auto inv : ex.take(99)) CHECK((inv.tb + inv.r) % 2 != 0);
}

TEST_CASE("hopf invariant arithmetic") {
    CHECK(hopf_after_lutz({-1}, {{0}}) == -1);
    CHECK(hopf_after_lutz({-3}, {{0}}) == -3);
    for (int k = 1; k <= 10; ++k) {
        std::vector<std::int64_t> sl(k, -1);
        std::vector<std::vector<std::int64_t>> lk(k, std::vector<std::int64_t>(k, 1));
        CHECK(hopf_after_lutz(sl, lk) == k * (k - 2));
    }
    CHECK_THROWS_AS(hopf_after_lutz({}, {}), Error);
    CHECK_THROWS_AS(hopf_after_lutz({-1, -1}, {{0, 1}}), Error);
    CHECK_THROWS_AS(hopf_after_lutz({-1, -1}, {{0, 1}, {2, 0}}), Error);

    CHECK(hopf_after_lutz_front(parse_front("L 1\nR 1")) == -1);
    CHECK(hopf_after_lutz_front(parse_front("L 1\nL 2\nR 2\nR 1")) == -2);
    auto clasp = parse_front("L 1\nL 3\nX 2\nX 2\nR 3\nR 1").with_orientation(1, -1);
    CHECK(hopf_after_lutz_front(clasp) == 0);
    // the positive transverse pushoff has self-linking tb - r
    auto zig = parse_front("L 1\nL 1\nR 2\nR 1");
    CHECK(hopf_after_lutz_front(zig) == transverse_self_linking(orient(zig), 0, Pushoff::Plus));

    CHECK(d3_from_hopf(-1) == Rational(1, 2));
    CHECK(d3_from_hopf(0) == Rational(-1, 2));
    for (int h = -20; h <= 20; ++h) CHECK(hopf_from_d3(d3_from_hopf(h)) == h);
    CHECK_THROWS_AS(hopf_from_d3(Rational(1)), Error);
}

TEST_CASE("complement torus lattice") {
    auto t = complement_torus_data(2);
    CHECK(t.meridian[0] == -2);
    CHECK(t.meridian[1] == 1);
    CHECK(complement_torus_data(1).wedge_theta == 1);
    for (int n = -20; n <= 20; ++n) {
        if (n == 0) continue;
        auto d = complement_torus_data(n);
        CHECK(d.wedge_theta == 1);
        CHECK(d.wedge_x == n);
        CHECK(d.slope == n);
    }
    try {
        complement_torus_data(0);
        FAIL("zero slope accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Err::ZeroSlope);
    }
}
