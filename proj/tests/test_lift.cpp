#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "legkit/lift.hpp"

using namespace legkit;

namespace {

GeometryParams coarse(int n) {
    GeometryParams g;
    g.samples_per_arc = n;
    return g;
}

// Gauss double integral over polygon midpoints, independent of any front convention
double gauss_linking(const LiftedCurve& a, const LiftedCurve& b) {
    double s = 0;
    const auto na = a.pts.size(), nb = b.pts.size();
    for (std::size_t i = 0; i < na; ++i) {
        const auto& p = a.pts[i];
        const auto& p2 = a.pts[(i + 1) % na];
        double m1[3] = {(p.x + p2.x) / 2, (p.y + p2.y) / 2, (p.z + p2.z) / 2};
        double d1[3] = {p2.x - p.x, p2.y - p.y, p2.z - p.z};
        for (std::size_t j = 0; j < nb; ++j) {
            const auto& q = b.pts[j];
            const auto& q2 = b.pts[(j + 1) % nb];
            double m2[3] = {(q.x + q2.x) / 2, (q.y + q2.y) / 2, (q.z + q2.z) / 2};
            double d2[3] = {q2.x - q.x, q2.y - q.y, q2.z - q.z};
            double r[3] = {m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2]};
            double cr[3] = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0]};
            double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
            s += (r[0] * cr[0] + r[1] * cr[1] + r[2] * cr[2]) / (n * n * n);
        }
    }
    return s / (4 * std::numbers::pi);
}

}  // namespace

TEST_CASE("basic eye lifts to a closed Legendrian curve") {
    auto rf = realize_front(parse_front("L 1\nR 1"));
    auto c = legendrian_lift(rf, 0);
    CHECK(legendrian_residual(c) < 1e-9);
    auto cl = closure_integral(c);
    CHECK(cl.closed);
    CHECK(std::abs(cl.value) < 1e-9);
    auto rot = numeric_rotation(c);
    CHECK(rot.rotation == 0);
    CHECK(rot.residual < 0.01);
}

TEST_CASE("numeric rotation matches the cusp count") {
    for (const char* s : {"L 1\nL 1\nR 2\nR 1", "L 1\nX 1\nR 1", "L 1\nL 2\nR 1\nL 1\nR 2\nR 1"}) {
        auto d = parse_front(s);
        for (int o : {1, -1}) {
            auto dd = d.with_orientation(0, o);
            auto rf = realize_front(dd, coarse(2000));
            auto rot = numeric_rotation(legendrian_lift(rf, 0));
            CAPTURE(s);
            CAPTURE(o);
            CHECK(rot.rotation == knot_invariants(dd).r);
            CHECK(rot.residual < 0.01);
        }
    }
}

TEST_CASE("residual shrinks with more samples") {
    auto d = parse_front("L 1\nL 1\nR 2\nR 1");
    double prev = legendrian_residual(legendrian_lift(realize_front(d, coarse(200)), 0));
    for (int n : {400, 800}) {
        double cur = legendrian_residual(legendrian_lift(realize_front(d, coarse(n)), 0));
        CHECK(cur * 2 <= prev);
        prev = cur;
    }
    double c1 = std::abs(closure_integral(legendrian_lift(realize_front(d, coarse(200)), 0)).value);
    double c2 = std::abs(closure_integral(legendrian_lift(realize_front(d, coarse(400)), 0)).value);
    CHECK(c2 * 2 <= c1);
}

TEST_CASE("truncated curve is reported open") {
    auto c = legendrian_lift(realize_front(parse_front("L 1\nL 1\nR 2\nR 1")), 0);
    c.pts.resize(c.pts.size() / 3);
    c.closed = false;
    auto cl = closure_integral(c);
    CHECK_FALSE(cl.closed);
    CHECK(std::abs(cl.value) > 1e-6);
    CHECK_THROWS_AS(numeric_rotation(c), Error);
}

TEST_CASE("degenerate geometry") {
    GeometryParams g;
    g.height = 0.01;
    CHECK_THROWS_AS(realize_front(parse_front("L 1\nX 1\nR 1"), g), Error);
    g.height = -1;
    CHECK_THROWS_AS(realize_front(parse_front("L 1\nR 1"), g), Error);
}

TEST_CASE("crossing sign agrees with the Gauss linking integral") {
    auto clasp = parse_front("L 1\nL 3\nX 2\nX 2\nR 3\nR 1");
    for (int o : {1, -1}) {
        auto d = clasp.with_orientation(1, o);
        auto rf = realize_front(d, coarse(300));
        double g = gauss_linking(legendrian_lift(rf, 0), legendrian_lift(rf, 1));
        CAPTURE(g);
        CHECK(std::lround(g) == linking_matrix(orient(d))[0][1]);
        CHECK(std::abs(g - std::lround(g)) < 0.05);
    }
}

TEST_CASE("Lagrangian double points of the eye") {
    auto c = legendrian_lift(realize_front(parse_front("L 1\nR 1"), coarse(2000)), 0);
    auto rep = lagrangian_embeddedness_check(c);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.embedded);
    CHECK(std::abs(rep.points[0].area_a) > 1e-3);
    CHECK(std::abs(rep.points[0].area_b) > 1e-3);
}

TEST_CASE("zero area loop is flagged") {
    // a Gerono lemniscate (two opposite lobes, zero net area) through the origin,
    // closed up by a diamond that crosses itself just left of the origin
    LiftedCurve c;
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
        double t = std::numbers::pi + 2 * std::numbers::pi * (i + 0.5) / n;
        c.pts.push_back({1 + std::cos(t), std::sin(t) * std::cos(t), 0});
    }
    for (auto [x, y] : std::initializer_list<std::pair<double, double>>{{-1, 1}, {-2, 0}, {-1, -1}})
        c.pts.push_back({x, y, 0});
    auto rep = lagrangian_embeddedness_check(c, 1e-4);
    CHECK_FALSE(rep.embedded);
    bool flagged = false;
    for (const auto& p : rep.points) flagged = flagged || p.degenerate;
    CHECK(flagged);
}

TEST_CASE("csv output") {
    auto c = legendrian_lift(realize_front(parse_front("L 1\nR 1"), coarse(40)), 0);
    std::ostringstream os;
    write_csv(os, c);
    auto s = os.str();
    CHECK(s.rfind("x,y,z\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == static_cast<long>(c.pts.size()) + 1);
}
