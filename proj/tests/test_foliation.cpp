#include "doctest.h"
#include "legkit/foliation.hpp"

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

std::string kinds(const FoliationState& s) {
    std::string out;
    for (int id : s.boundary()) out += label(s.at(id)) + " ";
    return out;
}

int first_of(const FoliationState& s, int sign, Kind k, Locus l) {
    for (const auto& [id, x] : s.singularities())
        if (x.sign == sign && x.kind == k && x.locus == l) return id;
    return -1;
}

}  // namespace

TEST_CASE("boundary initialisation") {
    auto s = init_boundary(-1, 0);
    CHECK(s.boundary().size() == 2);
    CHECK(kinds(s) == "h+ e- ");
    CHECK(s.interior_counts() == Counts{1, 0, 0, 0});

    auto t = init_boundary(-3, 0);
    CHECK(t.boundary().size() == 6);
    CHECK(t.interior_counts() == Counts{2, 0, 0, 1});
    CHECK(t.boundary_in_naf());
    CHECK(t.boundary_alternates());

    CHECK(code_of([] { init_boundary(-2, 0); }) == Err::BadInvariants);
    CHECK(code_of([] { init_boundary(1, 0); }) == Err::BadInvariants);
    CHECK(code_of([] { init_boundary(-3, 4); }) == Err::BadInvariants);
}

TEST_CASE("normal counts after init") {
    for (int tb = -1; tb >= -9; --tb) {
        for (int r = tb + 1; r <= -tb - 1; r += 2) {
            auto s = init_boundary(tb, r);
            auto c = s.interior_counts();
            CHECK(c.e_pos - c.h_pos == (1 - tb + r) / 2);
            CHECK(c.e_neg - c.h_neg == (1 + tb - r) / 2);
            // Poincare-Hopf on the disk, boundary points counted with half weight
            CHECK(s.ledger() == std::pair{1 + r, 1 - r});
        }
    }
}

TEST_CASE("to_naf") {
    auto s = init_boundary(-2, 1);
    CHECK(to_naf(s).dump() == s.dump());
    CHECK(to_naf(s).trace().size() == s.trace().size());

    // (h+, e-, h+, e-) -> (e+, h-, e+, h-) and back
    auto moved = s;
    for (int id : s.boundary()) moved = convert(moved, id, LeafRef::free(), LeafRef::boundary());
    CHECK(kinds(moved) == "e+ h- e+ h- ");
    CHECK(moved.ledger() == s.ledger());
    auto back = to_naf(moved);
    CHECK(kinds(back) == "h+ e- h+ e- ");
    CHECK(back.trace().size() == moved.trace().size() + 4);
    CHECK(back.ledger() == s.ledger());
    CHECK(back.interior_counts() == Counts{4, 2, 2, 3});
}

TEST_CASE("convert") {
    auto s = init_boundary(-3, 0);
    const int u = first_of(s, 1, Kind::Elliptic, Locus::Interior);
    const int w = first_of(s, -1, Kind::Hyperbolic, Locus::Interior);
    auto targets = s.targets_of(u);

    auto c = convert(s, u, LeafRef::to(targets.front()), LeafRef::free());
    auto before = s.interior_counts(), after = c.interior_counts();
    CHECK(after.e_pos - before.e_pos == 1);
    CHECK(after.h_pos - before.h_pos == 1);
    CHECK(c.ledger() == s.ledger());
    CHECK(c.at(u).kind == Kind::Hyperbolic);

    // hyperbolic -> elliptic: gamma must be a stable separatrix of an h-
    const int src = s.sources_of(w).front();
    const int dst = s.targets_of(w).front();
    auto d = convert(s, w, LeafRef::to(src), LeafRef::to(dst));
    CHECK(d.at(w).kind == Kind::Elliptic);
    CHECK(d.interior_counts().e_neg == 1);
    CHECK(d.interior_counts().h_neg == 2);
    CHECK(d.ledger() == s.ledger());

    CHECK(code_of([&] { convert(s, u, LeafRef::free(), LeafRef::free()); }) == Err::BadLeaves);
    CHECK(code_of([&] { convert(s, w, LeafRef::to(dst), LeafRef::to(src)); }) == Err::BadLeaves);
    CHECK(code_of([&] { convert(s, u, LeafRef::to(9999), LeafRef::free()); }) == Err::BadLeaves);
    CHECK(code_of([&] { convert(s, s.boundary()[0], LeafRef::free(), LeafRef::free()); }) == Err::BadLeaves);
}

TEST_CASE("eliminate and create_pair") {
    auto s = init_boundary(-3, 0);
    const int u = first_of(s, 1, Kind::Elliptic, Locus::Interior);
    const int w = first_of(s, -1, Kind::Hyperbolic, Locus::Interior);
    CHECK(code_of([&] { eliminate(s, u, w); }) == Err::SignMismatch);

    const int e = s.boundary()[1];
    auto p = create_pair(s, u, e, 1);
    CHECK(p.ledger() == s.ledger());
    const int n = first_of(p, 1, Kind::Hyperbolic, Locus::Interior);
    CHECK(code_of([&] { eliminate(p, u + 1, n); }) == Err::NotConnected);
    int fresh = -1;
    for (int x : p.sources_of(n))
        if (x != u) fresh = x;
    auto back = eliminate(p, fresh, n);
    CHECK(back.dump() == s.dump());

    // twice on the same leaf family accumulates
    auto twice = create_pair(create_pair(s, u, e, 1), u, e, 1);
    CHECK(twice.interior_counts().e_pos == s.interior_counts().e_pos + 2);
    CHECK(twice.interior_counts().h_pos == 2);

    auto q = create_pair(s, u, e, -1);
    CHECK(q.interior_counts().e_neg == 1);
    CHECK(q.ledger() == s.ledger());
    CHECK(code_of([&] { create_pair(s, u, s.boundary()[0], -1); }) == Err::BadLeaves);
    CHECK(code_of([&] { create_pair(s, e, u, 1); }) == Err::NotConnected);
}

TEST_CASE("singularity curve move") {
    auto s = init_boundary(-1, 0);
    const int u = first_of(s, 1, Kind::Elliptic, Locus::Interior);
    const int e = s.boundary()[1];
    auto on = singularity_curve_move(s, u, e, CurveDirection::ToCurve);
    CHECK(on.dump() != s.dump());
    CHECK(singularity_curve_move(on, u, e, CurveDirection::FromCurve).dump() == s.dump());
    CHECK(code_of([&] { singularity_curve_move(s, u, e, CurveDirection::FromCurve); }) == Err::PatternMismatch);
    CHECK(code_of([&] { singularity_curve_move(s, u, s.boundary()[0], CurveDirection::ToCurve); }) == Err::PatternMismatch);
    CHECK(decompose(on).regions.size() == decompose(s).regions.size());
}

TEST_CASE("reduce_interior") {
    CHECK(reduce_interior(init_boundary(-1, 0)).interior_counts() == Counts{1, 0, 0, 0});
    CHECK(reduce_interior(init_boundary(-3, 0)).interior_counts() == Counts{2, 0, 0, 1});
    auto s = init_boundary(-2, 1);
    CHECK(reduce_interior(s).interior_counts() == Counts{2, 0, 0, 1});

    // an interior conversion is undone
    const int w = first_of(s, -1, Kind::Hyperbolic, Locus::Interior);
    auto d = convert(s, w, LeafRef::to(s.sources_of(w).front()), LeafRef::to(s.targets_of(w).front()));
    CHECK(reduce_interior(d).interior_counts() == Counts{2, 0, 0, 1});
    const int u = first_of(s, 1, Kind::Elliptic, Locus::Interior);
    auto c = convert(s, u, LeafRef::to(s.targets_of(u).front()), LeafRef::free());
    CHECK(reduce_interior(c).interior_counts() == Counts{2, 0, 0, 1});
    CHECK(code_of([&] { reduce_interior(convert(s, s.boundary()[0], LeafRef::free(), LeafRef::boundary())); }) ==
          Err::PatternMismatch);
}

TEST_CASE("elliptic form and skeleton") {
    auto [ef, reg] = to_elliptic_form(init_boundary(-1, 0));
    CHECK(ef.interior_counts() == Counts{1, 0, 0, 0});
    CHECK(kinds(ef) == "h+ e- ");
    CHECK(reg.count(Region::B) == 1);
    CHECK(reg.count(Region::SemiA) == 1);
    CHECK(reg.count(Region::A) == 0);
    auto sk = extract_skeleton(ef);
    CHECK(sk.tree.size() == 2);
    CHECK(sk.tree.positive() == 1);

    auto [e2, r2] = to_elliptic_form(init_boundary(-2, 1));
    auto t2 = extract_skeleton(e2);
    CHECK(t2.tree.size() == 3);
    CHECK(t2.tree.positive() == 2);
    CHECK(is_almost_linear(t2.tree));
    CHECK(to_elliptic_form(e2).first.dump() == e2.dump());

    CHECK(code_of([] { extract_skeleton(init_boundary(-3, 0)); }) == Err::NotEllipticForm);
}

TEST_CASE("pipeline sweep") {
    for (int tb = -1; tb >= -9; --tb) {
        for (int r = tb + 1; r <= -tb - 1; r += 2) {
            CAPTURE(tb);
            CAPTURE(r);
            auto run = run_pipeline(tb, r);
            const auto ledger = run.stages.front().second.ledger();
            for (const auto& [name, st] : run.stages) {
                CAPTURE(name);
                CHECK(st.ledger() == ledger);
                CHECK(st.boundary_alternates());
            }
            CHECK(run.skeleton.tree.size() == 1 - tb);
            CHECK(expected_invariants(run.skeleton.tree) == Invariants{tb, r});
            CHECK(knot_invariants(build_front(run.skeleton.tree)) == Invariants{tb, r});
            CHECK(is_acceptable(run.skeleton.tree));
        }
    }
}
