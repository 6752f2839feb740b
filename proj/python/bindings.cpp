#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legkit/classify.hpp"
#include "legkit/errors.hpp"
#include "legkit/foliation.hpp"
#include "legkit/lift.hpp"
#include "legkit/render.hpp"
#include "legkit/trees.hpp"

namespace py = pybind11;
using namespace legkit;

namespace {

using Pair = std::pair<int, int>;

Invariants inv(Pair p) { return {p.first, p.second}; }
Pair pair(Invariants v) { return {v.tb, v.r}; }

std::vector<Pair> front_invariants(const std::string& text) {
    std::vector<Pair> out;
    for (auto v : invariants(parse_front(text))) out.push_back(pair(v));
    return out;
}

py::dict foliate(int tb, int r) {
    auto run = run_pipeline(tb, r);
    const auto& s = run.stages.back().second;
    py::dict d;
    d["dump"] = s.dump();
    d["trace"] = s.trace();
    d["skeleton"] = serialize(run.skeleton.tree);
    d["regions"] = py::dict(py::arg("a") = run.regions.count(Region::A), py::arg("b") = run.regions.count(Region::B),
                            py::arg("semi_a") = run.regions.count(Region::SemiA));
    auto [lp, ln] = s.ledger();
    d["ledger"] = py::make_tuple(lp, ln);
    auto c = s.interior_counts();
    d["interior"] = py::dict(py::arg("e+") = c.e_pos, py::arg("h+") = c.h_pos, py::arg("e-") = c.e_neg, py::arg("h-") = c.h_neg);
    return d;
}

py::dict numeric_check(const std::string& text, int samples) {
    GeometryParams g;
    g.samples_per_arc = samples;
    auto rf = realize_front(parse_front(text), g);
    auto c = legendrian_lift(rf, 0);
    auto rot = numeric_rotation(c);
    py::dict d;
    d["residual"] = legendrian_residual(c);
    d["closure"] = closure_integral(c).value;
    d["rotation"] = rot.rotation;
    d["raw_rotation"] = rot.raw;
    return d;
}

}  // namespace

PYBIND11_MODULE(_legkit, m) {
    m.doc() = "Legendrian unknot toolkit";
    py::register_exception<Error>(m, "LegkitError");

    m.def("invariants", &front_invariants, "per-component (tb, r) of a front given as text");
    m.def("linking_matrix", [](const std::string& text) { return linking_matrix(orient(parse_front(text))); });
    m.def("normalize_text", [](const std::string& text) { return serialize(parse_front(text)); });
    m.def(
        "insert_zigzag",
        [](const std::string& text, int arc, bool up, int slot) {
            return serialize(insert_zigzag(parse_front(text), {arc, slot}, up ? ZigDir::Up : ZigDir::Down));
        },
        py::arg("front"), py::arg("arc"), py::arg("up") = true, py::arg("slot") = -1);

    m.def("catalog_front", [](int tb, int r) { return serialize(build_front(catalog_tree({tb, r}))); });
    m.def("catalog_tree", [](int tb, int r) { return serialize(catalog_tree({tb, r})); });
    m.def("in_unknot_range", [](int tb, int r) { return in_unknot_range({tb, r}); });
    m.def("tree_to_front", [](const std::string& tree) { return serialize(build_front(parse_tree(tree))); });
    m.def("normalize_tree", [](const std::string& tree) { return serialize(normalize_front_to_catalog(parse_tree(tree)).front); });
    m.def("expected_invariants", [](const std::string& tree) { return pair(expected_invariants(parse_tree(tree))); });

    m.def("foliate", &foliate, py::arg("tb"), py::arg("r"));

    m.def("classify_tight_unknot_json", [](Pair a, Pair b) { return classify_tight_unknot(inv(a), inv(b)).json(); });
    m.def("exceptional_member", [](int h, int tb, int r) { return exceptional_unknot_classes(h).contains({tb, r}); });
    m.def("exceptional_take", [](int h, std::size_t n) {
        std::vector<Pair> out;
        for (auto v : exceptional_unknot_classes(h).take(n)) out.push_back(pair(v));
        return out;
    });
    m.def("hopf_after_lutz", &hopf_after_lutz, py::arg("sl"), py::arg("lk"));
    m.def("hopf_after_lutz_front", [](const std::string& text) { return hopf_after_lutz_front(parse_front(text)); });
    m.def("d3_from_hopf", [](std::int64_t h) {
        auto q = d3_from_hopf(h);
        return py::make_tuple(q.num(), q.den());
    });
    m.def("complement_torus_data", [](std::int64_t n) {
        auto t = complement_torus_data(n);
        return py::dict(py::arg("meridian") = py::make_tuple(t.meridian[0], t.meridian[1]), py::arg("slope") = t.slope,
                        py::arg("wedge_theta") = t.wedge_theta, py::arg("wedge_x") = t.wedge_x);
    });

    m.def("numeric_check", &numeric_check, py::arg("front"), py::arg("samples_per_arc") = 10000);
    m.def("render_svg", [](const std::string& text) { return render_svg(parse_front(text)); });
    m.def("render_ascii", [](const std::string& text) { return render_ascii(parse_front(text)); });
}
