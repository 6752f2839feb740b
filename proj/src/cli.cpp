#include "legkit/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "legkit/classify.hpp"
#include "legkit/errors.hpp"
#include "legkit/foliation.hpp"
#include "legkit/lift.hpp"
#include "legkit/render.hpp"
#include "legkit/trees.hpp"

namespace legkit {

namespace {

using ojson = nlohmann::ordered_json;

// bad flags or unreadable input; maps to exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in || std::filesystem::is_directory(path)) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Invariants parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("expected tb,r but got '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("expected tb,r but got '" + s + "'");
    }
}

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + s + "'");
        }
    }
    return out;
}

// "1" fills every off-diagonal entry; "0,1;1,0" gives rows explicitly
std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& s, std::size_t k) {
    if (s.find(';') == std::string::npos && s.find(',') == std::string::npos) {
        auto v = parse_list(s).at(0);
        std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, v));
        for (std::size_t i = 0; i < k; ++i) m[i][i] = 0;
        return m;
    }
    std::vector<std::vector<std::int64_t>> m;
    std::stringstream ss(s);
    for (std::string row; std::getline(ss, row, ';');) m.push_back(parse_list(row));
    return m;
}

struct Opts {
    std::string path;
    bool json = false;
    // invariants
    int component = -1;
    std::vector<std::string> orient;
    // catalog / foliate
    int tb = 0, r = 0;
    bool tree = false, front = false, svg = false;
    // tree2front / foliate
    bool normalize = false, trace = false, skeleton = false;
    // render
    std::string format = "svg";
    bool lift_csv = false;
    // classify
    std::string a, b, sl, lk, front_path, d3;
    int hopf = 0, count = 10;
    bool r3 = false, nontrivial = false, hopf_given = false;
    std::optional<int> qtb, qr;
};

FrontDiagram load_front(const std::string& path) { return parse_front(read_file(path)); }

int cmd_invariants(const Opts& o, std::ostream& out) {
    auto d = load_front(o.path);
    for (const auto& spec : o.orient) {
        auto colon = spec.find(':');
        if (colon == std::string::npos || colon + 2 != spec.size() || (spec.back() != '+' && spec.back() != '-'))
            throw UsageError("--orient takes k:+ or k:-");
        d = d.with_orientation(std::stoi(spec.substr(0, colon)), spec.back() == '+' ? 1 : -1);
    }
    const auto f = orient(d);
    const auto inv = invariants(f);
    const auto lk = linking_matrix(f);
    const int n = static_cast<int>(inv.size());
    if (o.component >= n) throw Error(Err::OutOfRange, "front has " + std::to_string(n) + " component(s)");
    auto flags = [](Invariants x) {
        return std::tuple{((x.tb + x.r) % 2 + 2) % 2 == 1, x.tb + std::abs(x.r) <= -1, in_unknot_range(x)};
    };
    if (o.json) {
        ojson j;
        j["components"] = ojson::array();
        for (int k = 0; k < n; ++k) {
            if (o.component >= 0 && k != o.component) continue;
            auto [par, ben, rng] = flags(inv[k]);
            j["components"].push_back({{"index", k}, {"tb", inv[k].tb}, {"r", inv[k].r}, {"parity", par}, {"bennequin", ben}, {"range", rng}});
        }
        j["linking"] = lk;
        out << j.dump(2) << "\n";
        return 0;
    }
    for (int k = 0; k < n; ++k) {
        if (o.component >= 0 && k != o.component) continue;
        auto [par, ben, rng] = flags(inv[k]);
        if (n > 1) out << "component " << k << ": ";
        out << "tb=" << inv[k].tb << " r=" << inv[k].r << " range=" << yes(rng) << " parity=" << yes(par)
            << " bennequin=" << yes(ben) << "\n";
    }
    if (n > 1 && o.component < 0) {
        out << "lk\n";
        for (const auto& row : lk) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "\n";
        }
    }
    return 0;
}

int cmd_catalog(const Opts& o, std::ostream& out) {
    const auto t = catalog_tree({o.tb, o.r});
    if (o.tree) out << serialize(t);
    else if (o.svg) out << render_svg(build_front(t));
    else out << serialize(build_front(t)) << "\n";
    return 0;
}

int cmd_tree2front(const Opts& o, std::ostream& out) {
    const auto t = parse_tree(read_file(o.path));
    check_acceptable(t);
    if (o.normalize) {
        auto res = normalize_front_to_catalog(t);
        if (o.trace) {
            for (const auto& mv : res.moves)
                out << "# move leaf " << mv.leaf << " from " << mv.from << " to " << mv.to << "  tb=" << mv.after.tb
                    << " r=" << mv.after.r << "\n";
        }
        out << serialize(res.front) << "\n";
        return 0;
    }
    std::vector<std::string> steps;
    auto f = build_front(t, o.trace ? &steps : nullptr);
    for (const auto& s : steps) out << "# " << s << "\n";
    out << serialize(f) << "\n";
    return 0;
}

int cmd_foliate(const Opts& o, std::ostream& out) {
    const auto run = run_pipeline(o.tb, o.r);
    const auto& final_state = run.stages.back().second;
    if (o.json) {
        ojson j;
        j["tb"] = o.tb;
        j["r"] = o.r;
        auto point = [&](int id) {
            const auto& x = final_state.at(id);
            return ojson{{"id", id}, {"type", label(x)}};
        };
        j["boundary"] = ojson::array();
        for (int id : final_state.boundary()) j["boundary"].push_back(point(id));
        j["interior"] = ojson::array();
        for (const auto& [id, x] : final_state.singularities())
            if (x.locus == Locus::Interior) j["interior"].push_back(point(id));
        j["links"] = ojson::array();
        for (const auto& k : final_state.links()) j["links"].push_back({{"from", k.from}, {"to", k.to}, {"curve", k.curve}});
        j["regions"] = {{"a", run.regions.count(Region::A)}, {"b", run.regions.count(Region::B)}, {"semi_a", run.regions.count(Region::SemiA)}};
        j["skeleton"] = serialize(run.skeleton.tree);
        j["trace"] = final_state.trace();
        out << j.dump(2) << "\n";
        return 0;
    }
    if (o.trace) {
        for (const auto& line : final_state.trace()) out << line << "\n";
        return 0;
    }
    if (o.skeleton) {
        out << serialize(run.skeleton.tree);
        return 0;
    }
    out << final_state.dump();
    out << "regions a=" << run.regions.count(Region::A) << " b=" << run.regions.count(Region::B)
        << " semi-a=" << run.regions.count(Region::SemiA) << "\n";
    return 0;
}

int emit_verdict(const Verdict& v, bool json, std::ostream& out) {
    if (json) {
        out << v.json() << "\n";
        return 0;
    }
    out << status_name(v.status);
    if (v.coarse) out << " coarse=" << yes(*v.coarse);
    if (v.coarse) out << " legendrian-isotopic=" << (v.legendrian_isotopic ? yes(*v.legendrian_isotopic) : "unknown");
    out << "\n";
    if (v.representative) out << *v.representative << "\n";
    out << "# " << v.citation << "\n";
    return 0;
}

ContactTag ot_tag(const Opts& o) { return o.r3 ? ContactTag::r3_at_infinity() : ContactTag::overtwisted(o.hopf); }

int cmd_classify(const std::string& which, const Opts& o, std::ostream& out) {
    if (which == "tight-unknot") return emit_verdict(classify_tight_unknot(parse_pair(o.a), parse_pair(o.b)), o.json, out);
    if (which == "loose") return emit_verdict(classify_loose(ot_tag(o), parse_pair(o.a), parse_pair(o.b)), o.json, out);
    if (which == "loose-check") {
        if (!o.qtb) throw UsageError("loose-check needs --tb");
        const auto tag = o.r3 ? ContactTag::r3_at_infinity() : o.hopf_given ? ContactTag::overtwisted(o.hopf) : ContactTag::tight();
        return emit_verdict(loose_check(tag, *o.qtb, !o.nontrivial), o.json, out);
    }
    if (which == "exceptional") {
        const auto ex = exceptional_unknot_classes(o.hopf);
        if (o.qtb.has_value() != o.qr.has_value()) throw UsageError("give both --tb and --r, or neither");
        if (o.qtb) {
            const bool member = ex.contains({*o.qtb, *o.qr});
            if (o.json) out << ojson{{"hopf", o.hopf}, {"tb", *o.qtb}, {"r", *o.qr}, {"member", member}}.dump(2) << "\n";
            else out << (member ? "exceptional class exists" : "no exceptional class") << "\n";
            return 0;
        }
        const auto list = ex.take(static_cast<std::size_t>(std::max(0, o.count)));
        if (o.json) {
            ojson j{{"hopf", o.hopf}, {"members", ojson::array()}};
            for (auto inv : list) j["members"].push_back({{"tb", inv.tb}, {"r", inv.r}});
            out << j.dump(2) << "\n";
        } else if (list.empty()) {
            out << "none\n";
        } else {
            for (auto inv : list) out << "tb=" << inv.tb << " r=" << inv.r << "\n";
            out << "...\n";
        }
        return 0;
    }
    if (which == "hopf-lutz") {
        std::int64_t h;
        if (!o.front_path.empty()) {
            h = hopf_after_lutz_front(load_front(o.front_path));
        } else {
            if (o.sl.empty() || o.lk.empty()) throw UsageError("hopf-lutz needs --front, or --sl with --lk");
            auto sl = parse_list(o.sl);
            h = hopf_after_lutz(sl, parse_matrix(o.lk, sl.size()));
        }
        if (o.json) out << ojson{{"value", h}}.dump(2) << "\n";
        else out << h << "\n";
        return 0;
    }
    if (which == "d3") {
        std::string value;
        if (!o.d3.empty()) {
            Rational q;
            try {
                q = Rational::parse(o.d3);
            } catch (const std::exception&) {
                throw UsageError("--d3 takes a rational such as 1/2");
            }
            value = std::to_string(hopf_from_d3(q));
        } else {
            if (!o.hopf_given) throw UsageError("d3 needs --hopf or --d3");
            value = d3_from_hopf(o.hopf).str();
            if (auto r = d3_from_hopf(o.hopf); r.den() == 2) value = std::to_string(r.num()) + "/2";
        }
        if (o.json) out << ojson{{"value", value}}.dump(2) << "\n";
        else out << value << "\n";
        return 0;
    }
    throw UsageError("unknown classify subject " + which);
}

int cmd_render(const Opts& o, std::ostream& out) {
    const auto d = load_front(o.path);
    if (o.lift_csv) {
        write_csv(out, legendrian_lift(realize_front(d), 0));  // first component
        return 0;
    }
    if (o.format == "ascii") out << render_ascii(d);
    else out << render_svg(d);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Legendrian unknot toolkit"};
    app.name("legkit");
    app.require_subcommand(1);
    Opts o;

    auto* inv = app.add_subcommand("invariants", "tb, r and linking numbers of a front");
    inv->add_option("path", o.path, "front file (.lfd)")->required();
    inv->add_option("--component", o.component, "report one component only");
    inv->add_option("--orient", o.orient, "orientation override k:+ or k:-");
    inv->add_flag("--json", o.json);

    auto* cat = app.add_subcommand("catalog", "canonical front for (tb, r)");
    cat->add_option("--tb", o.tb)->required();
    cat->add_option("--r", o.r)->required();
    auto* g = cat->add_option_group("output");
    g->add_flag("--tree", o.tree);
    g->add_flag("--front", o.front);
    g->add_flag("--svg", o.svg);
    g->require_option(0, 1);

    auto* t2f = app.add_subcommand("tree2front", "front of a signed planar tree (.sat)");
    t2f->add_option("path", o.path)->required();
    t2f->add_flag("--normalize", o.normalize, "normalize to the catalog front");
    t2f->add_flag("--trace", o.trace, "one comment line per step or move");

    auto* fol = app.add_subcommand("foliate", "foliation pipeline for (tb, r)");
    fol->add_option("--tb", o.tb)->required();
    fol->add_option("--r", o.r)->required();
    fol->add_flag("--trace", o.trace, "every rewrite with its ledger");
    fol->add_flag("--skeleton", o.skeleton, "emit the skeleton tree");
    fol->add_flag("--json", o.json);

    auto* cls = app.add_subcommand("classify", "classification queries");
    cls->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> subjects;
    for (const char* name : {"tight-unknot", "loose", "loose-check", "exceptional", "hopf-lutz", "d3"})
        subjects.emplace_back(name, cls->add_subcommand(name));
    for (auto& [name, sub] : subjects) sub->add_flag("--json", o.json);
    auto subject = [&](const std::string& n) {
        for (auto& [name, sub] : subjects)
            if (name == n) return sub;
        return static_cast<CLI::App*>(nullptr);
    };
    subject("tight-unknot")->add_option("--a", o.a, "tb,r")->required();
    subject("tight-unknot")->add_option("--b", o.b, "tb,r")->required();
    for (const char* n : {"loose", "loose-check"}) {
        subject(n)->add_option("--hopf", o.hopf, "Hopf invariant of the overtwisted structure");
        subject(n)->add_flag("--r3-infinity", o.r3, "R^3 overtwisted at infinity");
    }
    subject("loose")->add_option("--a", o.a)->required();
    subject("loose")->add_option("--b", o.b)->required();
    subject("loose-check")->add_option("--tb", o.qtb);
    subject("loose-check")->add_flag("--nontrivial", o.nontrivial, "the knot is not topologically trivial");
    subject("exceptional")->add_option("--hopf", o.hopf)->required();
    subject("exceptional")->add_option("--tb", o.qtb);
    subject("exceptional")->add_option("--r", o.qr);
    subject("exceptional")->add_option("--count", o.count, "how many classes to list");
    subject("hopf-lutz")->add_option("--front", o.front_path);
    subject("hopf-lutz")->add_option("--sl", o.sl, "self-linking numbers, comma separated");
    subject("hopf-lutz")->add_option("--lk", o.lk, "one value for all pairs, or rows 0,1;1,0");
    subject("d3")->add_option("--hopf", o.hopf);
    subject("d3")->add_option("--d3", o.d3, "invert: Hopf invariant from d3");

    auto* ren = app.add_subcommand("render", "draw a front");
    ren->add_option("path", o.path)->required();
    ren->add_option("--format", o.format)->check(CLI::IsMember({"svg", "ascii"}));
    ren->add_flag("--lift-csv", o.lift_csv, "sampled Legendrian lift as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (const char* n : {"loose", "loose-check", "d3"}) o.hopf_given = o.hopf_given || subject(n)->count("--hopf") > 0;

    try {
        if (*inv) return cmd_invariants(o, out);
        if (*cat) return cmd_catalog(o, out);
        if (*t2f) return cmd_tree2front(o, out);
        if (*fol) return cmd_foliate(o, out);
        if (*ren) return cmd_render(o, out);
        for (auto& [name, sub] : subjects)
            if (*sub) return cmd_classify(name, o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace legkit
