#include "legkit/front.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace legkit {

char event_letter(EventKind k) {
    switch (k) {
    case EventKind::L: return 'L';
    case EventKind::R: return 'R';
    case EventKind::X: return 'X';
    }
    return '?';
}

namespace {

int count_components(const std::vector<Event>& ev);

}  // namespace

FrontDiagram::FrontDiagram(std::vector<Event> events, std::map<int, int> orient)
    : events_(std::move(events)), orient_(std::move(orient)) {
    if (events_.empty()) throw Error(Err::EmptyDiagram, "front has no events");
    int n = 0;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const auto& e = events_[i];
        bool ok = false;
        switch (e.kind) {
        case EventKind::L: ok = e.pos >= 1 && e.pos <= n + 1; break;
        case EventKind::R:
        case EventKind::X: ok = e.pos >= 1 && e.pos <= n - 1; break;
        }
        if (!ok) {
            throw Error(Err::InvalidPosition, std::string("event ") + std::to_string(i + 1) + " (" +
                                                  event_letter(e.kind) + " " + std::to_string(e.pos) +
                                                  ") with " + std::to_string(n) + " strands");
        }
        if (e.kind == EventKind::L) n += 2;
        if (e.kind == EventKind::R) n -= 2;
        max_strands_ = std::max(max_strands_, n);
    }
    if (n != 0) throw Error(Err::OpenDiagram, std::to_string(n) + " strands left open");
    if (!orient_.empty()) {
        int nc = count_components(events_);
        for (auto [k, s] : orient_) {
            if (k < 0 || k >= nc) throw Error(Err::OutOfRange, "orient: no component " + std::to_string(k));
            if (s != 1 && s != -1) throw Error(Err::OutOfRange, "orient: sign must be +1 or -1");
        }
    }
}

int FrontDiagram::orientation_of(int component) const {
    auto it = orient_.find(component);
    return it == orient_.end() ? 1 : it->second;
}

FrontDiagram FrontDiagram::with_orientation(int component, int sign) const {
    auto o = orient_;
    o[component] = sign;
    return FrontDiagram(events_, std::move(o));
}

FrontDiagram parse_front(std::string_view text) {
    std::vector<Event> ev;
    std::map<int, int> orient;
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
        if (tok[0] == "orient") {
            int k = 0;
            if (tok.size() != 3 || !to_int(tok[1], k) || (tok[2] != "+" && tok[2] != "-"))
                throw SyntaxError(lineno, "expected 'orient <component> <+|->'");
            orient[k] = tok[2] == "+" ? 1 : -1;
            continue;
        }
        if (tok.size() != 2 || tok[0].size() != 1) throw SyntaxError(lineno, "expected '<L|R|X> <position>'");
        EventKind k;
        switch (tok[0][0]) {
        case 'L': k = EventKind::L; break;
        case 'R': k = EventKind::R; break;
        case 'X': k = EventKind::X; break;
        default: throw SyntaxError(lineno, "unknown event '" + tok[0] + "'");
        }
        int p = 0;
        if (!to_int(tok[1], p)) throw SyntaxError(lineno, "bad position '" + tok[1] + "'");
        ev.push_back({k, p});
    }
    return FrontDiagram(std::move(ev), std::move(orient));
}

std::string serialize(const FrontDiagram& d) {
    std::string out;
    for (const auto& e : d.events()) {
        if (!out.empty()) out += '\n';
        out += event_letter(e.kind);
        out += ' ';
        out += std::to_string(e.pos);
    }
    for (auto [k, s] : d.orientation()) {
        out += "\norient " + std::to_string(k) + (s > 0 ? " +" : " -");
    }
    return out;
}

namespace {

struct RawTrace {
    std::vector<Arc> arcs;
    std::vector<Cusp> cusps;
    std::vector<Crossing> crossings;
};

RawTrace raw_trace(const std::vector<Event>& ev) {
    RawTrace t;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(ev.size()); ++i) {
        const int p = ev[i].pos - 1;
        switch (ev[i].kind) {
        case EventKind::L: {
            int lo = static_cast<int>(t.arcs.size());
            t.arcs.push_back({i, -1});
            t.arcs.push_back({i, -1});
            stack.insert(stack.begin() + p, {lo, lo + 1});
            t.cusps.push_back({i, true, lo, lo + 1});
            break;
        }
        case EventKind::R: {
            int lo = stack[p], up = stack[p + 1];
            t.arcs[lo].right_event = i;
            t.arcs[up].right_event = i;
            stack.erase(stack.begin() + p, stack.begin() + p + 2);
            t.cusps.push_back({i, false, lo, up});
            break;
        }
        case EventKind::X:
            t.crossings.push_back({i, stack[p], stack[p + 1]});
            std::swap(stack[p], stack[p + 1]);
            break;
        }
    }
    return t;
}

// partner[a][0]: other arc at a's left cusp, partner[a][1]: at its right cusp
std::vector<std::vector<int>> cycles(const RawTrace& t, std::vector<Arc>& arcs) {
    const int na = static_cast<int>(arcs.size());
    std::vector<std::array<int, 2>> partner(na, {-1, -1});
    for (const auto& c : t.cusps) {
        int side = c.left ? 0 : 1;
        partner[c.lower][side] = c.upper;
        partner[c.upper][side] = c.lower;
    }
    std::vector<std::vector<int>> comps;
    for (int a = 0; a < na; ++a) {
        if (arcs[a].component >= 0) continue;
        int k = static_cast<int>(comps.size());
        comps.emplace_back();
        // leave the min arc rightward, i.e. through its right cusp
        int cur = a, side = 1;
        do {
            arcs[cur].component = k;
            comps[k].push_back(cur);
            cur = partner[cur][side];
            side ^= 1;
        } while (cur != a);
    }
    return comps;
}

int count_components(const std::vector<Event>& ev) {
    auto t = raw_trace(ev);
    return static_cast<int>(cycles(t, t.arcs).size());
}

}  // namespace

Decomposition trace(const FrontDiagram& d) {
    auto t = raw_trace(d.events());
    Decomposition dec;
    dec.components = cycles(t, t.arcs);
    dec.arcs = std::move(t.arcs);
    dec.cusps = std::move(t.cusps);
    dec.crossings = std::move(t.crossings);
    return dec;
}

std::vector<int> stack_before(const FrontDiagram& d, int b) {
    std::vector<int> stack;
    int next_arc = 0;
    for (int i = 0; i < b; ++i) {
        const auto& e = d.events()[i];
        const int p = e.pos - 1;
        if (e.kind == EventKind::L) {
            stack.insert(stack.begin() + p, {next_arc, next_arc + 1});
            next_arc += 2;
        } else if (e.kind == EventKind::R) {
            stack.erase(stack.begin() + p, stack.begin() + p + 2);
        } else {
            std::swap(stack[p], stack[p + 1]);
        }
    }
    return stack;
}

int OrientedFront::kappa(const Cusp& c) const {
    // left cusp: leaving along the lower branch means coming down, -1
    return c.left ? -dir[c.lower] : dir[c.lower];
}

int OrientedFront::orientation_sign(const Crossing& x) const {
    return dir[x.rising] * dir[x.falling] < 0 ? 1 : -1;
}

int OrientedFront::crossing_sign(const Crossing& x) const { return -orientation_sign(x); }

OrientedFront orient(const FrontDiagram& d) {
    OrientedFront f{d, trace(d), {}};
    f.dir.assign(f.dec.arcs.size(), 0);
    for (int k = 0; k < f.dec.count(); ++k) {
        int s = d.orientation_of(k);
        for (int arc : f.dec.components[k]) {
            f.dir[arc] = s;
            s = -s;
        }
    }
    return f;
}

std::vector<Invariants> invariants(const OrientedFront& f) {
    const int nc = f.dec.count();
    std::vector<int> or_sum(nc, 0), cusps(nc, 0), kappa2(nc, 0);
    for (const auto& x : f.dec.crossings) {
        int a = f.dec.arcs[x.rising].component, b = f.dec.arcs[x.falling].component;
        if (a == b) or_sum[a] += f.orientation_sign(x);
    }
    for (const auto& c : f.dec.cusps) {
        int k = f.dec.arcs[c.lower].component;
        ++cusps[k];
        kappa2[k] += f.kappa(c);
    }
    std::vector<Invariants> out;
    for (int k = 0; k < nc; ++k) out.push_back({-or_sum[k] - cusps[k] / 2, kappa2[k] / 2});
    return out;
}

std::vector<Invariants> invariants(const FrontDiagram& d) { return invariants(orient(d)); }

Invariants knot_invariants(const FrontDiagram& d) {
    auto inv = invariants(d);
    if (inv.size() != 1) throw Error(Err::OutOfRange, "expected a knot, got " + std::to_string(inv.size()) + " components");
    return inv[0];
}

std::vector<std::vector<int>> linking_matrix(const OrientedFront& f) {
    const int nc = f.dec.count();
    std::vector<std::vector<int>> twice(nc, std::vector<int>(nc, 0));
    for (const auto& x : f.dec.crossings) {
        int a = f.dec.arcs[x.rising].component, b = f.dec.arcs[x.falling].component;
        if (a == b) continue;
        int s = f.crossing_sign(x);
        twice[a][b] += s;
        twice[b][a] += s;
    }
    for (auto& row : twice)
        for (auto& v : row) v /= 2;
    return twice;
}

int transverse_self_linking(const OrientedFront& f, int component, Pushoff p) {
    auto inv = invariants(f);
    if (component < 0 || component >= static_cast<int>(inv.size()))
        throw Error(Err::OutOfRange, "no component " + std::to_string(component));
    const auto [tb, r] = inv[component];
    return p == Pushoff::Plus ? tb - r : tb + r;
}

}  // namespace legkit
