#include "legkit/lift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <unordered_map>

namespace legkit {

namespace {

struct Waypoint {
    double x, z, y;
};

// samples of one smooth piece, appended to `out` (first point skipped if out nonempty)
void push(ArcSamples& out, double x, double z, double y) {
    out.x.push_back(x);
    out.z.push_back(z);
    out.y.push_back(y);
}

// y linear in x from ya to yb over [a.x, b.x]
void sample_quad(ArcSamples& out, const Waypoint& a, double xb, double yb, int n) {
    const double len = xb - a.x;
    for (int i = 1; i <= n; ++i) {
        double t = len * i / n;
        if (i == n) t = len;
        double y = a.y + (yb - a.y) * t / len;
        double z = a.z + a.y * t + (yb - a.y) * t * t / (2 * len);
        push(out, a.x + t, z, y);
    }
}

// C1 join of two waypoints through two linear-slope pieces
Waypoint connect(ArcSamples& out, const Waypoint& a, const Waypoint& b, int n) {
    const double h = (b.x - a.x) / 2;
    const double ym = (b.z - a.z) / h - (a.y + b.y) / 2;
    const int n1 = std::max(1, n / 2);
    sample_quad(out, a, a.x + h, ym, n1);
    Waypoint mid{out.x.back(), out.z.back(), out.y.back()};
    sample_quad(out, mid, b.x, b.y, std::max(1, n - n1));
    // land exactly on the waypoint height so the next piece starts cleanly
    out.z.back() = b.z;
    out.x.back() = b.x;
    return b;
}

}  // namespace

RealizedFront realize_front(const FrontDiagram& d, const GeometryParams& g) {
    if (!(g.spacing > 0) || !(g.height > 0) || !(g.cusp_rise > 0) || g.cusp_rise >= 0.25 || g.samples_per_arc < 16)
        throw Error(Err::GeometryDegenerate, "geometry parameters out of range");
    const double W = g.spacing, H = g.height;
    const double c = H / W;  // |slope| of both strands at a crossing
    if (2 * c < g.slope_margin)
        throw Error(Err::GeometryDegenerate, "crossing slopes differ by " + std::to_string(2 * c));

    RealizedFront rf{d, trace(d), g, {}};
    const auto& ev = d.events();
    const int m = static_cast<int>(ev.size());
    const int na = static_cast<int>(rf.dec.arcs.size());

    // heights: level[j][arc] = position (1-based) between events j and j+1
    std::vector<std::vector<std::pair<double, Waypoint>>> way(na);
    {
        std::vector<int> stack;
        int next = 0;
        for (int j = 0; j < m; ++j) {
            const int p = ev[j].pos - 1;
            const double xj = j * W;
            if (ev[j].kind == EventKind::L) {
                stack.insert(stack.begin() + p, {next, next + 1});
                next += 2;
            } else if (ev[j].kind == EventKind::R) {
                stack.erase(stack.begin() + p, stack.begin() + p + 2);
            } else {
                const double zc = H * (p + 1.5);
                way[stack[p]].push_back({xj, {xj, zc, c}});
                way[stack[p + 1]].push_back({xj, {xj, zc, -c}});
                std::swap(stack[p], stack[p + 1]);
            }
            if (j + 1 < m) {
                const double xm = xj + W / 2;
                for (int q = 0; q < static_cast<int>(stack.size()); ++q)
                    way[stack[q]].push_back({xm, {xm, H * (q + 1), 0.0}});
            }
        }
    }

    const double delta = W / 8;
    const double s1 = std::sqrt(delta);
    const double rise = g.cusp_rise * H;
    const double k = rise / (s1 * s1 * s1);
    const int ncusp = g.samples_per_arc / 4;

    rf.arcs.resize(na);
    // which side of its cusps each arc leaves from
    std::vector<int> left_sign(na), right_sign(na);
    for (const auto& cu : rf.dec.cusps) {
        (cu.left ? left_sign : right_sign)[cu.lower] = -1;
        (cu.left ? left_sign : right_sign)[cu.upper] = 1;
    }
    std::vector<double> left_z(na), right_z(na);
    for (const auto& cu : rf.dec.cusps) {
        double zc = H * (ev[cu.event].pos + 0.5);
        (cu.left ? left_z : right_z)[cu.lower] = zc;
        (cu.left ? left_z : right_z)[cu.upper] = zc;
    }

    for (int a = 0; a < na; ++a) {
        auto& out = rf.arcs[a];
        const auto& arc = rf.dec.arcs[a];
        const double xl = arc.left_event * W, xr = arc.right_event * W;
        const double sl = left_sign[a], sr = right_sign[a];

        // left semicubical piece, uniform in s
        for (int i = 0; i <= ncusp; ++i) {
            double s = s1 * i / ncusp;
            push(out, xl + s * s, left_z[a] + sl * k * s * s * s, 1.5 * sl * k * s);
        }
        Waypoint cur{out.x.back(), out.z.back(), out.y.back()};

        // right piece endpoint, needed as the last waypoint
        Waypoint end{xr - s1 * s1, right_z[a] + sr * k * s1 * s1 * s1, -1.5 * sr * k * s1};

        auto wps = way[a];
        wps.push_back({end.x, end});
        const double span = end.x - cur.x;
        const int budget = g.samples_per_arc - 2 * ncusp;
        for (const auto& [x, w] : wps) {
            int n = std::max(4, static_cast<int>(budget * (w.x - cur.x) / span));
            cur = connect(out, cur, w, n);
        }

        for (int i = ncusp - 1; i >= 0; --i) {
            double s = s1 * i / ncusp;
            push(out, xr - s * s, right_z[a] + sr * k * s * s * s, -1.5 * sr * k * s);
        }
    }
    return rf;
}

LiftedCurve legendrian_lift(const RealizedFront& rf, int component) {
    if (component < 0 || component >= rf.dec.count())
        throw Error(Err::OutOfRange, "no component " + std::to_string(component));
    LiftedCurve c;
    const auto& arcs = rf.dec.components[component];
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const auto& s = rf.arcs[arcs[k]];
        const int n = static_cast<int>(s.x.size());
        // default orientation: arcs alternate right, left, right...
        // skip the shared cusp point at the start of every arc
        for (int i = 1; i < n; ++i) {
            int idx = k % 2 == 0 ? i : n - 1 - i;
            c.pts.push_back({s.x[idx], s.y[idx], s.z[idx]});
        }
    }
    if (rf.diagram.orientation_of(component) < 0) std::reverse(c.pts.begin(), c.pts.end());
    return c;
}

namespace {

template <class F>
void each_segment(const LiftedCurve& c, F&& f) {
    const std::size_t n = c.pts.size();
    if (n < 2) return;
    const std::size_t segs = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < segs; ++i) f(i, c.pts[i], c.pts[(i + 1) % n]);
}

}  // namespace

double legendrian_residual(const LiftedCurve& c) {
    double worst = 0;
    each_segment(c, [&](std::size_t, const Point3& a, const Point3& b) {
        double r = (b.z - a.z) - 0.5 * (a.y + b.y) * (b.x - a.x);
        worst = std::max(worst, std::abs(r));
    });
    return worst;
}

ClosureResult closure_integral(const LiftedCurve& c) {
    double s = 0;
    each_segment(c, [&](std::size_t, const Point3& a, const Point3& b) { s += 0.5 * (a.y + b.y) * (b.x - a.x); });
    bool closed = c.closed && c.pts.size() >= 3;
    return {s, closed};
}

RotationResult numeric_rotation(const LiftedCurve& c) {
    if (!c.closed) throw Error(Err::NotClosed, "rotation needs a closed curve");
    std::vector<std::pair<double, double>> dirs;
    each_segment(c, [&](std::size_t, const Point3& a, const Point3& b) {
        double dx = b.x - a.x, dy = b.y - a.y;
        if (dx != 0 || dy != 0) dirs.emplace_back(dx, dy);
    });
    if (dirs.size() < 3) throw Error(Err::DegenerateTangent, "curve has no usable tangent");
    double turn = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        auto [ax, ay] = dirs[i];
        auto [bx, by] = dirs[(i + 1) % dirs.size()];
        double cr = ax * by - ay * bx, dt = ax * bx + ay * by;
        if (cr == 0 && dt < 0) throw Error(Err::DegenerateTangent, "tangent reverses at sample " + std::to_string(i));
        turn += std::atan2(cr, dt);
    }
    // measured clockwise: the plane is oriented by dy^dx, matching the cusp sign rule
    double raw = -turn / (2 * std::numbers::pi);
    int r = static_cast<int>(std::lround(raw));
    return {r, raw, std::abs(raw - r)};
}

namespace {

double loop_area(const LiftedCurve& c, std::size_t from_seg, std::size_t to_seg, double qx, double qy) {
    // Q -> P[from+1] -> ... -> P[to] -> Q, indices mod n
    const std::size_t n = c.pts.size();
    double a = 0;
    double px = qx, py = qy;
    for (std::size_t i = (from_seg + 1) % n;; i = (i + 1) % n) {
        a += px * c.pts[i].y - c.pts[i].x * py;
        px = c.pts[i].x;
        py = c.pts[i].y;
        if (i == to_seg % n) break;
    }
    a += px * qy - qx * py;
    return a / 2;
}

}  // namespace

EmbeddednessReport lagrangian_embeddedness_check(const LiftedCurve& c, double tol) {
    EmbeddednessReport rep{{}, true, true};
    const std::size_t n = c.pts.size();
    if (n < 4) return rep;
    const std::size_t segs = c.closed ? n : n - 1;

    double maxlen = 0;
    for (std::size_t i = 0; i < segs; ++i) {
        const auto& a = c.pts[i];
        const auto& b = c.pts[(i + 1) % n];
        maxlen = std::max(maxlen, std::hypot(b.x - a.x, b.y - a.y));
    }
    const double cell = maxlen > 0 ? maxlen : 1.0;
    auto key = [](long long i, long long j) { return (i * 73856093LL) ^ (j * 19349663LL); };
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    auto cells = [&](std::size_t s, auto&& fn) {
        const auto& a = c.pts[s];
        const auto& b = c.pts[(s + 1) % n];
        long long i0 = static_cast<long long>(std::floor(std::min(a.x, b.x) / cell));
        long long i1 = static_cast<long long>(std::floor(std::max(a.x, b.x) / cell));
        long long j0 = static_cast<long long>(std::floor(std::min(a.y, b.y) / cell));
        long long j1 = static_cast<long long>(std::floor(std::max(a.y, b.y) / cell));
        for (long long i = i0; i <= i1; ++i)
            for (long long j = j0; j <= j1; ++j) fn(key(i, j));
    };
    for (std::size_t s = 0; s < segs; ++s) cells(s, [&](long long k) { grid[k].push_back(s); });

    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (auto& [k, list] : grid) {
        for (std::size_t u = 0; u < list.size(); ++u) {
            for (std::size_t v = u + 1; v < list.size(); ++v) {
                std::size_t i = std::min(list[u], list[v]), j = std::max(list[u], list[v]);
                if (j - i <= 1 || (c.closed && i == 0 && j == segs - 1)) continue;
                const auto& p = c.pts[i];
                const auto& p2 = c.pts[(i + 1) % n];
                const auto& q = c.pts[j];
                const auto& q2 = c.pts[(j + 1) % n];
                double rx = p2.x - p.x, ry = p2.y - p.y;
                double sx = q2.x - q.x, sy = q2.y - q.y;
                double den = rx * sy - ry * sx;
                double wx = q.x - p.x, wy = q.y - p.y;
                if (den == 0) {
                    if (wx * ry - wy * rx == 0 && (rx != 0 || ry != 0)) {
                        // collinear: overlapping pieces mean the projection is not generic
                        double t0 = (wx * rx + wy * ry) / (rx * rx + ry * ry);
                        double t1 = t0 + (sx * rx + sy * ry) / (rx * rx + ry * ry);
                        if (std::max(t0, t1) > 0 && std::min(t0, t1) < 1) rep.generic = false;
                    }
                    continue;
                }
                double t = (wx * sy - wy * sx) / den;
                double s = (wx * ry - wy * rx) / den;
                if (t < 0 || t >= 1 || s < 0 || s >= 1) continue;
                seen.emplace_back(i, j);
                (void)k;
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = c.pts[i];
        const auto& b = c.pts[(i + 1) % n];
        total += (a.x * b.y - b.x * a.y) / 2;
    }
    for (auto [i, j] : seen) {
        const auto& p = c.pts[i];
        const auto& p2 = c.pts[(i + 1) % n];
        const auto& q = c.pts[j];
        const auto& q2 = c.pts[(j + 1) % n];
        double rx = p2.x - p.x, ry = p2.y - p.y;
        double sx = q2.x - q.x, sy = q2.y - q.y;
        double t = ((q.x - p.x) * sy - (q.y - p.y) * sx) / (rx * sy - ry * sx);
        double X = p.x + t * rx, Y = p.y + t * ry;
        double a1 = loop_area(c, i, j, X, Y);
        double a2 = total - a1;
        bool deg = std::abs(a1) < tol || std::abs(a2) < tol;
        if (deg) rep.embedded = false;
        rep.points.push_back({X, Y, i, j, a1, a2, deg});
    }
    return rep;
}

void write_csv(std::ostream& os, const LiftedCurve& c) {
    os << "x,y,z\n";
    char buf[96];
    for (const auto& p : c.pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x, p.y, p.z);
        os << buf;
    }
}

}  // namespace legkit
