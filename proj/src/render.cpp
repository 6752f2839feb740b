#include "legkit/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "legkit/lift.hpp"

namespace legkit {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const FrontDiagram& d) {
    GeometryParams g;
    g.spacing = 40;
    g.height = 20;
    g.cusp_rise = 0.1;  // visible semicubical tips
    g.samples_per_arc = 240;
    const auto rf = realize_front(d, g);
    const int m = static_cast<int>(d.events().size());
    const double margin = 20;
    const double width = (m - 1) * g.spacing + 2 * margin;
    const double height = (d.max_strands() + 1) * g.height + 2 * margin;
    auto sx = [&](double x) { return num(x + margin); };
    auto sy = [&](double z) { return num(height - margin - z); };

    std::vector<std::vector<double>> gaps(rf.arcs.size());
    for (const auto& c : rf.dec.crossings) gaps[c.rising].push_back(c.event * g.spacing);
    const double gap = 0.15 * g.spacing;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
       << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (std::size_t a = 0; a < rf.arcs.size(); ++a) {
        const auto& s = rf.arcs[a];
        std::string pts;
        auto flush = [&] {
            if (!pts.empty()) os << "<polyline class=\"arc\" data-arc=\"" << a << "\" points=\"" << pts << "\"/>\n";
            pts.clear();
        };
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            bool hidden = false;
            for (double xc : gaps[a]) hidden = hidden || std::abs(s.x[i] - xc) < gap;
            if (hidden) {
                flush();
                continue;
            }
            if (!pts.empty()) pts += ' ';
            pts += sx(s.x[i]) + "," + sy(s.z[i]);
        }
        flush();
    }
    os << "</g>\n<g fill=\"black\">\n";
    for (const auto& c : rf.dec.cusps) {
        const double x = c.event * g.spacing, z = g.height * (d.events()[c.event].pos + 0.5);
        os << "<circle class=\"cusp\" cx=\"" << sx(x) << "\" cy=\"" << sy(z) << "\" r=\"2\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_ascii(const FrontDiagram& d) {
    const int n = d.max_strands();
    // row 2*(n-q) holds level q (1-based, bottom = 1); odd rows sit between levels
    const int rows = 2 * n + 1;
    std::vector<std::string> grid(rows);
    int active = 0;
    auto put = [&](int row, const std::string& cell) { grid[row] += cell; };
    auto level_row = [&](int q) { return 2 * (n - q); };
    for (const auto& e : d.events()) {
        const int p = e.pos;
        const int after = active + (e.kind == EventKind::L ? 2 : e.kind == EventKind::R ? -2 : 0);
        for (int r = 0; r < rows; ++r) {
            std::string cell = "   ";
            // strands that pass straight through this column
            for (int q = 1; q <= std::max(active, after); ++q) {
                if (level_row(q) != r) continue;
                const int top = e.kind == EventKind::L ? after : active;
                if (q < p || (q >= p + 2 && q <= top)) cell = "---";
            }
            if (r == level_row(p + 1)) {
                cell = e.kind == EventKind::L ? " .-" : e.kind == EventKind::R ? "-. " : "\\ /";
            } else if (r == level_row(p) - 1) {
                cell = e.kind == EventKind::L ? "<  " : e.kind == EventKind::R ? "  >" : " X ";
            } else if (r == level_row(p)) {
                cell = e.kind == EventKind::L ? " '-" : e.kind == EventKind::R ? "-' " : "/ \\";
            }
            put(r, cell);
        }
        active = after;
    }
    std::string out;
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        if (!row.empty()) out += row + "\n";
    }
    return out;
}

}  // namespace legkit
