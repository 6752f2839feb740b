#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "legkit/front.hpp"
#include "legkit/trees.hpp"

namespace legkit {

enum class Kind { Elliptic, Hyperbolic };
enum class Locus { Interior, Boundary };

struct Singularity {
    int id;
    int sign;  // +1 / -1
    Kind kind;
    Locus locus;
    bool operator==(const Singularity&) const = default;
};

std::string label(const Singularity& s);  // "e+", "h-", ...

// directed flow line between singularities. The role follows from the endpoints:
// elliptic -> hyperbolic is a stable separatrix, hyperbolic -> elliptic an unstable one,
// elliptic -> elliptic a family of regular leaves from a source to a sink.
struct Link {
    int from;
    int to;
    bool curve = false;  // the leaf family has degenerated into a singularity curve
    auto operator<=>(const Link&) const = default;
};

// a leaf through p: a link to `other`, the boundary curve, or an unmodeled regular leaf
struct LeafRef {
    enum Type { Link, Boundary, Free } type;
    int other = -1;
    static LeafRef to(int other) { return {Link, other}; }
    static LeafRef boundary() { return {Boundary, -1}; }
    static LeafRef free() { return {Free, -1}; }
    bool operator==(const LeafRef&) const = default;
};

struct Counts {
    int e_pos = 0, h_pos = 0, e_neg = 0, h_neg = 0;
    bool operator==(const Counts&) const = default;
};

class FoliationState {
public:
    const std::map<int, Singularity>& singularities() const { return sing_; }
    const std::vector<int>& boundary() const { return boundary_; }
    const std::vector<Link>& links() const { return links_; }
    Invariants declared() const { return declared_; }
    const std::vector<std::string>& trace() const { return trace_; }

    const Singularity& at(int id) const;
    bool has(int id) const { return sing_.count(id) != 0; }
    bool linked(int a, int b) const;
    std::vector<int> sources_of(int id) const;  // x with x -> id
    std::vector<int> targets_of(int id) const;  // y with id -> y

    Counts interior_counts() const;
    Counts boundary_counts() const;
    // 2(e-h) over the interior plus (e-h) on the boundary, per sign; constant under every rewrite
    std::pair<int, int> ledger() const;
    bool boundary_in_naf() const;
    bool boundary_alternates() const;

    std::string dump() const;

private:
    friend class StateEditor;
    std::map<int, Singularity> sing_;
    std::vector<int> boundary_;
    std::vector<Link> links_;
    Invariants declared_{0, 0};
    std::vector<std::string> trace_;
    int next_id_ = 0;
};

FoliationState init_boundary(int tb, int r);

FoliationState convert(const FoliationState& s, int p, LeafRef gamma, LeafRef tau);
FoliationState eliminate(const FoliationState& s, int e, int h);
FoliationState create_pair(const FoliationState& s, int from, int to, int sign);

enum class CurveDirection { ToCurve, FromCurve };
FoliationState singularity_curve_move(const FoliationState& s, int from, int to, CurveDirection dir);

FoliationState to_naf(const FoliationState& s);
FoliationState reduce_interior(const FoliationState& s);

struct Region {
    enum Type { A, B, SemiA } type;
    int a = -1, b = -1;  // the arc realizing the region (if any)
};

std::string region_name(Region::Type t);

struct RegionDecomposition {
    std::vector<Region> regions;
    int count(Region::Type t) const;
};

bool in_elliptic_form(const FoliationState& s);
RegionDecomposition decompose(const FoliationState& s);  // throws NotEllipticForm
std::pair<FoliationState, RegionDecomposition> to_elliptic_form(const FoliationState& s);

struct SkeletonTree {
    SignedTree tree;
    std::vector<bool> boundary;  // per tree vertex (same order), true for boundary elliptics
};

SkeletonTree extract_skeleton(const FoliationState& s);

// init -> NAF -> reduced -> elliptic form -> skeleton, with all intermediate states
struct PipelineRun {
    std::vector<std::pair<std::string, FoliationState>> stages;
    RegionDecomposition regions;
    SkeletonTree skeleton;
};
PipelineRun run_pipeline(int tb, int r);

}  // namespace legkit
