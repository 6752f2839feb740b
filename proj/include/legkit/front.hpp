#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "legkit/errors.hpp"

namespace legkit {

// L p: left cusp creating strands p, p+1
// R p: right cusp joining strands p, p+1
// X p: strands p and p+1 cross
// positions are 1-based from the bottom of the strand stack
enum class EventKind { L, R, X };

struct Event {
    EventKind kind;
    int pos;
    bool operator==(const Event&) const = default;
};

char event_letter(EventKind k);

class FrontDiagram {
public:
    FrontDiagram() = default;
    // validates positions and closure, throws InvalidPosition / OpenDiagram / EmptyDiagram
    explicit FrontDiagram(std::vector<Event> events, std::map<int, int> orient = {});

    const std::vector<Event>& events() const { return events_; }
    // component index -> +1 / -1, only explicit overrides
    const std::map<int, int>& orientation() const { return orient_; }
    int orientation_of(int component) const;
    std::size_t size() const { return events_.size(); }
    int max_strands() const { return max_strands_; }

    FrontDiagram with_orientation(int component, int sign) const;

    bool operator==(const FrontDiagram&) const = default;

private:
    std::vector<Event> events_;
    std::map<int, int> orient_;
    int max_strands_ = 0;
};

FrontDiagram parse_front(std::string_view text);
std::string serialize(const FrontDiagram& d);

// Arcs are the strand branches running from a left cusp to a right cusp,
// passing through any crossings.  Ids follow left cusp order, lower first.
struct Arc {
    int left_event;
    int right_event;
    int component = -1;
};

struct Cusp {
    int event;
    bool left;
    int lower;  // arc ids
    int upper;
};

struct Crossing {
    int event;
    int rising;   // arc at p before the crossing, ends up at p+1
    int falling;  // arc at p+1 before, ends up at p (the over strand)
};

struct Decomposition {
    std::vector<Arc> arcs;
    std::vector<Cusp> cusps;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;  // arcs in traversal order, min arc first
    int count() const { return static_cast<int>(components.size()); }
};

Decomposition trace(const FrontDiagram& d);

// arc ids at each boundary: stack_before(d, b) is the stack just before event b
std::vector<int> stack_before(const FrontDiagram& d, int b);

struct OrientedFront {
    FrontDiagram diagram;
    Decomposition dec;
    std::vector<int> dir;  // per arc, +1 traversed rightward, -1 leftward

    int kappa(const Cusp& c) const;
    int orientation_sign(const Crossing& x) const;  // "or" in the tb formula
    int crossing_sign(const Crossing& x) const;     // knot-theoretic sign
};

OrientedFront orient(const FrontDiagram& d);

struct Invariants {
    int tb;
    int r;
    bool operator==(const Invariants&) const = default;
    auto operator<=>(const Invariants&) const = default;
};

std::vector<Invariants> invariants(const OrientedFront& f);
std::vector<Invariants> invariants(const FrontDiagram& d);
// single component convenience; throws OutOfRange otherwise
Invariants knot_invariants(const FrontDiagram& d);

// off-diagonal entries only, diagonal left at 0
std::vector<std::vector<int>> linking_matrix(const OrientedFront& f);

enum class Pushoff { Plus, Minus };
int transverse_self_linking(const OrientedFront& f, int component, Pushoff p);

// -- stabilization --

enum class ZigDir { Up, Down };  // Up raises r by one

struct ArcLocator {
    int arc;
    int slot = -1;  // insert before this event index; -1 = right after the left cusp
};

struct ZigzagLocator {
    int event;  // first of the two events forming the zig-zag
};

FrontDiagram insert_zigzag(const FrontDiagram& d, ArcLocator at, ZigDir dir);
bool is_zigzag(const FrontDiagram& d, int event);
ZigDir zigzag_direction(const FrontDiagram& d, int event);
FrontDiagram remove_zigzag(const FrontDiagram& d, ZigzagLocator z);
// `to` addresses arcs of the front with the zig-zag removed
FrontDiagram displace_zigzag(const FrontDiagram& d, ZigzagLocator from, ArcLocator to);

}  // namespace legkit
