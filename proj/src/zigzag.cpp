#include <algorithm>

#include "legkit/front.hpp"

namespace legkit {

namespace {

// 'A': L p+1, R p   'B': L p, R p+1   0: not a zig-zag
char zigzag_variant(const std::vector<Event>& ev, int j, int* host_pos = nullptr) {
    if (j < 0 || j + 1 >= static_cast<int>(ev.size())) return 0;
    const auto& a = ev[j];
    const auto& b = ev[j + 1];
    if (a.kind != EventKind::L || b.kind != EventKind::R) return 0;
    if (b.pos == a.pos - 1) {
        if (host_pos) *host_pos = b.pos;
        return 'A';
    }
    if (b.pos == a.pos + 1) {
        if (host_pos) *host_pos = a.pos;
        return 'B';
    }
    return 0;
}

}  // namespace

FrontDiagram insert_zigzag(const FrontDiagram& d, ArcLocator at, ZigDir dir) {
    const auto f = orient(d);
    const int na = static_cast<int>(f.dec.arcs.size());
    if (at.arc < 0 || at.arc >= na) throw Error(Err::BadLocator, "no arc " + std::to_string(at.arc));
    const auto& arc = f.dec.arcs[at.arc];
    int slot = at.slot < 0 ? arc.left_event + 1 : at.slot;
    if (slot <= arc.left_event || slot > arc.right_event)
        throw Error(Err::BadLocator, "arc " + std::to_string(at.arc) + " is not alive before event " + std::to_string(slot));
    auto stack = stack_before(d, slot);
    auto it = std::find(stack.begin(), stack.end(), at.arc);
    const int p = static_cast<int>(it - stack.begin()) + 1;

    // variant A raises r on a rightward arc, B lowers it
    const bool up = dir == ZigDir::Up;
    const bool use_a = (f.dir[at.arc] > 0) == up;
    std::vector<Event> ev = d.events();
    std::vector<Event> zz = use_a ? std::vector<Event>{{EventKind::L, p + 1}, {EventKind::R, p}}
                                  : std::vector<Event>{{EventKind::L, p}, {EventKind::R, p + 1}};
    ev.insert(ev.begin() + slot, zz.begin(), zz.end());
    return FrontDiagram(std::move(ev), d.orientation());
}

bool is_zigzag(const FrontDiagram& d, int event) { return zigzag_variant(d.events(), event) != 0; }

ZigDir zigzag_direction(const FrontDiagram& d, int event) {
    if (!is_zigzag(d, event)) throw Error(Err::NoZigzag, "no zig-zag at event " + std::to_string(event));
    auto f = orient(d);
    int k = 0;
    for (const auto& c : f.dec.cusps)
        if (c.event == event || c.event == event + 1) k += f.kappa(c);
    return k > 0 ? ZigDir::Up : ZigDir::Down;
}

FrontDiagram remove_zigzag(const FrontDiagram& d, ZigzagLocator z) {
    if (!is_zigzag(d, z.event)) throw Error(Err::NoZigzag, "no zig-zag at event " + std::to_string(z.event));
    std::vector<Event> ev = d.events();
    ev.erase(ev.begin() + z.event, ev.begin() + z.event + 2);
    return FrontDiagram(std::move(ev), d.orientation());
}

FrontDiagram displace_zigzag(const FrontDiagram& d, ZigzagLocator from, ArcLocator to) {
    int p = 0;
    if (zigzag_variant(d.events(), from.event, &p) == 0)
        throw Error(Err::NoZigzag, "no zig-zag at event " + std::to_string(from.event));
    const ZigDir dir = zigzag_direction(d, from.event);
    FrontDiagram reduced = remove_zigzag(d, from);

    // host arc in the reduced front: whatever sits at p just before the old slot
    const auto host = stack_before(reduced, from.event).at(p - 1);
    const auto dec = trace(reduced);
    if (to.arc < 0 || to.arc >= static_cast<int>(dec.arcs.size()))
        throw Error(Err::BadLocator, "no arc " + std::to_string(to.arc));
    if (dec.arcs[to.arc].component != dec.arcs[host].component)
        throw Error(Err::BadLocator, "target arc is on a different component");
    return insert_zigzag(reduced, to, dir);
}

}  // namespace legkit
