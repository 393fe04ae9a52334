#ifndef CIRCDEF_CYCLE_HPP
#define CIRCDEF_CYCLE_HPP

#include <cstddef>
#include <vector>

#include "circdef/cubic_graph.hpp"

namespace circdef {

/// Simple cycle given as the cyclic sequence of its vertices. Canonical form:
/// smallest vertex first, then the smaller of its two cycle neighbors.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Rotates/reflects to canonical form. Requires length >= 3 and distinct ids.
Cycle canonical_cycle(std::vector<int> vertices);

/// True iff the sequence is a valid cycle of g: length >= 3, vertices
/// distinct, consecutive (cyclically) vertices adjacent.
bool cycle_valid(const CubicGraph& g, const Cycle& c);

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    /// False when the cap was hit; `cycles` then holds the first `cap` found.
    bool complete = true;
};

/// Enumerates every simple cycle of g, each exactly once, in canonical form.
/// Stops after `cap` cycles (complete=false). `max_length` > 0 restricts the
/// enumeration to cycles of at most that length.
/// Throws HasDangles.
CycleEnumeration enumerate_cycles(const CubicGraph& g, std::size_t cap, int max_length = 0);

} // namespace circdef

#endif
