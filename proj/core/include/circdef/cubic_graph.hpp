#ifndef CIRCDEF_CUBIC_GRAPH_HPP
#define CIRCDEF_CUBIC_GRAPH_HPP

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circdef/error.hpp"

namespace circdef {

/// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Half-edge attached to a single vertex, identified by a slot tag unique
/// within the graph.
struct Dangle {
    int vertex = 0;
    std::string tag;
    friend auto operator<=>(const Dangle&, const Dangle&) = default;
};

/// Iterable neighbor set of a vertex (at most 3 in a cubic graph).
struct NeighborList {
    std::array<int, 3> v{{-1, -1, -1}};
    int count = 0;
    const int* begin() const { return v.data(); }
    const int* end() const { return v.data() + count; }
};

/// Immutable cubic graph, possibly with dangling half-edges. Every vertex has
/// degree exactly 3 counting incident edges plus incident dangles. Simple:
/// no loops, no parallel edges.
///
/// Edges and dangles together form the "items" of the graph; items are the
/// units that carry colors in an edge coloring. Item ids: edges get
/// 0..edge_count()-1 in sorted edge order, dangles follow in sorted
/// (vertex, tag) order.
class CubicGraph {
public:
    CubicGraph() = default;

    /// Validates and builds. Throws Error with one of: BadVertexId, LoopEdge,
    /// ParallelEdge, DuplicateSlotTag, NotCubic.
    static CubicGraph build(int n, std::vector<Edge> edges, std::vector<Dangle> dangles = {});

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dangle_count() const { return static_cast<int>(dangles_.size()); }
    bool has_dangles() const { return !dangles_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Dangle>& dangles() const { return dangles_; }

    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const Dangle& dangle(int idx) const { return dangles_[static_cast<std::size_t>(idx)]; }

    // --- items: edges then dangles ---
    int item_count() const { return edge_count() + dangle_count(); }
    bool item_is_dangle(int item) const { return item >= edge_count(); }
    /// (u, v) for an edge, (vertex, -1) for a dangle.
    std::pair<int, int> item_ends(int item) const;
    /// The three items incident to v.
    const std::array<int, 3>& items_at(int v) const { return items_at_[static_cast<std::size_t>(v)]; }

    NeighborList neighbors(int v) const;
    int edge_degree(int v) const;
    bool adjacent(int u, int v) const;
    /// Edge id of {u,v}, or -1.
    int edge_index(int u, int v) const;
    /// Dangle index for a tag, or -1.
    int dangle_index(std::string_view tag) const;
    /// Throws UnknownTag if absent.
    const Dangle& dangle_by_tag(std::string_view tag) const;

    friend bool operator==(const CubicGraph&, const CubicGraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Dangle> dangles_;
    std::vector<std::array<int, 3>> items_at_;
};

/// Joins two dangles into an ordinary edge, consuming both slot tags.
/// Throws UnknownTag, LoopEdge (same vertex) or NotSimple (already adjacent).
CubicGraph join_dangles(const CubicGraph& g, std::string_view tag_a, std::string_view tag_b);

/// Subgraph induced on `vertices` (renumbered densely in ascending order of
/// the original ids), padded with fresh dangles "pad:<k>" so that every
/// vertex keeps degree 3. Pads never affect 3-edge-colorability.
CubicGraph induced_with_pads(const CubicGraph& g, const std::vector<int>& vertices);

} // namespace circdef

#endif
