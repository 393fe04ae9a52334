#include "circdef/cubic_graph.hpp"

#include <algorithm>
#include <set>

namespace circdef {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::DuplicateSlotTag: return "DuplicateSlotTag";
    case ErrorCode::Malformed6: return "Malformed6";
    case ErrorCode::HasDangles: return "HasDangles";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GroupArityMismatch: return "GroupArityMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::TooFewCopies: return "TooFewCopies";
    case ErrorCode::SeedNotSnark: return "SeedNotSnark";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Acyclic: return "Acyclic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotBridgeless: return "NotBridgeless";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::UnknownTag: return "UnknownTag";
    }
    return "Error";
}

CubicGraph CubicGraph::build(int n, std::vector<Edge> edges, std::vector<Dangle> dangles) {
    if (n < 0) fail(ErrorCode::BadVertexId, "negative vertex count");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) fail(ErrorCode::BadVertexId, "edge endpoint out of range");
        if (e.u == e.v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            fail(ErrorCode::ParallelEdge, "duplicate edge " + std::to_string(edges[i].u) + "-" +
                                              std::to_string(edges[i].v));
        }
    }
    for (const Dangle& d : dangles) {
        if (d.vertex < 0 || d.vertex >= n) fail(ErrorCode::BadVertexId, "dangle vertex out of range");
    }
    std::sort(dangles.begin(), dangles.end());
    {
        std::set<std::string_view> tags;
        for (const Dangle& d : dangles) {
            if (!tags.insert(d.tag).second) fail(ErrorCode::DuplicateSlotTag, "slot tag '" + d.tag + "'");
        }
    }

    CubicGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.dangles_ = std::move(dangles);
    g.items_at_.assign(static_cast<std::size_t>(n), {{-1, -1, -1}});
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto attach = [&](int v, int item) {
        if (deg[static_cast<std::size_t>(v)] >= 3) {
            fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree > 3");
        }
        g.items_at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]++)] = item;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        attach(g.edges_[static_cast<std::size_t>(i)].u, i);
        attach(g.edges_[static_cast<std::size_t>(i)].v, i);
    }
    for (int i = 0; i < g.dangle_count(); ++i) {
        attach(g.dangles_[static_cast<std::size_t>(i)].vertex, g.edge_count() + i);
    }
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] != 3) {
            fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(deg[static_cast<std::size_t>(v)]));
        }
    }
    return g;
}

std::pair<int, int> CubicGraph::item_ends(int item) const {
    if (item_is_dangle(item)) return {dangles_[static_cast<std::size_t>(item - edge_count())].vertex, -1};
    const Edge& e = edges_[static_cast<std::size_t>(item)];
    return {e.u, e.v};
}

NeighborList CubicGraph::neighbors(int v) const {
    NeighborList out;
    for (int item : items_at(v)) {
        if (item < 0 || item_is_dangle(item)) continue;
        const Edge& e = edges_[static_cast<std::size_t>(item)];
        out.v[static_cast<std::size_t>(out.count++)] = e.u == v ? e.v : e.u;
    }
    return out;
}

int CubicGraph::edge_degree(int v) const { return neighbors(v).count; }

bool CubicGraph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int CubicGraph::edge_index(int u, int v) const {
    if (u == v) return -1;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v}) return static_cast<int>(it - edges_.begin());
    return -1;
}

int CubicGraph::dangle_index(std::string_view tag) const {
    for (int i = 0; i < dangle_count(); ++i) {
        if (dangles_[static_cast<std::size_t>(i)].tag == tag) return i;
    }
    return -1;
}

const Dangle& CubicGraph::dangle_by_tag(std::string_view tag) const {
    int i = dangle_index(tag);
    if (i < 0) fail(ErrorCode::UnknownTag, "no dangle tagged '" + std::string(tag) + "'");
    return dangles_[static_cast<std::size_t>(i)];
}

CubicGraph join_dangles(const CubicGraph& g, std::string_view tag_a, std::string_view tag_b) {
    if (tag_a == tag_b) fail(ErrorCode::BadParameter, "cannot join a dangle with itself");
    const Dangle& a = g.dangle_by_tag(tag_a);
    const Dangle& b = g.dangle_by_tag(tag_b);
    if (a.vertex == b.vertex) fail(ErrorCode::LoopEdge, "both dangles at vertex " + std::to_string(a.vertex));
    if (g.adjacent(a.vertex, b.vertex)) {
        fail(ErrorCode::NotSimple, "joining would create a parallel edge " + std::to_string(a.vertex) + "-" +
                                       std::to_string(b.vertex));
    }
    std::vector<Edge> edges = g.edges();
    edges.push_back(Edge{a.vertex, b.vertex});
    std::vector<Dangle> dangles;
    for (const Dangle& d : g.dangles()) {
        if (d.tag != tag_a && d.tag != tag_b) dangles.push_back(d);
    }
    return CubicGraph::build(g.order(), std::move(edges), std::move(dangles));
}

CubicGraph induced_with_pads(const CubicGraph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order()) fail(ErrorCode::BadVertexId, "induced vertex out of range");
        newid[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<int> deg(vs.size(), 0);
    for (const Edge& e : g.edges()) {
        int a = newid[static_cast<std::size_t>(e.u)];
        int b = newid[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            edges.push_back(Edge{a, b});
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
    }
    std::vector<Dangle> dangles;
    int pad = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int k = deg[i]; k < 3; ++k) {
            dangles.push_back(Dangle{static_cast<int>(i), "pad:" + std::to_string(pad++)});
        }
    }
    return CubicGraph::build(static_cast<int>(vs.size()), std::move(edges), std::move(dangles));
}

} // namespace circdef
