#include "circdef/cycle.hpp"

#include <algorithm>

namespace circdef {

Cycle canonical_cycle(std::vector<int> vertices) {
    const std::size_t len = vertices.size();
    if (len < 3) fail(ErrorCode::BadParameter, "cycle shorter than 3");
    auto min_it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), min_it, vertices.end());
    if (vertices[1] > vertices[len - 1]) {
        std::reverse(vertices.begin() + 1, vertices.end());
    }
    return Cycle{std::move(vertices)};
}

bool cycle_valid(const CubicGraph& g, const Cycle& c) {
    const std::size_t len = c.vertices.size();
    if (len < 3) return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        int u = c.vertices[i];
        int v = c.vertices[(i + 1) % len];
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) return false;
        if (!g.adjacent(u, v)) return false;
    }
    return true;
}

namespace {

struct CycleSearch {
    const CubicGraph& g;
    std::size_t cap;
    int max_length;
    std::vector<Cycle>& out;
    std::vector<int> path;
    std::vector<char> visited;
    bool overflow = false;

    // Cycles are rooted at their smallest vertex s; only vertices > s may
    // appear later in the path. Requiring path[1] < last vertex keeps one of
    // the two orientations, which is exactly the canonical form.
    void run() {
        const int n = g.order();
        visited.assign(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < n && !overflow; ++s) {
            path.assign(1, s);
            visited[static_cast<std::size_t>(s)] = 1;
            extend(s, s);
            visited[static_cast<std::size_t>(s)] = 0;
        }
    }

    void extend(int s, int u) {
        if (overflow) return;
        for (int w : g.neighbors(u)) {
            if (overflow) return;
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                if (out.size() >= cap) {
                    overflow = true;
                    return;
                }
                out.push_back(Cycle{path});
            }
            if (w > s && !visited[static_cast<std::size_t>(w)] &&
                (max_length == 0 || static_cast<int>(path.size()) < max_length)) {
                visited[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                extend(s, w);
                path.pop_back();
                visited[static_cast<std::size_t>(w)] = 0;
            }
        }
    }
};

} // namespace

CycleEnumeration enumerate_cycles(const CubicGraph& g, std::size_t cap, int max_length) {
    if (g.has_dangles()) fail(ErrorCode::HasDangles, "cycle enumeration needs a closed graph");
    CycleEnumeration result;
    CycleSearch search{g, cap, max_length, result.cycles, {}, {}, false};
    search.run();
    result.complete = !search.overflow;
    return result;
}

} // namespace circdef
