#include "circdef/graph6.hpp"

#include <cstdint>

namespace circdef {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int needed_bytes(std::int64_t bits) { return static_cast<int>((bits + 5) / 6); }

} // namespace

CubicGraph graph6_decode(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (text.ends_with('\n') || text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) fail(ErrorCode::Malformed6, "empty string");
    if (text.front() == ':' || text.front() == ';' || text.front() == '&') {
        fail(ErrorCode::Malformed6, "sparse6/digraph6 input is not supported");
    }
    for (char c : text) {
        if (c < 63 || c > 126) fail(ErrorCode::Malformed6, "byte out of graph6 range");
    }

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) fail(ErrorCode::Malformed6, "truncated order field");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[static_cast<std::size_t>(i)] - 63);
        pos = 4;
    } else {
        if (text.size() < 8) fail(ErrorCode::Malformed6, "truncated order field");
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (text[static_cast<std::size_t>(i)] - 63);
        pos = 8;
    }
    if (n < 0 || n > 1000000) fail(ErrorCode::Malformed6, "unreasonable vertex count");

    const std::int64_t bits = n * (n - 1) / 2;
    if (static_cast<std::int64_t>(text.size() - pos) != needed_bytes(bits)) {
        fail(ErrorCode::Malformed6, "adjacency data has wrong length");
    }

    std::vector<Edge> edges;
    std::int64_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back(Edge{i, j});
        }
    }
    // trailing padding bits must be zero
    for (std::int64_t b = bits; b < 6 * static_cast<std::int64_t>(needed_bytes(bits)); ++b) {
        int byte = text[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((byte >> (5 - b % 6)) & 1) fail(ErrorCode::Malformed6, "nonzero padding bits");
    }
    return CubicGraph::build(static_cast<int>(n), std::move(edges));
}

std::string graph6_encode(const CubicGraph& g) {
    if (g.has_dangles()) fail(ErrorCode::HasDangles, "graph6 cannot carry dangling half-edges");
    const std::int64_t n = g.order();

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        fail(ErrorCode::Malformed6, "graph too large for the supported graph6 forms");
    }

    const std::int64_t bits = n * (n - 1) / 2;
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(needed_bytes(bits)), 0);
    std::int64_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) {
                bytes[static_cast<std::size_t>(bit / 6)] |= static_cast<std::uint8_t>(1u << (5 - bit % 6));
            }
        }
    }
    for (std::uint8_t b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

} // namespace circdef
