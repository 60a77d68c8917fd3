#pragma once

// Small named graphs shared across the test binaries, plus mask-indexed
// enumeration of every graph on a fixed vertex count.

#include <cstdint>
#include <vector>

#include "ascfs/graph.hpp"

namespace corpus {

inline ascfs::Graph from_edges(std::size_t n, std::vector<ascfs::Edge> edges) {
  return ascfs::Graph(n, edges);
}

// Graph on n vertices whose edge set is selected by `mask`: bit k of mask
// turns on the k-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
inline ascfs::Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<ascfs::Edge> edges;
  std::size_t k = 0;
  for (std::uint32_t u = 0; u + 1 < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1) edges.push_back({u, v});
  return ascfs::Graph(n, edges);
}

inline ascfs::Graph edgeless(std::size_t n) { return ascfs::Graph(n, {}); }

inline ascfs::Graph complete(std::size_t n) {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t u = 0; u + 1 < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  return ascfs::Graph(n, edges);
}

inline ascfs::Graph path(std::size_t n) {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return ascfs::Graph(n, edges);
}

inline ascfs::Graph cycle(std::size_t n) {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  if (n > 2) edges.push_back({0, static_cast<std::uint32_t>(n - 1)});
  return ascfs::Graph(n, edges);
}

inline ascfs::Graph c4() { return cycle(4); }

inline ascfs::Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t u = 0; u < a; ++u)
    for (std::uint32_t v = 0; v < b; ++v)
      edges.push_back({u, static_cast<std::uint32_t>(a + v)});
  return ascfs::Graph(a + b, edges);
}

// K_{2,2,2}: complement of three disjoint edges 01, 23, 45.
inline ascfs::Graph octahedron() {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t u = 0; u < 6; ++u)
    for (std::uint32_t v = u + 1; v < 6; ++v)
      if (!(v == u + 1 && u % 2 == 0)) edges.push_back({u, v});
  return ascfs::Graph(6, edges);
}

// 2x3 grid: two stacked squares sharing the edge 1-4.
inline ascfs::Graph domino() {
  return from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Chain of six doubles D_k = {2k, 2k+1}, consecutive doubles fully joined.
inline ascfs::Graph dc6() {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t k = 0; k + 1 < 6; ++k)
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        edges.push_back({2 * k + i, 2 * (k + 1) + j});
  return ascfs::Graph(12, edges);
}

inline ascfs::Graph petersen() {
  std::vector<ascfs::Edge> edges;
  for (std::uint32_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({static_cast<std::uint32_t>(5 + i),
                     static_cast<std::uint32_t>(5 + (i + 2) % 5)});
    edges.push_back({i, i + 5});
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return ascfs::Graph(10, edges);
}

// Disjoint union of a and b plus every cross edge; b's vertices are shifted.
inline ascfs::Graph join(const ascfs::Graph& a, const ascfs::Graph& b) {
  const auto na = static_cast<std::uint32_t>(a.order());
  std::vector<ascfs::Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.push_back({na + u, na + v});
  for (std::uint32_t u = 0; u < na; ++u)
    for (std::uint32_t v = 0; v < b.order(); ++v) edges.push_back({u, na + v});
  return ascfs::Graph(a.order() + b.order(), edges);
}

}  // namespace corpus
