#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ascfs/vertex_set.hpp"

namespace ascfs {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Parameters for seeded Erdos-Renyi G(n, p) generation. Two equal specs
// always produce identical graphs: the draw for the pair (u, v), u < v, uses
// stream position u*n - u*(u+1)/2 + (v - u - 1), i.e. the lexicographic rank
// of the pair, so generation order is immaterial.
struct GenSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Default cap on adjacency storage for generated graphs: 2 GiB.
inline constexpr std::uint64_t kDefaultAdjacencyCap = 2ull << 30;

// Finite simple graph on vertices {0, ..., n-1} with bit-packed adjacency
// rows. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const VertexSet& row(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }

  // Fraction of vertex pairs that are edges; 0 for n < 2.
  double edge_fraction() const;

  std::vector<Edge> edges() const;

 private:
  friend Graph generate_gnp(const GenSpec&, std::uint64_t);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
};

// Seeded G(n, p). Throws std::invalid_argument for p outside [0, 1] or a
// non-finite p, and ResourceError when the adjacency matrix would exceed
// max_adjacency_bytes.
Graph generate_gnp(const GenSpec& spec,
                   std::uint64_t max_adjacency_bytes = kDefaultAdjacencyCap);

// Neighbors of v. Throws std::invalid_argument for v out of range.
VertexSet link(const Graph& g, std::size_t v);

// Vertices adjacent to both u and v. Requires u != v, both in range.
VertexSet common_link(const Graph& g, std::size_t u, std::size_t v);

// True when every two members of s are adjacent. Empty and singleton sets
// are cliques. Requires s.universe() == g.order().
bool is_clique(const Graph& g, const VertexSet& s);

// Exact decision: does g contain a clique on t vertices? Branch and bound
// with a greedy-coloring bound.
bool contains_clique_of_order(const Graph& g, std::size_t t);

// Connected components of the complement graph, as a partition of the vertex
// set. The complement is never materialized.
std::vector<VertexSet> complement_components(const Graph& g);

// Vertices adjacent to every other vertex.
VertexSet dominating_vertices(const Graph& g);

// Connectivity of g itself; vacuously true for n <= 1.
bool is_connected(const Graph& g);

// Text codec. Format: a header line "n m", then m lines "u v" with
// 0 <= u < v < n. The writer emits edges in lexicographic order; the reader
// throws ParseError (with a 1-based line number) on malformed input, loops,
// out-of-range endpoints, inverted pairs, or duplicate edges.
Graph read_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);

}  // namespace ascfs
