#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ascfs/graph.hpp"
#include "ascfs/vertex_set.hpp"

namespace ascfs {

// A diagonal is a non-adjacent vertex pair, stored with a < b.
struct Diagonal {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool operator==(const Diagonal&) const = default;
};

// An induced 4-cycle, represented by its two diagonals. Canonical form:
// d1.a < d1.b, d2.a < d2.b, d1.a < d2.a. The four vertices are distinct,
// every cross pair (one vertex from each diagonal) is an edge, and both
// diagonals are non-edges.
struct Square {
  Diagonal d1;
  Diagonal d2;
  bool operator==(const Square&) const = default;
};

// Stable integer key for a diagonal of a graph on n vertices.
inline std::uint64_t diagonal_key(const Diagonal& d, std::size_t n) {
  return static_cast<std::uint64_t>(d.a) * n + d.b;
}

// Connected component of the square graph: squares are adjacent when they
// share a diagonal. The id is the minimum diagonal key occurring in the
// component, which makes ids stable across runs.
struct SquareComponent {
  std::uint64_t id = 0;
  VertexSet support;                          // union of member squares' vertices
  std::size_t square_count = 0;
  std::vector<std::uint32_t> square_indices;  // ascending, into SquareComplex::squares
};

struct SquareComplex {
  std::size_t n = 0;
  std::vector<Square> squares;                 // ascending canonical order
  std::vector<SquareComponent> components;     // ascending by id
  std::unordered_map<std::uint64_t, std::uint32_t> component_of_diagonal;
};

// Visits every induced 4-cycle exactly once, in ascending canonical order:
// for each non-edge (u, v) taken in lexicographic order as the first
// diagonal, the second diagonal ranges over non-adjacent pairs inside
// common_link(u, v) whose smaller vertex exceeds u. The visitor returns
// false to stop early; for_each_square then returns false.
template <class F>
bool for_each_square(const Graph& g, F&& visit) {
  const std::size_t n = g.order();
  VertexSet cl(n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    const VertexSet& nu = g.row(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (nu.test(v)) continue;
      VertexSet::intersect_into(nu, g.row(v), cl);
      bool keep = true;
      cl.for_each([&](std::size_t a) {
        if (!keep || a <= u) return;
        cl.for_each_diff_above(g.row(a), a, [&](std::size_t b) {
          Square s{{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)},
                   {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}};
          keep = visit(s);
          return keep;
        });
      });
      if (!keep) return false;
    }
  }
  return true;
}

// All induced 4-cycles in ascending canonical order.
std::vector<Square> enumerate_squares(const Graph& g);

// Full square-graph component structure via union-find over diagonals. The
// square graph itself is never materialized.
SquareComplex square_components(const Graph& g);

// max over components of |support| / n; 0 when there are no squares or n = 0.
double largest_support_fraction(const Graph& g);
double largest_support_fraction(const SquareComplex& complex);

// A component found to cover a requested vertex set. The id is the smallest
// diagonal key observed in the component when the cover was established; it
// always names a diagonal inside the component, but squares streamed later
// can merge the component with a smaller-keyed one, so the exhaustive
// structure may label the same component with a smaller id. Any such key
// resolves to the component through SquareComplex::component_of_diagonal.
struct CoveringComponent {
  std::uint64_t id = 0;
  VertexSet support;
};

// Streams squares through the diagonal union-find and stops as soon as some
// component's support contains every vertex of `target`. Nothing is
// materialized beyond per-component supports, so this stays cheap even when
// the graph holds hundreds of millions of squares. Returns the covering
// component, or nullopt when the stream is exhausted without a cover (or
// target is empty). Supports only ever contain square vertices, so with
// target = non-dominating vertices a cover means support == target.
std::optional<CoveringComponent> find_covering_component(const Graph& g,
                                                         const VertexSet& target);

// Ordering of the component's support in which each vertex from the third
// position on is adjacent to at least two earlier vertices. Built greedily:
// start from the component's first square in canonical order, then repeatedly
// absorb the smallest-keyed pending square that meets the reached set in a
// full diagonal or in at least three vertices, appending its unseen vertices
// in ascending order. component_id may be the component's id or the key of
// any diagonal inside it. Throws std::invalid_argument for a key that
// belongs to no component.
std::vector<std::uint32_t> build_order(const Graph& g, std::uint64_t component_id);
std::vector<std::uint32_t> build_order(const Graph& g, const SquareComplex& complex,
                                       std::uint64_t component_id);

// Mechanical check of the ordering property build_order promises.
bool build_order_property_holds(const Graph& g,
                                const std::vector<std::uint32_t>& order);

// True when s is an induced 4-cycle of g in canonical form.
bool square_is_valid(const Graph& g, const Square& s);

}  // namespace ascfs
