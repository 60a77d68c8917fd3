#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ascfs/graph.hpp"
#include "ascfs/squares.hpp"
#include "ascfs/vertex_set.hpp"

namespace ascfs {

// A maximal block: two non-adjacent ends w, w_prime together with their full
// common link as the core.
struct Block {
  std::uint32_t w = 0;
  std::uint32_t w_prime = 0;
  VertexSet core;
};

struct AsResult {
  bool verdict = false;
  std::optional<Block> witness;       // present iff verdict
  std::uint64_t blocks_examined = 0;  // non-adjacent pairs tested
};

// witness_component identifies the covering component by a diagonal key
// inside it (the smallest observed when the streamed search established the
// cover). square_components labels the component with the minimum key over
// all its diagonals, which can be smaller; component_of_diagonal maps either
// value to the component, and build_order accepts either.
struct CfsResult {
  bool verdict = false;
  VertexSet clique_factor;                          // always the dominating set
  std::optional<std::uint64_t> witness_component;   // present iff verdict
  std::optional<VertexSet> witness_support;         // present iff verdict
};

struct JoinResult {
  bool present = false;
  // A bipartition V = A u B with every A-B pair an edge; present iff join.
  std::optional<std::pair<VertexSet, VertexSet>> parts;
};

enum class CoxeterLabel {
  kThickOfOrderExactly1,
  kNontrivialJoin,
  kInconclusive,
};

const char* to_string(CoxeterLabel label);

// Augmented-suspension decision. Scans maximal blocks B(w, w') over
// non-adjacent pairs in lexicographic order of (min, max) and returns at the
// first witness: a block whose core is not a clique and such that every
// vertex outside the block sees a non-clique inside the core. Checking only
// maximal blocks is sound because shrinking the core only shrinks the
// outside-link intersections.
AsResult is_as(const Graph& g);

// Constructed-from-squares decision. The clique factor is fixed to the
// dominating vertices (any other choice leaves a dominating vertex inside
// the candidate square part, where it can sit in no induced 4-cycle), and
// the verdict asks for a square-graph component whose support is exactly the
// remaining vertices. Runs the streaming cover scan; on dense graphs (edge
// fraction above 1/2) tries the augmented-suspension shortcut first, since
// that property implies this one.
CfsResult is_cfs(const Graph& g);

// Same decision without the dense shortcut; used for cross-checks so the
// implication between the two properties is tested on independent machinery.
CfsResult is_cfs_square_path(const Graph& g);

// Decision from an already-built complex (cheapest when metrics forced the
// full complex anyway).
CfsResult cfs_from_complex(const Graph& g, const SquareComplex& complex);

// Fills in the witness of a true verdict that took the dense shortcut.
// No-op when the verdict is false or the witness is already present.
void ensure_cfs_witness(const Graph& g, CfsResult& res);

// Nontrivial join decomposition, detected through complement connectivity:
// the graph is a join of two nonempty parts iff its complement is
// disconnected. Graphs on at most one vertex are never joins.
JoinResult is_nontrivial_join(const Graph& g);

struct Classification {
  AsResult as;
  CfsResult cfs;
  JoinResult join;
  CoxeterLabel label = CoxeterLabel::kInconclusive;
};

// Full classification. Label rule: a nontrivial join wins; otherwise a
// constructed-from-squares graph is thick of order exactly 1; otherwise
// inconclusive. Throws std::logic_error if the augmented-suspension verdict
// is true while the squares verdict is false, which no graph can realize.
Classification classify(const Graph& g);

CoxeterLabel coxeter_label(const Graph& g);

}  // namespace ascfs
