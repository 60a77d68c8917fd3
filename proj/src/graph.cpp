#include "ascfs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ascfs/errors.hpp"
#include "ascfs/prng.hpp"

namespace ascfs {

namespace {

void check_vertex(const Graph& g, std::size_t v, const char* what) {
  if (v >= g.order())
    throw std::invalid_argument(std::string(what) + " out of range");
}

std::uint64_t pair_rank(std::size_t n, std::size_t u, std::size_t v) {
  // Lexicographic rank of (u, v) with u < v among all pairs from {0..n-1}.
  return static_cast<std::uint64_t>(u) * n - (static_cast<std::uint64_t>(u) * (u + 1)) / 2 +
         (v - u - 1);
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (u > v) throw std::invalid_argument("edge endpoints must satisfy u < v");
    if (rows_[u].test(v)) throw std::invalid_argument("duplicate edge");
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }
}

double Graph::edge_fraction() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(m_) /
         (static_cast<double>(n_) * (n_ - 1) / 2.0);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = rows_[u].find_next(u); v != VertexSet::npos;
         v = rows_[u].find_next(v))
      out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  return out;
}

Graph generate_gnp(const GenSpec& spec, std::uint64_t max_adjacency_bytes) {
  if (!std::isfinite(spec.p) || spec.p < 0.0 || spec.p > 1.0)
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  const std::size_t n = spec.n;
  const std::uint64_t words_per_row = (static_cast<std::uint64_t>(n) + 63) / 64;
  if (n > 0 && words_per_row * 8 > max_adjacency_bytes / n)
    throw ResourceError("adjacency for n = " + std::to_string(n) +
                        " exceeds the memory cap of " +
                        std::to_string(max_adjacency_bytes) + " bytes");

  Graph g;
  g.n_ = n;
  g.rows_.assign(n, VertexSet(n));
  const std::uint64_t threshold = rng::acceptance_threshold(spec.p);
  if (threshold == 0) return g;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    std::uint64_t k = pair_rank(n, u, u + 1);
    for (std::size_t v = u + 1; v < n; ++v, ++k) {
      if (rng::accept(rng::stream_at(spec.seed, k), threshold)) {
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        ++g.m_;
      }
    }
  }
  return g;
}

VertexSet link(const Graph& g, std::size_t v) {
  check_vertex(g, v, "vertex");
  return g.row(v);
}

VertexSet common_link(const Graph& g, std::size_t u, std::size_t v) {
  check_vertex(g, u, "vertex");
  check_vertex(g, v, "vertex");
  if (u == v) throw std::invalid_argument("common link needs two distinct vertices");
  return g.row(u) & g.row(v);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph");
  const std::size_t size = s.count();
  if (size <= 1) return true;
  for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    if (VertexSet::intersection_count(s, g.row(v)) != size - 1) return false;
  return true;
}

namespace {

// Tomita-style maximum-clique search specialized to the decision problem
// "is there a clique of order >= target".
class CliqueDecision {
 public:
  CliqueDecision(const Graph& g, std::size_t target) : g_(g), target_(target) {}

  bool run() {
    if (target_ > g_.order()) return false;
    VertexSet all(g_.order());
    all.fill();
    return expand(0, all);
  }

 private:
  bool expand(std::size_t clique_size, VertexSet cand) {
    if (clique_size >= target_) return true;
    if (cand.none()) return false;

    // Greedy coloring of the candidate set; color classes bound the largest
    // clique inside it. Candidates come back grouped by non-decreasing color.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;  // (vertex, color)
    std::vector<VertexSet> classes;
    cand.for_each([&](std::size_t v) {
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(g_.row(v))) ++c;
      if (c == classes.size()) classes.emplace_back(g_.order());
      classes[c].set(v);
    });
    for (std::size_t c = 0; c < classes.size(); ++c)
      classes[c].for_each([&](std::size_t v) {
        order.emplace_back(static_cast<std::uint32_t>(v),
                           static_cast<std::uint32_t>(c + 1));
      });

    if (clique_size + classes.size() < target_) return false;

    for (std::size_t i = order.size(); i-- > 0;) {
      auto [v, color] = order[i];
      if (clique_size + color < target_) return false;
      VertexSet next = cand & g_.row(v);
      if (clique_size + 1 >= target_) return true;
      if (expand(clique_size + 1, std::move(next))) return true;
      cand.reset(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t target_;
};

}  // namespace

bool contains_clique_of_order(const Graph& g, std::size_t t) {
  if (t == 0) return true;
  if (t == 1) return g.order() >= 1;
  return CliqueDecision(g, t).run();
}

std::vector<VertexSet> complement_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> components;
  VertexSet unvisited(n);
  unvisited.fill();
  std::vector<std::uint32_t> queue;
  while (true) {
    std::size_t start = unvisited.find_first();
    if (start == VertexSet::npos) break;
    VertexSet comp(n);
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(start));
    unvisited.reset(start);
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      comp.set(v);
      // Complement-neighbors of v still unvisited: unvisited \ row(v).
      VertexSet frontier = unvisited;
      frontier.subtract(g.row(v));
      frontier.for_each([&](std::size_t w) {
        unvisited.reset(w);
        queue.push_back(static_cast<std::uint32_t>(w));
      });
    }
    components.push_back(std::move(comp));
  }
  return components;
}

VertexSet dominating_vertices(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet out(n);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) out.set(v);
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  VertexSet visited(n);
  VertexSet frontier(n);
  visited.set(0);
  frontier.set(0);
  while (frontier.any()) {
    VertexSet next(n);
    frontier.for_each([&](std::size_t v) { next |= g.row(v); });
    next.subtract(visited);
    visited |= next;
    frontier = std::move(next);
  }
  return visited.count() == n;
}

Graph read_graph(std::istream& in) {
  std::string text;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    ++lineno;
    return true;
  };

  if (!next_line(text)) throw ParseError("missing header", 1);
  std::size_t n = 0, m = 0;
  {
    std::istringstream hs(text);
    long long n_ll = -1, m_ll = -1;
    std::string extra;
    if (!(hs >> n_ll >> m_ll) || n_ll < 0 || m_ll < 0 || (hs >> extra))
      throw ParseError("header must be two nonnegative integers \"n m\"", lineno);
    n = static_cast<std::size_t>(n_ll);
    m = static_cast<std::size_t>(m_ll);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<VertexSet> seen(n, VertexSet(n));
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(text))
      throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                           std::to_string(i),
                       lineno + 1);
    std::istringstream es(text);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw ParseError("edge line must be two integers \"u v\"", lineno);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw ParseError("edge endpoint out of range", lineno);
    if (u == v) throw ParseError("loop edge", lineno);
    if (u > v) throw ParseError("edge endpoints must satisfy u < v", lineno);
    if (seen[u].test(static_cast<std::size_t>(v)))
      throw ParseError("duplicate edge", lineno);
    seen[u].set(static_cast<std::size_t>(v));
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  // Trailing blank lines are tolerated; anything else is an error.
  while (next_line(text)) {
    std::istringstream ts(text);
    std::string extra;
    if (ts >> extra) throw ParseError("unexpected content after edge list", lineno);
  }

  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ascfs
