#include "ascfs/squares.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace ascfs {

namespace {

// Union-find over diagonal slots with path halving and union by size.
class DiagonalForest {
 public:
  std::uint32_t slot_for(std::uint64_t key) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(parent_.size()));
    if (inserted) {
      parent_.push_back(it->second);
      size_.push_back(1);
    }
    return it->second;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving root, or the common root if already joined.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  const std::unordered_map<std::uint64_t, std::uint32_t>& index() const {
    return index_;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

std::array<std::uint32_t, 4> square_vertices(const Square& s) {
  return {s.d1.a, s.d1.b, s.d2.a, s.d2.b};
}

}  // namespace

std::vector<Square> enumerate_squares(const Graph& g) {
  std::vector<Square> out;
  for_each_square(g, [&](const Square& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

SquareComplex square_components(const Graph& g) {
  SquareComplex complex;
  complex.n = g.order();
  complex.squares = enumerate_squares(g);

  DiagonalForest forest;
  const std::size_t n = g.order();
  for (const Square& s : complex.squares)
    forest.unite(forest.slot_for(diagonal_key(s.d1, n)),
                 forest.slot_for(diagonal_key(s.d2, n)));

  // Squares are in ascending canonical order and a square's first-diagonal
  // key is its smallest, so a component's id (minimum diagonal key) is the
  // first diagonal of its first member square.
  std::unordered_map<std::uint32_t, std::uint32_t> component_of_root;
  for (std::size_t i = 0; i < complex.squares.size(); ++i) {
    const Square& s = complex.squares[i];
    std::uint32_t root = forest.find(forest.slot_for(diagonal_key(s.d1, n)));
    auto [it, inserted] =
        component_of_root.try_emplace(root, static_cast<std::uint32_t>(complex.components.size()));
    if (inserted) {
      SquareComponent c;
      c.id = diagonal_key(s.d1, n);
      c.support = VertexSet(n);
      complex.components.push_back(std::move(c));
    }
    SquareComponent& c = complex.components[it->second];
    c.square_indices.push_back(static_cast<std::uint32_t>(i));
    ++c.square_count;
    for (std::uint32_t v : square_vertices(s)) c.support.set(v);
  }

  for (const auto& [key, slot] : forest.index())
    complex.component_of_diagonal.emplace(key, component_of_root.at(forest.find(slot)));

  return complex;
}

double largest_support_fraction(const SquareComplex& complex) {
  if (complex.n == 0) return 0.0;
  std::size_t best = 0;
  for (const auto& c : complex.components) best = std::max(best, c.support.count());
  return static_cast<double>(best) / static_cast<double>(complex.n);
}

double largest_support_fraction(const Graph& g) {
  return largest_support_fraction(square_components(g));
}

std::optional<CoveringComponent> find_covering_component(const Graph& g,
                                                         const VertexSet& target) {
  const std::size_t n = g.order();
  if (target.universe() != n)
    throw std::invalid_argument("target universe does not match graph");
  const std::size_t want = target.count();
  if (want == 0) return std::nullopt;

  DiagonalForest forest;
  // Per-root payload, indexed by union-find slot.
  std::vector<VertexSet> support;
  std::vector<std::size_t> covered;
  std::vector<std::uint64_t> min_key;

  std::optional<CoveringComponent> found;
  for_each_square(g, [&](const Square& s) {
    const std::uint64_t k1 = diagonal_key(s.d1, n);
    const std::uint64_t k2 = diagonal_key(s.d2, n);
    std::uint32_t s1 = forest.slot_for(k1);
    if (s1 == support.size()) {
      support.emplace_back(n);
      covered.push_back(0);
      min_key.push_back(k1);
    }
    std::uint32_t s2 = forest.slot_for(k2);
    if (s2 == support.size()) {
      support.emplace_back(n);
      covered.push_back(0);
      min_key.push_back(k2);
    }
    std::uint32_t ra = forest.find(s1);
    std::uint32_t rb = forest.find(s2);
    std::uint32_t root = ra;
    if (ra != rb) {
      root = forest.unite(ra, rb);
      std::uint32_t other = (root == ra) ? rb : ra;
      support[root] |= support[other];
      support[other] = VertexSet();
      covered[root] = VertexSet::intersection_count(support[root], target);
      min_key[root] = std::min(min_key[ra], min_key[rb]);
    }
    for (std::uint32_t v : square_vertices(s)) {
      if (!support[root].test(v)) {
        support[root].set(v);
        if (target.test(v)) ++covered[root];
      }
    }
    if (covered[root] == want) {
      found = CoveringComponent{min_key[root], std::move(support[root])};
      return false;
    }
    return true;
  });
  return found;
}

std::vector<std::uint32_t> build_order(const Graph& g, const SquareComplex& complex,
                                       std::uint64_t component_id) {
  const SquareComponent* comp = nullptr;
  if (auto it = complex.component_of_diagonal.find(component_id);
      it != complex.component_of_diagonal.end())
    comp = &complex.components[it->second];
  if (!comp) throw std::invalid_argument("unknown square component id");

  const std::size_t n = g.order();
  VertexSet reached(n);
  std::vector<std::uint32_t> order;
  auto absorb = [&](const Square& s) {
    std::array<std::uint32_t, 4> missing{};
    std::size_t cnt = 0;
    for (std::uint32_t v : square_vertices(s))
      if (!reached.test(v)) missing[cnt++] = v;
    std::sort(missing.begin(), missing.begin() + cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
      reached.set(missing[i]);
      order.push_back(missing[i]);
    }
  };

  // Seed with the first square in canonical order: one diagonal, then the
  // other. Afterwards, repeatedly take the smallest-keyed pending square
  // that meets the reached set in a full diagonal or in three vertices.
  const Square& seed = complex.squares[comp->square_indices.front()];
  for (std::uint32_t v : square_vertices(seed)) {
    reached.set(v);
    order.push_back(v);
  }

  std::vector<std::uint32_t> pending(comp->square_indices.begin() + 1,
                                     comp->square_indices.end());
  while (!pending.empty()) {
    bool progressed = false;
    for (std::size_t i = 0; i < pending.size();) {
      const Square& s = complex.squares[pending[i]];
      std::size_t cnt = 0;
      for (std::uint32_t v : square_vertices(s)) cnt += reached.test(v);
      if (cnt == 4) {
        pending.erase(pending.begin() + i);
        continue;
      }
      const bool d1_in = reached.test(s.d1.a) && reached.test(s.d1.b);
      const bool d2_in = reached.test(s.d2.a) && reached.test(s.d2.b);
      if (d1_in || d2_in || cnt >= 3) {
        absorb(s);
        pending.erase(pending.begin() + i);
        progressed = true;
        break;
      }
      ++i;
    }
    if (pending.empty()) break;
    if (!progressed)
      throw std::logic_error("square component admits no admissible next square");
  }
  return order;
}

std::vector<std::uint32_t> build_order(const Graph& g, std::uint64_t component_id) {
  return build_order(g, square_components(g), component_id);
}

bool build_order_property_holds(const Graph& g,
                                const std::vector<std::uint32_t>& order) {
  for (std::size_t i = 2; i < order.size(); ++i) {
    std::size_t earlier_neighbors = 0;
    for (std::size_t j = 0; j < i; ++j)
      earlier_neighbors += g.adjacent(order[i], order[j]);
    if (earlier_neighbors < 2) return false;
  }
  return true;
}

bool square_is_valid(const Graph& g, const Square& s) {
  const std::size_t n = g.order();
  const std::array<std::uint32_t, 4> vs = square_vertices(s);
  for (std::uint32_t v : vs)
    if (v >= n) return false;
  if (!(s.d1.a < s.d1.b && s.d2.a < s.d2.b && s.d1.a < s.d2.a)) return false;
  if (s.d1.a == s.d2.b || s.d1.b == s.d2.a || s.d1.b == s.d2.b) return false;
  if (g.adjacent(s.d1.a, s.d1.b) || g.adjacent(s.d2.a, s.d2.b)) return false;
  return g.adjacent(s.d1.a, s.d2.a) && g.adjacent(s.d1.a, s.d2.b) &&
         g.adjacent(s.d1.b, s.d2.a) && g.adjacent(s.d1.b, s.d2.b);
}

}  // namespace ascfs
