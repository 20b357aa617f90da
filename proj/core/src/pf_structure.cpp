#include "antiatom/pf_structure.hpp"

#include <algorithm>
#include <numeric>

namespace antiatom {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as the root so roots name components by their
    // smallest vertex.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PFGraph::PFGraph(const NumericalSemigroup& s) {
  const Element f = s.frobenius();
  for (Element p : s.pseudo_frobenius()) {
    if (p != f) vertices_.push_back(p);
  }
  const std::size_t n = vertices_.size();
  adjacency_.assign(n * n, 0);
  UnionFind components(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (s.contains(vertices_[i] + vertices_[j] - f)) {
        adjacency_[i * n + j] = adjacency_[j * n + i] = 1;
        components.unite(i, j);
      }
    }
  }
  component_id_.assign(n, 0);
  std::vector<std::size_t> label(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = components.find(i);
    if (label[root] == n) label[root] = kappa_++;
    component_id_[i] = label[root];
  }
}

std::vector<std::pair<Element, Element>> PFGraph::edges() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

std::vector<Element> PFGraph::loops() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (has_loop(i)) out.push_back(vertices_[i]);
  }
  return out;
}

std::vector<std::vector<Element>> PFGraph::components() const {
  std::vector<std::vector<Element>> out(kappa_);
  for (std::size_t i = 0; i < size(); ++i) out[component_id_[i]].push_back(vertices_[i]);
  return out;
}

PFGraph build_gpf(const NumericalSemigroup& s) { return PFGraph(s); }

std::vector<FrobeniusTriangle> triangles_for(const NumericalSemigroup& s, Element p) {
  std::vector<FrobeniusTriangle> out;
  if (p == s.frobenius() || !s.is_pseudo_frobenius(p)) return out;
  for (Element x : s.void_elements()) {
    Element y = s.frobenius() - p - x;
    if (y <= 0) break;
    if (s.in_void(y)) out.push_back({p, x, y});
  }
  return out;
}

std::vector<FrobeniusTriangle> frobenius_triangles(const NumericalSemigroup& s) {
  std::vector<FrobeniusTriangle> out;
  for (Element p : s.pseudo_frobenius()) {
    auto part = triangles_for(s, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool ideal_satisfies(const VoidPoset& poset, const OrderIdeal& ideal,
                     const FrobeniusTriangle& triangle) {
  auto in_ideal = [&](Element v) {
    auto i = poset.index_of(v);
    return i && ideal.mask.test(*i);
  };
  return in_ideal(triangle.p) && in_ideal(triangle.x) &&
         !in_ideal(poset.frobenius() - triangle.y);
}

bool is_triangle_free(const NumericalSemigroup& s) {
  const auto& pf = s.pseudo_frobenius();
  for (Element p1 : pf) {
    if (p1 == s.frobenius()) continue;
    for (Element p2 : pf) {
      if (p2 < p1 && s.in_void(p1 - p2)) return false;
    }
  }
  return true;
}

bool is_p_minimal(const NumericalSemigroup& s, std::uint64_t computed_p) {
  const auto kappa = build_gpf(s).kappa();
  return kappa < 64 && computed_p == (std::uint64_t{1} << kappa);
}

}  // namespace antiatom
