#include "antiatom/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "antiatom/error.hpp"
#include "antiatom/pf_structure.hpp"
#include "antiatom/void_poset.hpp"

namespace antiatom {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute:
      return "brute";
    case Method::characterization:
      return "characterization";
    case Method::alg1:
      return "alg1";
    case Method::alg1_recursive:
      return "alg1_recursive";
  }
  return "alg1_recursive";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "brute") return Method::brute;
  if (name == "char" || name == "characterization") return Method::characterization;
  if (name == "alg1") return Method::alg1;
  if (name == "rec" || name == "alg1_recursive") return Method::alg1_recursive;
  return std::nullopt;
}

NumericalSet AssociatedSetCollection::numerical_set(std::size_t i) const {
  auto flags = base.as_set().membership();
  for (Element v : extras[i]) flags.set(static_cast<std::size_t>(v));
  return NumericalSet::from_membership(flags);
}

namespace {

using ResultSet = std::set<IndexSet>;

// Runs work(worker) on `threads` workers and returns once all finish. An
// exception thrown by any worker is rethrown here.
void run_workers(unsigned threads, const std::function<void(unsigned)>& work) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

NumericalSet with_extras(const NumericalSemigroup& s, const VoidPoset& poset,
                         const IndexSet& ideal) {
  auto flags = s.as_set().membership();
  for (auto i = ideal.find_first(); i != IndexSet::npos; i = ideal.find_next(i)) {
    flags.set(static_cast<std::size_t>(poset.value(i)));
  }
  return NumericalSet::from_membership(flags);
}

std::string describe(const std::vector<Element>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ']';
  return out.str();
}

AssociatedSetCollection finish(const NumericalSemigroup& s, const VoidPoset& poset,
                               Method method, std::vector<ResultSet>& partial,
                               const EnumerationOptions& options) {
  ResultSet merged;
  for (auto& part : partial) merged.merge(part);

  AssociatedSetCollection out{s, method, {}};
  out.extras.reserve(merged.size());
  for (const auto& ideal : merged) {
    if (options.validate && !(atom_monoid_set(with_extras(s, poset, ideal)) == s.as_set())) {
      throw ValidationFailure(std::string(to_string(method)) +
                              " produced a set that is not associated: semigroup gaps " +
                              describe(s.gaps()) + ", extras " +
                              describe(poset.values_of(ideal)));
    }
    out.extras.push_back(poset.values_of(ideal));
  }
  std::sort(out.extras.begin(), out.extras.end());
  return out;
}

void require_subset_limit(const VoidPoset& poset, const EnumerationOptions& options) {
  if (poset.size() > options.subset_limit || poset.size() >= 63) {
    throw LimitExceeded("void has " + std::to_string(poset.size()) +
                        " elements; subset enumeration is limited to " +
                        std::to_string(options.subset_limit) +
                        " (use alg1 or alg1_recursive)");
  }
}

// Precomputed choice data for the Frobenius-triangle methods. For each
// P in PF(S) \ {F}, the options in C_P are the pseudo-triangle (P, F - P, 0)
// and every (P, x, y) in Tr_P(S). Choosing one forces P and the up-set of x
// into the ideal and (for a real triangle) the down-set of F - y out of it.
class TriangleSearch {
 public:
  struct Choice {
    IndexSet forced;
    IndexSet blocked;
  };
  struct Entry {
    IndexSet down;
    std::vector<Choice> choices;
  };

  TriangleSearch(const NumericalSemigroup& s, const VoidPoset& poset) : poset_(poset) {
    const std::size_t n = poset.size();
    for (std::size_t i : poset.maximal_indices()) {
      Entry entry{poset.down_set(i), {}};
      IndexSet self(n);
      self.set(i);
      entry.choices.push_back({self | poset.up_set(poset.conjugate(i)), IndexSet(n)});
      for (const auto& t : triangles_for(s, poset.value(i))) {
        std::size_t x = *poset.index_of(t.x);
        std::size_t y = *poset.index_of(t.y);
        entry.choices.push_back({self | poset.up_set(x), poset.down_set(poset.conjugate(y))});
      }
      entries_.push_back(std::move(entry));
    }
  }

  std::size_t size() const { return entries_.size(); }

  std::uint64_t choice_product() const {
    std::uint64_t product = 1;
    for (const auto& e : entries_) {
      std::uint64_t factor = 1 + e.choices.size();
      if (product > std::numeric_limits<std::uint64_t>::max() / factor) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      product *= factor;
    }
    return product;
  }

  // Every order ideal Y of the subposet on M \ (G u B1 u B2) gives G u Y.
  void complete(const IndexSet& forced, const IndexSet& b1, const IndexSet& b2,
                ResultSet& out) const {
    IndexSet domain = ~(forced | b1 | b2);
    for_each_order_ideal_dfs(poset_, domain,
                             [&](const IndexSet& y) { out.insert(forced | y); });
  }

  // One subset A (bit k set: the k-th pseudo-Frobenius number is in A) and
  // every tuple in prod_{P in A} C_P.
  void plain(std::uint64_t subset, ResultSet& out) const {
    const std::size_t n = poset_.size();
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if ((subset >> k) & 1U) members.push_back(k);
    }
    std::vector<std::size_t> pick(members.size(), 0);
    while (true) {
      IndexSet forced(n);
      IndexSet b1(n);
      IndexSet b2(n);
      for (std::size_t j = 0; j < members.size(); ++j) {
        const auto& choice = entries_[members[j]].choices[pick[j]];
        forced |= choice.forced;
        b1 |= choice.blocked;
      }
      for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!((subset >> k) & 1U)) b2 |= entries_[k].down;
      }
      if (!forced.intersects(b1) && !forced.intersects(b2)) complete(forced, b1, b2, out);

      std::size_t j = 0;
      while (j < members.size() && ++pick[j] == entries_[members[j]].choices.size()) {
        pick[j++] = 0;
      }
      if (j == members.size()) break;
    }
  }

  // Below depth k the search only sees forced and B1 u B2, so a state
  // reached a second time contributes nothing new.
  using Visited = std::set<std::tuple<std::size_t, IndexSet, IndexSet>>;

  void recurse(std::size_t k, const IndexSet& forced, const IndexSet& b1, const IndexSet& b2,
               ResultSet& out, Visited& visited) const {
    if (!visited.emplace(k, forced, b1 | b2).second) return;
    if (k == entries_.size()) {
      complete(forced, b1, b2, out);
      return;
    }
    const auto& entry = entries_[k];
    if (!forced.intersects(entry.down)) recurse(k + 1, forced, b1, b2 | entry.down, out, visited);
    for (const auto& choice : entry.choices) {
      IndexSet grown = forced | choice.forced;
      IndexSet blocked = b1 | choice.blocked;
      if (grown.intersects(blocked) || grown.intersects(b2)) continue;
      recurse(k + 1, grown, blocked, b2, out, visited);
    }
  }

  struct Branch {
    std::size_t depth;
    IndexSet forced;
    IndexSet b1;
    IndexSet b2;
  };

  // Expands the first levels of the recursion breadth-first until there are
  // enough independent branches to share out.
  std::vector<Branch> frontier(std::size_t wanted) const {
    const std::size_t n = poset_.size();
    std::vector<Branch> level{{0, IndexSet(n), IndexSet(n), IndexSet(n)}};
    std::size_t depth = 0;
    while (level.size() < wanted && depth < entries_.size()) {
      std::vector<Branch> next;
      const auto& entry = entries_[depth];
      for (const auto& b : level) {
        if (!b.forced.intersects(entry.down)) {
          next.push_back({depth + 1, b.forced, b.b1, b.b2 | entry.down});
        }
        for (const auto& choice : entry.choices) {
          IndexSet grown = b.forced | choice.forced;
          IndexSet blocked = b.b1 | choice.blocked;
          if (grown.intersects(blocked) || grown.intersects(b.b2)) continue;
          next.push_back({depth + 1, std::move(grown), std::move(blocked), b.b2});
        }
      }
      level = std::move(next);
      ++depth;
    }
    return level;
  }

 private:
  const VoidPoset& poset_;
  std::vector<Entry> entries_;
};

void require_choice_budget(const TriangleSearch& search, const EnumerationOptions& options) {
  auto product = search.choice_product();
  if (product > options.choice_budget || search.size() >= 63) {
    throw LimitExceeded("choice product " + std::to_string(product) +
                        " exceeds the budget of " + std::to_string(options.choice_budget));
  }
}

}  // namespace

AssociatedSetCollection associated_sets_bruteforce(const NumericalSemigroup& s,
                                                   const EnumerationOptions& options) {
  const VoidPoset poset(s);
  require_subset_limit(poset, options);
  const std::size_t n = poset.size();
  const std::uint64_t end = std::uint64_t{1} << n;
  const unsigned threads = std::max(1U, options.threads);
  std::vector<ResultSet> partial(threads);

  run_workers(threads, [&](unsigned w) {
    for (std::uint64_t mask = w; mask < end; mask += threads) {
      IndexSet ideal(n, mask);
      if (atom_monoid_set(with_extras(s, poset, ideal)) == s.as_set()) {
        partial[w].insert(std::move(ideal));
      }
    }
  });
  return finish(s, poset, Method::brute, partial, options);
}

AssociatedSetCollection associated_sets_by_characterization(const NumericalSemigroup& s,
                                                            const EnumerationOptions& options) {
  const VoidPoset poset(s);
  require_subset_limit(poset, options);

  struct Condition {
    std::size_t position;
    bool double_outside;
    std::vector<std::pair<std::size_t, std::size_t>> triangles;  // (x, F - y)
  };
  std::vector<Condition> conditions;
  for (std::size_t i : poset.maximal_indices()) {
    Condition c{i, !s.contains(2 * poset.value(i)), {}};
    for (const auto& t : triangles_for(s, poset.value(i))) {
      c.triangles.emplace_back(*poset.index_of(t.x),
                               poset.conjugate(*poset.index_of(t.y)));
    }
    conditions.push_back(std::move(c));
  }

  std::vector<ResultSet> partial(1);
  enumerate_order_ideals(
      poset,
      [&](const OrderIdeal& ideal) {
        const auto& mask = ideal.mask;
        for (const auto& c : conditions) {
          if (!mask.test(c.position) || c.double_outside) continue;
          if (mask.test(poset.conjugate(c.position))) continue;
          bool satisfied = std::any_of(c.triangles.begin(), c.triangles.end(), [&](auto t) {
            return mask.test(t.first) && !mask.test(t.second);
          });
          if (!satisfied) return;
        }
        partial[0].insert(mask);
      },
      options.subset_limit);
  return finish(s, poset, Method::characterization, partial, options);
}

AssociatedSetCollection associated_sets_alg1(const NumericalSemigroup& s,
                                             const EnumerationOptions& options) {
  const VoidPoset poset(s);
  const TriangleSearch search(s, poset);
  require_choice_budget(search, options);

  const std::uint64_t subsets = std::uint64_t{1} << search.size();
  const unsigned threads = std::max(1U, options.threads);
  std::vector<ResultSet> partial(threads);
  run_workers(threads, [&](unsigned w) {
    for (std::uint64_t a = w; a < subsets; a += threads) search.plain(a, partial[w]);
  });
  return finish(s, poset, Method::alg1, partial, options);
}

AssociatedSetCollection associated_sets_recursive(const NumericalSemigroup& s,
                                                  const EnumerationOptions& options) {
  const VoidPoset poset(s);
  const TriangleSearch search(s, poset);
  require_choice_budget(search, options);

  const unsigned threads = std::max(1U, options.threads);
  std::vector<ResultSet> partial(threads);
  if (threads == 1) {
    const std::size_t n = poset.size();
    TriangleSearch::Visited visited;
    search.recurse(0, IndexSet(n), IndexSet(n), IndexSet(n), partial[0], visited);
  } else {
    const auto branches = search.frontier(4 * threads);
    run_workers(threads, [&](unsigned w) {
      TriangleSearch::Visited visited;
      for (std::size_t b = w; b < branches.size(); b += threads) {
        const auto& br = branches[b];
        search.recurse(br.depth, br.forced, br.b1, br.b2, partial[w], visited);
      }
    });
  }
  return finish(s, poset, Method::alg1_recursive, partial, options);
}

AssociatedSetCollection associated_sets(const NumericalSemigroup& s, Method method,
                                        const EnumerationOptions& options) {
  switch (method) {
    case Method::brute:
      return associated_sets_bruteforce(s, options);
    case Method::characterization:
      return associated_sets_by_characterization(s, options);
    case Method::alg1:
      return associated_sets_alg1(s, options);
    case Method::alg1_recursive:
      return associated_sets_recursive(s, options);
  }
  return associated_sets_recursive(s, options);
}

std::uint64_t count_P(const NumericalSemigroup& s, Method method,
                      const EnumerationOptions& options) {
  return associated_sets(s, method, options).count();
}

std::uint64_t choice_product_estimate(const NumericalSemigroup& s) {
  const VoidPoset poset(s);
  return TriangleSearch(s, poset).choice_product();
}

std::uint64_t CensusResult::total() const {
  std::uint64_t sum = 0;
  for (const auto& [semigroup, count] : counts) sum += count;
  return sum;
}

CensusResult census_by_frobenius(Element frobenius, unsigned threads) {
  if (frobenius < 1) {
    throw InvalidInput("census needs a Frobenius number >= 1, got " + std::to_string(frobenius));
  }
  if (frobenius > kCensusMaxFrobenius) {
    throw LimitExceeded("census scans 2^(F-1) sets; F = " + std::to_string(frobenius) +
                        " exceeds the limit of " + std::to_string(kCensusMaxFrobenius));
  }
  const auto f = static_cast<unsigned>(frobenius);
  const std::uint64_t end = std::uint64_t{1} << (f - 1);
  threads = std::max(1U, threads);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(threads);

  // Bit i of `mask` is membership of i + 1, for 1 <= i + 1 <= F - 1; F itself
  // is always the largest gap.
  run_workers(threads, [&](unsigned w) {
    for (std::uint64_t mask = w; mask < end; mask += threads) {
      const std::uint64_t members = 1ULL | (mask << 1);
      ++partial[w][atom_monoid_mask(members, f)];
    }
  });

  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (auto& part : partial) {
    for (auto [key, count] : part) merged[key] += count;
  }
  CensusResult result;
  result.frobenius = frobenius;
  for (auto [key, count] : merged) {
    auto set = NumericalSet::from_membership(boost::dynamic_bitset<>(f + 1, key));
    result.counts.emplace_back(NumericalSemigroup::from_set(set), count);
  }
  std::sort(result.counts.begin(), result.counts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace antiatom
