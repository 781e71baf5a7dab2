#pragma once

#include <span>
#include <vector>

#include "nabc/group.hpp"
#include "nabc/parallel.hpp"

namespace nabc {

/// Backtracking over values at the generators of a group, with the value at
/// every other element forced by a propagation rule along Cayley-graph edges:
///
///   value(e * gens[j]) = combine(e, value(e), j, value(gens[j]))
///
/// After fixing the first j+1 generator values the rule is propagated over the
/// subgroup they generate and every edge is checked, so inconsistent prefixes are
/// pruned early. For combine = target multiplication the surviving assignments
/// are exactly the homomorphisms; for combine(e, v, j, w) = v * (e . w) they are
/// the 1-cocycles.
class GeneratorSearch {
 public:
  GeneratorSearch(FiniteGroup source, std::vector<Elem> gens, int identity_value)
      : src_(std::move(source)), gens_(std::move(gens)), identity_value_(identity_value) {}

  /// candidates(j) -> range of allowed values for gens[j]
  /// visit(values) -> false stops the search
  template <class Candidates, class Combine, class Visit>
  void run(Candidates&& candidates, Combine&& combine, Visit&& visit) const {
    std::vector<int> gen_values(gens_.size(), -1);
    std::vector<int> values(src_.order(), -1);
    bool stop = false;
    recurse(0, gen_values, values, candidates, combine, visit, stop);
  }

  /// Collects all complete assignments. The first generator's candidates are
  /// distributed over `jobs` workers; results are concatenated in candidate
  /// order, so the output does not depend on `jobs`.
  template <class Candidates, class Combine>
  std::vector<std::vector<int>> collect(Candidates&& candidates, Combine&& combine, int jobs = 1) const {
    if (gens_.empty()) {
      std::vector<int> values(src_.order(), identity_value_);
      return {values};
    }
    const auto& first = candidates(0);
    std::vector<int> first_list(std::begin(first), std::end(first));
    std::vector<std::vector<std::vector<int>>> buckets(first_list.size());
    parallel_for(jobs, first_list.size(), [&](std::size_t i) {
      std::vector<int> gen_values(gens_.size(), -1);
      std::vector<int> values(src_.order(), -1);
      gen_values[0] = first_list[i];
      if (!propagate(0, gen_values, values, combine)) return;
      bool stop = false;
      recurse(1, gen_values, values, candidates, combine,
              [&](const std::vector<int>& v) {
                buckets[i].push_back(v);
                return true;
              },
              stop);
    });
    std::vector<std::vector<int>> out;
    for (auto& b : buckets)
      for (auto& v : b) out.push_back(std::move(v));
    return out;
  }

  const FiniteGroup& source() const { return src_; }
  const std::vector<Elem>& generators() const { return gens_; }

 private:
  template <class Combine>
  bool propagate(std::size_t level, const std::vector<int>& gen_values, std::vector<int>& values,
                 Combine& combine) const {
    std::fill(values.begin(), values.end(), -1);
    values[0] = identity_value_;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem e = queue[q];
      for (std::size_t j = 0; j <= level; ++j) {
        const Elem x = src_.mul(e, gens_[j]);
        const int v = combine(e, values[e], static_cast<int>(j), gen_values[j]);
        if (values[x] < 0) {
          values[x] = v;
          queue.push_back(x);
        } else if (values[x] != v) {
          return false;
        }
      }
    }
    for (std::size_t j = 0; j <= level; ++j)
      if (values[gens_[j]] != gen_values[j]) return false;
    return true;
  }

  template <class Candidates, class Combine, class Visit>
  void recurse(std::size_t level, std::vector<int>& gen_values, std::vector<int>& values,
               Candidates& candidates, Combine& combine, Visit&& visit, bool& stop) const {
    if (stop) return;
    if (level == gens_.size()) {
      if (gens_.empty()) {
        std::fill(values.begin(), values.end(), identity_value_);
      } else if (!propagate(level - 1, gen_values, values, combine)) {
        return;
      }
      if (!visit(values)) stop = true;
      return;
    }
    for (int c : candidates(static_cast<int>(level))) {
      gen_values[level] = c;
      if (!propagate(level, gen_values, values, combine)) continue;
      recurse(level + 1, gen_values, values, candidates, combine, visit, stop);
      if (stop) return;
    }
  }

  FiniteGroup src_;
  std::vector<Elem> gens_;
  int identity_value_;
};

}  // namespace nabc
