#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mods/detail/mask.hpp"
#include "mods/vertex_set.hpp"

namespace mods::detail {

struct CoverResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
  std::uint64_t explored = 0;
};

// Minimum-cardinality selection of vertices whose closed neighborhoods
// together contain at least `target` vertices.
//
// closed[v] is N+[v] for out-domination problems and N[v] for undirected
// ones; target is ceil(n/2) for majority variants and n for full
// domination. Every solver answer is the lexicographically smallest
// minimum selection, so exact and oracle modes agree bit for bit.
template <class Mask>
class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> closed, std::size_t target)
      : closed_(std::move(closed)), n_(closed_.size()), target_(target) {
    for (const auto& c : closed_) max_gain_ = std::max(max_gain_, mask_count(c));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t target() const noexcept { return target_; }

  // Largest-gain-first greedy; ties go to the smallest label.
  CoverResult greedy() const {
    CoverResult r;
    Mask covered = make_mask<Mask>(n_);
    std::size_t count = 0;
    std::vector<bool> used(n_, false);
    while (count < target_) {
      std::size_t best_gain = 0;
      std::size_t best = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (used[v]) continue;
        const auto g = mask_count_minus(closed_[v], covered);
        ++r.explored;
        if (g > best_gain) {
          best_gain = g;
          best = v;
        }
      }
      if (best == n_) break;  // unreachable target
      used[best] = true;
      mask_or(covered, closed_[best]);
      count += best_gain;
      r.witness.push_back(static_cast<Vertex>(best));
    }
    std::sort(r.witness.begin(), r.witness.end());
    r.value = r.witness.size();
    return r;
  }

  // Plain enumeration: subsets by increasing cardinality, lexicographic
  // within a cardinality, first hit wins. No pruning.
  CoverResult oracle() const {
    CoverResult r;
    for (std::size_t k = 0; k <= n_; ++k) {
      std::vector<Vertex> combo(k);
      for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Vertex>(i);
      while (true) {
        ++r.explored;
        Mask covered = make_mask<Mask>(n_);
        for (Vertex v : combo) mask_or(covered, closed_[v]);
        if (mask_count(covered) >= target_) {
          r.value = k;
          r.witness = combo;
          return r;
        }
        if (!next_combination(combo)) break;
      }
    }
    r.value = n_;
    return r;
  }

  // Branch and bound. Vertices are decided in ascending label order with
  // the include branch explored first, so the first selection found at a
  // given cardinality is the lexicographically smallest one. Cardinalities
  // are tried upward from the degree lower bound, capped by greedy.
  CoverResult exact() const {
    CoverResult r;
    if (target_ == 0) return r;
    const CoverResult seed = greedy();
    r.explored = seed.explored;
    const std::size_t lower = max_gain_ == 0 ? 0 : (target_ + max_gain_ - 1) / max_gain_;
    for (std::size_t k = std::max<std::size_t>(lower, 1); k <= seed.value; ++k) {
      std::vector<Vertex> chosen;
      chosen.reserve(k);
      Mask covered = make_mask<Mask>(n_);
      if (first_cover(0, k, covered, 0, chosen, r.explored, /*skip_idle=*/true)) {
        r.value = k;
        r.witness = std::move(chosen);
        return r;
      }
    }
    // Only reached when the target is unreachable, which callers rule out.
    r.value = seed.value;
    r.witness = seed.witness;
    return r;
  }

  // True when some selection of at most k vertices reaches the target.
  bool exists_within(std::size_t k, std::uint64_t* explored = nullptr) const {
    if (target_ == 0) return true;
    std::uint64_t local = 0;
    std::vector<Vertex> chosen;
    Mask covered = make_mask<Mask>(n_);
    const bool found = first_cover(0, k, covered, 0, chosen, local, /*skip_idle=*/true);
    if (explored != nullptr) *explored += local;
    return found;
  }

  // Calls visit(selection) for every selection of exactly k vertices that
  // reaches the target, in lexicographic order. Only valid when k is the
  // minimum cardinality: vertices that add nothing to the partial selection
  // are skipped, which would lose non-minimum selections.
  void for_each_minimum(std::size_t k, const std::function<void(const std::vector<Vertex>&)>& visit) const {
    std::vector<Vertex> chosen;
    Mask covered = make_mask<Mask>(n_);
    std::uint64_t explored = 0;
    all_covers(0, k, covered, 0, chosen, explored, visit);
  }

  // Calls visit(selection) for every inclusion-minimal selection reaching
  // the target, in lexicographic order of ascending sequences. visit returns
  // false to stop the enumeration.
  void for_each_minimal(const std::function<bool(const std::vector<Vertex>&)>& visit) const {
    std::vector<Mask> suffix(n_ + 1, make_mask<Mask>(n_));
    for (std::size_t v = n_; v-- > 0;) {
      suffix[v] = suffix[v + 1];
      mask_or(suffix[v], closed_[v]);
    }
    std::vector<Vertex> chosen;
    Mask covered = make_mask<Mask>(n_);
    minimal_rec(0, covered, chosen, suffix, visit);
  }

  bool covers(const std::vector<Vertex>& selection) const {
    Mask covered = make_mask<Mask>(n_);
    for (Vertex v : selection) mask_or(covered, closed_[v]);
    return mask_count(covered) >= target_;
  }

 private:
  static bool next_combination_impl(std::vector<Vertex>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (c[i] < n - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  }
  bool next_combination(std::vector<Vertex>& c) const { return next_combination_impl(c, n_); }

  // Upper estimate of what `picks` more vertices from [start, n) can add.
  std::size_t best_gains(std::size_t start, std::size_t picks, const Mask& covered) const {
    if (picks == 0) return 0;
    gains_.clear();
    for (std::size_t v = start; v < n_; ++v) gains_.push_back(mask_count_minus(closed_[v], covered));
    if (gains_.size() > picks) {
      std::nth_element(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(picks), gains_.end(),
                       std::greater<>());
      gains_.resize(picks);
    }
    std::size_t total = 0;
    for (auto g : gains_) total += g;
    return total;
  }

  bool first_cover(std::size_t start, std::size_t budget, const Mask& covered, std::size_t count,
                   std::vector<Vertex>& chosen, std::uint64_t& explored, bool skip_idle) const {
    ++explored;
    if (count >= target_) return true;
    if (budget == 0 || start >= n_) return false;
    if (count + best_gains(start, budget, covered) < target_) return false;
    for (std::size_t v = start; v < n_; ++v) {
      const auto gain = mask_count_minus(closed_[v], covered);
      if (skip_idle && gain == 0) continue;
      Mask next = covered;
      mask_or(next, closed_[v]);
      chosen.push_back(static_cast<Vertex>(v));
      if (first_cover(v + 1, budget - 1, next, count + gain, chosen, explored, skip_idle)) return true;
      chosen.pop_back();
    }
    return false;
  }

  void all_covers(std::size_t start, std::size_t budget, const Mask& covered, std::size_t count,
                  std::vector<Vertex>& chosen, std::uint64_t& explored,
                  const std::function<void(const std::vector<Vertex>&)>& visit) const {
    ++explored;
    if (budget == 0) {
      if (count >= target_) visit(chosen);
      return;
    }
    if (n_ - start < budget) return;
    if (count + best_gains(start, budget, covered) < target_) return;
    for (std::size_t v = start; v + budget <= n_; ++v) {
      const auto gain = mask_count_minus(closed_[v], covered);
      if (gain == 0) continue;
      Mask next = covered;
      mask_or(next, closed_[v]);
      chosen.push_back(static_cast<Vertex>(v));
      all_covers(v + 1, budget - 1, next, count + gain, chosen, explored, visit);
      chosen.pop_back();
    }
  }

  // Each chosen vertex must keep something only it covers; once a member
  // loses that, no superset can be minimal.
  bool members_all_needed(const std::vector<Vertex>& chosen) const {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Mask others = make_mask<Mask>(n_);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != i) mask_or(others, closed_[chosen[j]]);
      }
      if (mask_count_minus(closed_[chosen[i]], others) == 0) return false;
    }
    return true;
  }

  bool minimal_now(const std::vector<Vertex>& chosen) const {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Mask others = make_mask<Mask>(n_);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != i) mask_or(others, closed_[chosen[j]]);
      }
      if (mask_count(others) >= target_) return false;
    }
    return true;
  }

  bool minimal_rec(std::size_t start, const Mask& covered, std::vector<Vertex>& chosen,
                   const std::vector<Mask>& suffix,
                   const std::function<bool(const std::vector<Vertex>&)>& visit) const {
    for (std::size_t v = start; v < n_; ++v) {
      {
        Mask reach = covered;
        mask_or(reach, suffix[v]);
        if (mask_count(reach) < target_) return true;
      }
      Mask next = covered;
      mask_or(next, closed_[v]);
      chosen.push_back(static_cast<Vertex>(v));
      if (members_all_needed(chosen)) {
        if (mask_count(next) >= target_) {
          if (minimal_now(chosen) && !visit(chosen)) return false;
        } else if (!minimal_rec(v + 1, next, chosen, suffix, visit)) {
          return false;
        }
      }
      chosen.pop_back();
    }
    return true;
  }

  std::vector<Mask> closed_;
  std::size_t n_;
  std::size_t target_;
  std::size_t max_gain_ = 0;
  mutable std::vector<std::size_t> gains_;
};

}  // namespace mods::detail
