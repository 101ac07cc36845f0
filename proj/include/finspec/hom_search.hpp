#pragma once

/**
 * @file hom_search.hpp
 * @brief Enumeration of unital ring homomorphisms by backtracking over
 *        generator images with constraint propagation.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "finspec/hom.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// Subring generated by the seeds (plus 0 and 1): worklist closure
/// under + and *.  Additive inverses come along since the ring is finite.
inline std::vector<bool> subring_closure(const FiniteRing& r,
                                         const std::vector<Elem>& seeds) {
  std::vector<bool> in(r.size(), false);
  std::vector<Elem> members, queue;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(r.zero());
  push(r.one());
  for (Elem s : seeds) push(s);
  while (!queue.empty()) {
    Elem a = queue.back();
    queue.pop_back();
    members.push_back(a);
    for (Elem m : members) {
      push(r.add(a, m));
      push(r.mul(a, m));
    }
  }
  return in;
}

/// Greedy generating set: repeatedly adds the element whose closure
/// grows the subring the most (smallest index on ties).
inline std::vector<Elem> greedy_generators(const FiniteRing& r) {
  std::vector<Elem> gens;
  std::vector<bool> closed = subring_closure(r, {});
  auto count = [](const std::vector<bool>& v) {
    std::size_t c = 0;
    for (bool b : v) c += b;
    return c;
  };
  std::size_t have = count(closed);
  while (have < r.size()) {
    Elem best = 0;
    std::size_t best_gain = 0;
    for (Elem g = 0; g < r.size(); ++g) {
      if (closed[g]) continue;
      std::vector<Elem> trial = gens;
      trial.push_back(g);
      std::size_t c = count(subring_closure(r, trial));
      if (c > best_gain) {
        best_gain = c;
        best = g;
      }
    }
    gens.push_back(best);
    closed = subring_closure(r, gens);
    have = count(closed);
  }
  return gens;
}

namespace detail {

class HomSearch {
 public:
  HomSearch(const FiniteRing& a, const FiniteRing& b, std::uint64_t budget,
            const std::function<bool(const RingHom&)>& visit)
      : a_(a), b_(b), budget_(budget), visit_(visit) {}

  void run() {
    img_.assign(a_.size(), -1);
    known_.clear();
    std::vector<Elem> trail;
    if (!assign(a_.zero(), b_.zero(), trail)) return;
    if (!assign(a_.one(), b_.one(), trail)) return;
    if (!propagate(0, trail)) return;
    gens_ = greedy_generators(a_);
    recurse(0);
  }

 private:
  bool assign(Elem x, Elem v, std::vector<Elem>& trail) {
    if (img_[x] >= 0) return img_[x] == static_cast<int>(v);
    img_[x] = static_cast<int>(v);
    known_.push_back(x);
    trail.push_back(x);
    return true;
  }

  // Derives images for sums and products of known elements starting at
  // position `from` in the discovery order; false on conflict.
  bool propagate(std::size_t from, std::vector<Elem>& trail) {
    for (std::size_t i = from; i < known_.size(); ++i) {
      Elem u = known_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        Elem v = known_[j];
        if (budget_ == 0) throw SearchBudgetError("hom search budget exhausted");
        --budget_;
        Elem iu = static_cast<Elem>(img_[u]);
        Elem iv = static_cast<Elem>(img_[v]);
        if (!assign(a_.add(u, v), b_.add(iu, iv), trail)) return false;
        if (!assign(a_.mul(u, v), b_.mul(iu, iv), trail)) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem x : trail) img_[x] = -1;
    known_.resize(known_.size() - trail.size());
  }

  void recurse(std::size_t gi) {
    if (stop_) return;
    while (gi < gens_.size() && img_[gens_[gi]] >= 0) ++gi;
    if (gi == gens_.size()) {
      std::vector<Elem> m(a_.size());
      for (std::size_t x = 0; x < a_.size(); ++x)
        m[x] = static_cast<Elem>(img_[x]);
      RingHom h(a_, b_, std::move(m));
      if (visit_(h)) stop_ = true;
      return;
    }
    Elem g = gens_[gi];
    for (Elem c = 0; c < b_.size() && !stop_; ++c) {
      std::vector<Elem> trail;
      std::size_t from = known_.size();
      if (assign(g, c, trail) && propagate(from, trail)) recurse(gi + 1);
      undo(trail);
    }
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::uint64_t budget_;
  const std::function<bool(const RingHom&)>& visit_;
  std::vector<int> img_;
  std::vector<Elem> known_;
  std::vector<Elem> gens_;
  bool stop_ = false;
};

}  // namespace detail

/// Visits every unital hom a -> b in a deterministic order; the visitor
/// returns true to stop the search.
inline void search_homs(const FiniteRing& a, const FiniteRing& b,
                        const std::function<bool(const RingHom&)>& visit,
                        std::uint64_t node_budget = kDefaultHomSearchBudget) {
  detail::HomSearch s(a, b, node_budget, visit);
  s.run();
}

/// All unital ring homs a -> b, up to `limit`.
inline std::vector<RingHom> enumerate_homs(
    const FiniteRing& a, const FiniteRing& b, std::size_t limit = SIZE_MAX,
    std::uint64_t node_budget = kDefaultHomSearchBudget) {
  std::vector<RingHom> out;
  if (limit == 0) return out;
  search_homs(
      a, b,
      [&](const RingHom& h) {
        out.push_back(h);
        return out.size() >= limit;
      },
      node_budget);
  return out;
}

/// First ring isomorphism a -> b found, if any.
inline std::optional<RingHom> find_isomorphism(
    const FiniteRing& a, const FiniteRing& b,
    std::uint64_t node_budget = kDefaultHomSearchBudget) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<RingHom> iso;
  search_homs(
      a, b,
      [&](const RingHom& h) {
        if (h.is_bijective()) {
          iso = h;
          return true;
        }
        return false;
      },
      node_budget);
  return iso;
}

inline bool is_isomorphic(const FiniteRing& a, const FiniteRing& b,
                          std::uint64_t node_budget = kDefaultHomSearchBudget) {
  return find_isomorphism(a, b, node_budget).has_value();
}

}  // namespace finspec
