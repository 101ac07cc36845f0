#pragma once

/**
 * @file topology.hpp
 * @brief Explicit finite topological spaces: generation from a
 *        subbasis, separation tests and the specialization order.
 *
 * Every finite space is Alexandrov: each point x has a minimal open
 * neighborhood U(x), and a subset is open exactly when it contains U(x)
 * for each of its points.  Generation and the separation predicates all
 * go through these minimal neighborhoods, which keeps them polynomial
 * even when the open family itself is exponential.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "finspec/errors.hpp"
#include "finspec/poset.hpp"

namespace finspec {

/// Subset of the ground set, one bit per point.
using Mask = std::uint64_t;

class FiniteTopology {
 public:
  /// Wraps an explicit open family after verifying it is a topology
  /// (compares against the topology its own members generate).
  FiniteTopology(std::size_t ground_size, std::vector<Mask> opens)
      : FiniteTopology(check_tag{}, ground_size, std::move(opens)) {
    FiniteTopology generated = from_subbasis(ground_, opens_);
    if (opens_ != generated.opens_)
      throw Error("open family is not closed under union/intersection");
  }

  /// The topology generated by an arbitrary family of subsets.
  static FiniteTopology from_subbasis(std::size_t ground_size,
                                      const std::vector<Mask>& subbasis) {
    if (ground_size > kMaxTopologyPoints)
      throw BoundError("topology limited to " +
                       std::to_string(kMaxTopologyPoints) + " points");
    const Mask full = full_mask(ground_size);
    std::vector<Mask> minimal(ground_size, full);
    for (Mask s : subbasis) {
      if (s & ~full) throw Error("subbasis set leaves the ground set");
      for (std::size_t x = 0; x < ground_size; ++x)
        if (s >> x & 1) minimal[x] &= s;
    }
    std::vector<Mask> opens;
    for (Mask o = 0;; ++o) {
      bool ok = true;
      for (std::size_t x = 0; x < ground_size && ok; ++x)
        if (o >> x & 1) ok = (minimal[x] & ~o) == 0;
      if (ok) opens.push_back(o);
      if (o == full) break;
    }
    return FiniteTopology(check_tag{}, ground_size, std::move(opens));
  }

  std::size_t ground_size() const { return ground_; }
  const std::vector<Mask>& opens() const { return opens_; }
  Mask full() const { return full_mask(ground_); }

  bool is_open(Mask s) const {
    return std::binary_search(opens_.begin(), opens_.end(), s);
  }
  bool is_closed(Mask s) const { return is_open(full() & ~s); }
  bool is_clopen(Mask s) const { return is_open(s) && is_closed(s); }

  /// Minimal open neighborhood of a point.
  Mask minimal_open(std::size_t x) const {
    Mask m = full();
    for (Mask o : opens_)
      if (o >> x & 1) m &= o;
    return m;
  }

  /// Smallest closed superset.
  Mask closure(Mask s) const {
    Mask c = full();
    for (Mask o : opens_)
      if ((o & s) == 0) c &= ~o;
    return c & full();
  }

  bool is_discrete() const { return opens_.size() == (Mask{1} << ground_); }

  bool operator==(const FiniteTopology& o) const {
    return ground_ == o.ground_ && opens_ == o.opens_;
  }
  bool operator!=(const FiniteTopology& o) const { return !(*this == o); }

 private:
  struct check_tag {};
  FiniteTopology(check_tag, std::size_t ground_size, std::vector<Mask> opens)
      : ground_(ground_size), opens_(std::move(opens)) {
    if (ground_ > kMaxTopologyPoints)
      throw BoundError("topology limited to " +
                       std::to_string(kMaxTopologyPoints) + " points");
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  }

  static Mask full_mask(std::size_t n) {
    return n == 0 ? 0 : (Mask{1} << n) - 1;
  }

  std::size_t ground_;
  std::vector<Mask> opens_;
};

/// Two distinct points always admit disjoint open neighborhoods exactly
/// when their minimal neighborhoods are disjoint.
inline bool is_hausdorff(const FiniteTopology& t) {
  const std::size_t n = t.ground_size();
  std::vector<Mask> minimal(n);
  for (std::size_t x = 0; x < n; ++x) minimal[x] = t.minimal_open(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (minimal[x] & minimal[y]) return false;
  return true;
}

/// Every singleton has an open complement.
inline bool points_closed(const FiniteTopology& t) {
  for (std::size_t x = 0; x < t.ground_size(); ++x)
    if (!t.is_closed(Mask{1} << x)) return false;
  return true;
}

/// Set equality of the open families.
inline bool topologies_equal(const FiniteTopology& a,
                             const FiniteTopology& b) {
  if (a.ground_size() != b.ground_size())
    throw Error("topologies live on different ground sets");
  return a.opens() == b.opens();
}

/// Every open of `coarser` is open in `finer`.
inline bool refines(const FiniteTopology& finer,
                    const FiniteTopology& coarser) {
  if (finer.ground_size() != coarser.ground_size())
    throw Error("topologies live on different ground sets");
  for (Mask o : coarser.opens())
    if (!finer.is_open(o)) return false;
  return true;
}

/// The specialization order of a T0 space: p <= q when every open
/// containing q contains p.  Errors if the space is not T0.
inline SpectralPoset specialization_order(const FiniteTopology& t) {
  const std::size_t n = t.ground_size();
  std::vector<Mask> minimal(n);
  for (std::size_t x = 0; x < n; ++x) minimal[x] = t.minimal_open(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (minimal[x] == minimal[y])
        throw Error("space is not T0: points " + std::to_string(x) + " and " +
                    std::to_string(y) + " are topologically identical");
  std::vector<bool> leq(n * n, false);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) leq[p * n + q] = minimal[q] >> p & 1;
  return SpectralPoset(n, std::move(leq));
}

}  // namespace finspec
