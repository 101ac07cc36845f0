#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of a finite ring as membership masks, with closure,
 *        primality and related predicates.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "finspec/ring.hpp"

namespace finspec {

class Ideal {
 public:
  /// Wraps a membership mask after checking the ideal axioms:
  /// contains zero, closed under +, closed under multiplication by
  /// every ring element.
  Ideal(FiniteRing ring, std::vector<bool> members)
      : ring_(std::move(ring)), members_(std::move(members)) {
    if (members_.size() != ring_.size())
      throw Error("ideal mask has wrong size for ring " + ring_.label());
    if (auto why = violation(ring_, members_); why)
      throw Error("not an ideal of " + ring_.label() + ": " + *why);
  }

  const FiniteRing& ring() const { return ring_; }
  bool contains(Elem a) const { return members_[a]; }
  const std::vector<bool>& mask() const { return members_; }

  std::size_t count() const {
    return static_cast<std::size_t>(
        std::count(members_.begin(), members_.end(), true));
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t a = 0; a < members_.size(); ++a)
      if (members_[a]) out.push_back(static_cast<Elem>(a));
    return out;
  }

  bool is_proper() const { return !members_[ring_.one()]; }

  /// Same ring tables and same member set.
  bool operator==(const Ideal& o) const {
    return ring_ == o.ring_ && members_ == o.members_;
  }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  /// Reason the mask fails the ideal axioms, if it does.
  static std::optional<std::string> violation(const FiniteRing& r,
                                              const std::vector<bool>& m) {
    if (m.size() != r.size()) return "mask size mismatch";
    if (!m[r.zero()]) return "does not contain zero";
    for (Elem a = 0; a < r.size(); ++a) {
      if (!m[a]) continue;
      for (Elem b = 0; b < r.size(); ++b) {
        if (m[b] && !m[r.add(a, b)]) return "not closed under addition";
        if (!m[r.mul(a, b)]) return "not closed under ring multiples";
      }
    }
    return std::nullopt;
  }

  static bool is_ideal_mask(const FiniteRing& r, const std::vector<bool>& m) {
    return !violation(r, m).has_value();
  }

 private:
  FiniteRing ring_;
  std::vector<bool> members_;
};

/// Smallest ideal containing the generators: worklist closure under
/// addition of members and multiplication by every ring element.
inline Ideal ideal_generated(const FiniteRing& r,
                             const std::vector<Elem>& gens) {
  std::vector<bool> in(r.size(), false);
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(r.zero());
  for (Elem g : gens) {
    if (g >= r.size()) throw Error("generator out of range");
    push(g);
  }
  std::vector<Elem> members{};
  while (!queue.empty()) {
    Elem a = queue.back();
    queue.pop_back();
    members.push_back(a);
    for (Elem m : members) push(r.add(a, m));
    for (Elem c = 0; c < r.size(); ++c) push(r.mul(c, a));
  }
  return Ideal(r, std::move(in));
}

inline Ideal zero_ideal(const FiniteRing& r) { return ideal_generated(r, {}); }

inline Ideal full_ideal(const FiniteRing& r) {
  return ideal_generated(r, {r.one()});
}

/// Proper, and ab in I implies a in I or b in I.
inline bool is_prime_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const FiniteRing& r = i.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (i.contains(b)) continue;
      if (i.contains(r.mul(a, b))) return false;
    }
  }
  return true;
}

/// Product ideal I*J: generated by pairwise products of members.
inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
  const FiniteRing& r = i.ring();
  std::vector<Elem> gens;
  for (Elem a : i.elements())
    for (Elem b : j.elements()) gens.push_back(r.mul(a, b));
  return ideal_generated(r, gens);
}

/// Greedy small generating set, used for human-readable labels.
inline std::vector<Elem> ideal_generators_greedy(const Ideal& i) {
  const FiniteRing& r = i.ring();
  std::vector<Elem> gens;
  Ideal cur = zero_ideal(r);
  for (Elem a : i.elements()) {
    if (cur.contains(a)) continue;
    gens.push_back(a);
    cur = ideal_generated(r, gens);
    if (cur == i) break;
  }
  return gens;
}

/// All ideals of a small ring by full subset scan; 2^size masks, so the
/// ring size is capped.  Test oracle for the idempotent-ideal criterion
/// and the spectrum.
inline std::vector<Ideal> enumerate_ideals_bruteforce(const FiniteRing& r) {
  if (r.size() > kOracleSubsetBound)
    throw BoundError("subset-scan ideal enumeration capped at size " +
                     std::to_string(kOracleSubsetBound));
  const std::size_t n = r.size();
  std::vector<Ideal> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m >> r.zero() & 1)) continue;
    std::vector<bool> mask(n, false);
    for (std::size_t a = 0; a < n; ++a) mask[a] = (m >> a) & 1;
    if (Ideal::is_ideal_mask(r, mask)) out.emplace_back(r, mask);
  }
  return out;
}

}  // namespace finspec
