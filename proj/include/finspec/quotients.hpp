#pragma once

/**
 * @file quotients.hpp
 * @brief Quotient rings, the nilradical and the reduction R -> R_red.
 */

#include <utility>
#include <vector>

#include "finspec/hom.hpp"
#include "finspec/ideal.hpp"
#include "finspec/ring.hpp"

namespace finspec {

struct QuotientRing {
  FiniteRing ring;
  RingHom projection;
};

/// Cosets of an ideal, represented by their smallest member.
inline QuotientRing quotient_ring(const FiniteRing& r, const Ideal& i) {
  if (!(i.ring() == r)) throw Error("ideal belongs to a different ring");
  const std::size_t n = r.size();
  std::vector<Elem> rep(n);
  for (Elem a = 0; a < n; ++a) {
    Elem best = a;
    for (Elem m : i.elements()) best = std::min(best, r.add(a, m));
    rep[a] = best;
  }
  std::vector<Elem> classes;
  std::vector<int> index_of(n, -1);
  for (Elem a = 0; a < n; ++a)
    if (rep[a] == a) {
      index_of[a] = static_cast<int>(classes.size());
      classes.push_back(a);
    }
  const std::size_t m = classes.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] =
          static_cast<Elem>(index_of[rep[r.add(classes[x], classes[y])]]);
      mul[x * m + y] =
          static_cast<Elem>(index_of[rep[r.mul(classes[x], classes[y])]]);
    }
  Elem zero = static_cast<Elem>(index_of[rep[r.zero()]]);
  Elem one = static_cast<Elem>(index_of[rep[r.one()]]);
  std::string label = r.label() + "/(" +
                      detail::join_elems(ideal_generators_greedy(i)) + ")";
  FiniteRing q(m, std::move(add), std::move(mul), zero, one, std::move(label));
  std::vector<Elem> proj(n);
  for (Elem a = 0; a < n; ++a) proj[a] = static_cast<Elem>(index_of[rep[a]]);
  RingHom pi(r, q, std::move(proj));
  return QuotientRing{std::move(q), std::move(pi)};
}

/// Elements with a vanishing power; each power orbit is iterated until
/// it repeats or reaches zero.
inline Ideal nilradical(const FiniteRing& r) {
  std::vector<bool> nil(r.size(), false);
  std::vector<bool> seen(r.size());
  for (Elem a = 0; a < r.size(); ++a) {
    std::fill(seen.begin(), seen.end(), false);
    Elem p = a;
    while (!seen[p]) {
      seen[p] = true;
      if (p == r.zero()) {
        nil[a] = true;
        break;
      }
      p = r.mul(p, a);
    }
  }
  return Ideal(r, std::move(nil));
}

/// R_red = R modulo its nilradical, with the canonical surjection.
inline QuotientRing reduced_ring(const FiniteRing& r) {
  return quotient_ring(r, nilradical(r));
}

}  // namespace finspec
