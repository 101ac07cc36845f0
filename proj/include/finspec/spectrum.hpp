#pragma once

/**
 * @file spectrum.hpp
 * @brief The prime spectrum of a finite ring, residue fields and the
 *        basic subsets D(a), V(I).
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "finspec/construct.hpp"
#include "finspec/ideal.hpp"
#include "finspec/quotients.hpp"
#include "finspec/regular.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// Subset of the primes of a spectrum, as a bitmask over prime indices.
using PointSet = std::uint64_t;

struct PrimeIdeal {
  Ideal ideal;
  std::size_t index;
};

struct Spectrum {
  FiniteRing ring;
  std::vector<PrimeIdeal> primes;
};

namespace detail {

/// Stable prime order: smallest non-member element first, then the
/// membership mask lexicographically.
inline bool prime_mask_less(const std::vector<bool>& a,
                            const std::vector<bool>& b) {
  auto first_out = [](const std::vector<bool>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!m[i]) return i;
    return m.size();
  };
  std::size_t fa = first_out(a), fb = first_out(b);
  if (fa != fb) return fa < fb;
  return a < b;
}

inline Spectrum sorted_spectrum(const FiniteRing& r,
                                std::vector<Ideal> ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& x, const Ideal& y) {
    return prime_mask_less(x.mask(), y.mask());
  });
  for (std::size_t i = 1; i < ideals.size(); ++i)
    if (ideals[i] == ideals[i - 1])
      throw InvariantViolation("duplicate prime ideal in spectrum of " +
                               r.label());
  Spectrum s{r, {}};
  for (std::size_t i = 0; i < ideals.size(); ++i)
    s.primes.push_back(PrimeIdeal{std::move(ideals[i]), i});
  return s;
}

}  // namespace detail

/// All prime ideals of r.  Primes correspond to the primitive
/// idempotents of R_red: for such an e, p = {a : pi(a)*e = 0}.  Every
/// candidate is verified against the primality predicate.
inline Spectrum spec(const FiniteRing& r) {
  QuotientRing red = reduced_ring(r);
  std::vector<Ideal> ideals;
  for (Elem e : primitive_idempotents(red.ring)) {
    std::vector<bool> mask(r.size(), false);
    for (Elem a = 0; a < r.size(); ++a)
      mask[a] = red.ring.mul(red.projection(a), e) == red.ring.zero();
    Ideal cand(r, std::move(mask));
    if (!is_prime_ideal(cand))
      throw InvariantViolation("spectrum candidate is not prime in " +
                               r.label());
    ideals.push_back(std::move(cand));
  }
  return detail::sorted_spectrum(r, std::move(ideals));
}

/// Definition-level spectrum used only to validate spec in tests:
/// subset scan for small rings, prime divisors for Z/n.
inline Spectrum spec_bruteforce_oracle(const FiniteRing& r) {
  if (r.size() <= kOracleSubsetBound) {
    std::vector<Ideal> primes;
    for (Ideal& i : enumerate_ideals_bruteforce(r))
      if (is_prime_ideal(i)) primes.push_back(std::move(i));
    return detail::sorted_spectrum(r, std::move(primes));
  }
  if (r == ring_zmod(r.size(), r.size())) {
    const std::size_t n = r.size();
    std::vector<Ideal> primes;
    for (std::size_t p = 2; p <= n; ++p) {
      bool is_prime_number = p >= 2;
      for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) {
          is_prime_number = false;
          break;
        }
      if (!is_prime_number || n % p != 0) continue;
      std::vector<bool> mask(n, false);
      for (std::size_t a = 0; a < n; a += p) mask[a] = true;
      primes.emplace_back(r, std::move(mask));
    }
    return detail::sorted_spectrum(r, std::move(primes));
  }
  throw BoundError("brute-force spectrum oracle needs size <= " +
                   std::to_string(kOracleSubsetBound) + " or Z/n input");
}

/// kappa(p) = R/p with the canonical surjection; p is maximal in a
/// finite ring, so the quotient must be a field.
inline QuotientRing residue_field(const FiniteRing& r, const PrimeIdeal& p) {
  QuotientRing q = quotient_ring(r, p.ideal);
  if (!is_field(q.ring))
    throw InvariantViolation("residue quotient of " + r.label() +
                             " is not a field");
  return q;
}

/// D(a) = {p : a not in p}.
inline PointSet basic_open(const Spectrum& s, Elem a) {
  PointSet out = 0;
  for (const PrimeIdeal& p : s.primes)
    if (!p.ideal.contains(a)) out |= PointSet{1} << p.index;
  return out;
}

/// V(I) = {p : I subset of p}.
inline PointSet vanishing_set(const Spectrum& s, const Ideal& i) {
  PointSet out = 0;
  for (const PrimeIdeal& p : s.primes) {
    bool inside = true;
    for (Elem a = 0; a < i.ring().size() && inside; ++a)
      if (i.contains(a) && !p.ideal.contains(a)) inside = false;
    if (inside) out |= PointSet{1} << p.index;
  }
  return out;
}

/// V(a) for a principal ideal, the complement of D(a).
inline PointSet vanishing_set(const Spectrum& s, Elem a) {
  PointSet all = s.primes.empty()
                     ? 0
                     : (PointSet{1} << s.primes.size()) - 1;
  return all & ~basic_open(s, a);
}

}  // namespace finspec
