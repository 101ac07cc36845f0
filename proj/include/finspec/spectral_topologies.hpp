#pragma once

/**
 * @file spectral_topologies.hpp
 * @brief The Zariski, flat and patch topologies, on spectra of finite
 *        rings and on abstract spectral posets.
 *
 * Both backends must agree through the specialization order: the ring
 * versions are generated from D(a) / V(a), the poset versions are the
 * Alexandrov topologies of the order and its dual, and patch is the
 * join of the two in either case.
 */

#include <vector>

#include "finspec/poset.hpp"
#include "finspec/spectrum.hpp"
#include "finspec/topology.hpp"

namespace finspec {

/// Containment order of the primes (p <= q iff p is a subset of q).
inline SpectralPoset containment_poset(const Spectrum& s) {
  const std::size_t n = s.primes.size();
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool subset = true;
      for (Elem a = 0; a < s.ring.size() && subset; ++a)
        if (s.primes[i].ideal.contains(a) && !s.primes[j].ideal.contains(a))
          subset = false;
      leq[i * n + j] = subset;
    }
  return SpectralPoset(n, std::move(leq));
}

/// Opens generated by the D(a).
inline FiniteTopology zariski_topology(const Spectrum& s) {
  std::vector<Mask> subbasis;
  for (Elem a = 0; a < s.ring.size(); ++a)
    subbasis.push_back(basic_open(s, a));
  return FiniteTopology::from_subbasis(s.primes.size(), subbasis);
}

/// Opens generated by the V(I).  The V(a) suffice as a subbasis: every
/// ideal of a finite ring is finitely generated and V(<a1,...,ak>) is
/// the intersection of the V(ai).
inline FiniteTopology flat_topology(const Spectrum& s) {
  std::vector<Mask> subbasis;
  for (Elem a = 0; a < s.ring.size(); ++a)
    subbasis.push_back(vanishing_set(s, a));
  return FiniteTopology::from_subbasis(s.primes.size(), subbasis);
}

/// Join of the Zariski and flat topologies (subbasis D(a) and V(a)).
inline FiniteTopology patch_topology(const Spectrum& s) {
  std::vector<Mask> subbasis;
  for (Elem a = 0; a < s.ring.size(); ++a) {
    subbasis.push_back(basic_open(s, a));
    subbasis.push_back(vanishing_set(s, a));
  }
  return FiniteTopology::from_subbasis(s.primes.size(), subbasis);
}

namespace detail {

/// Alexandrov topology whose closed sets are the up-closed sets, i.e.
/// closure{p} = {q : p <= q}; the opens are the down-closed sets.
inline FiniteTopology down_set_topology(const SpectralPoset& p) {
  std::vector<Mask> subbasis;
  for (std::size_t q = 0; q < p.size(); ++q) {
    Mask down = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.leq(x, q)) down |= Mask{1} << x;
    subbasis.push_back(down);
  }
  return FiniteTopology::from_subbasis(p.size(), subbasis);
}

}  // namespace detail

inline FiniteTopology zariski_topology(const SpectralPoset& p) {
  return detail::down_set_topology(p);
}

/// Hochster dual of the Zariski side: closure{p} = {q : q <= p}.
inline FiniteTopology flat_topology(const SpectralPoset& p) {
  return detail::down_set_topology(p.dual());
}

inline FiniteTopology patch_topology(const SpectralPoset& p) {
  FiniteTopology zar = zariski_topology(p);
  FiniteTopology flat = flat_topology(p);
  std::vector<Mask> subbasis = zar.opens();
  subbasis.insert(subbasis.end(), flat.opens().begin(), flat.opens().end());
  return FiniteTopology::from_subbasis(p.size(), subbasis);
}

}  // namespace finspec
