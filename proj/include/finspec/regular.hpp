#pragma once

/**
 * @file regular.hpp
 * @brief Idempotents, pointwise inverses, the absolute-flatness test,
 *        idempotent ideal generators and localization at a
 *        multiplicative subset.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finspec/construct.hpp"
#include "finspec/hom.hpp"
#include "finspec/ideal.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// All e with e*e = e, ascending.
inline std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.size(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

/// Atoms of the idempotent order e <= f iff ef = e, excluding zero.
/// In the trivial ring there are none.
inline std::vector<Elem> primitive_idempotents(const FiniteRing& r) {
  std::vector<Elem> idem = idempotents(r);
  std::vector<Elem> nonzero;
  for (Elem e : idem)
    if (e != r.zero()) nonzero.push_back(e);
  std::vector<Elem> atoms;
  for (Elem e : nonzero) {
    bool atom = true;
    for (Elem f : nonzero)
      if (f != e && r.mul(f, e) == f) {
        atom = false;
        break;
      }
    if (atom) atoms.push_back(e);
  }
  return atoms;
}

/// The unique b with a = a^2 b and b = b^2 a, when a lies in R a^2.
/// Found by scanning for a witness c with a = c a^2 and taking b = c^2 a.
inline std::optional<Elem> pointwise_inverse(const FiniteRing& r, Elem a) {
  Elem a2 = r.mul(a, a);
  for (Elem c = 0; c < r.size(); ++c)
    if (r.mul(c, a2) == a) return r.mul(r.mul(c, c), a);
  return std::nullopt;
}

/// Every element admits a pointwise-invertibility witness.
inline bool is_absolutely_flat(const FiniteRing& r) {
  for (Elem a = 0; a < r.size(); ++a)
    if (!pointwise_inverse(r, a)) return false;
  return true;
}

/// Idempotent e with <e> = <gens>, assuming each generator a admits c
/// with a = a^2 c.  Each e_i = a_i c_i is idempotent and the fold
/// e <- e' + e_i - e' e_i preserves the generated ideal.
inline Elem idempotent_generator(const FiniteRing& r,
                                 const std::vector<Elem>& gens) {
  Elem e = r.zero();
  bool first = true;
  for (Elem a : gens) {
    if (a >= r.size()) throw Error("generator out of range");
    Elem a2 = r.mul(a, a);
    std::optional<Elem> c;
    for (Elem x = 0; x < r.size(); ++x)
      if (r.mul(x, a2) == a) {
        c = x;
        break;
      }
    if (!c)
      throw Error("generator " + std::to_string(a) + " of " + r.label() +
                  " has no pointwise-invertibility witness");
    Elem ei = r.mul(a, *c);
    e = first ? ei : r.sub(r.add(e, ei), r.mul(e, ei));
    first = false;
  }
  return e;
}

/// Checks that s contains 1 and is closed under products.
inline void require_multiplicative(const FiniteRing& r,
                                   const std::vector<Elem>& s) {
  std::vector<bool> in(r.size(), false);
  for (Elem x : s) {
    if (x >= r.size()) throw Error("multiplicative set element out of range");
    in[x] = true;
  }
  if (!in[r.one()])
    throw Error("multiplicative set must contain 1 in " + r.label());
  for (Elem x : s)
    for (Elem y : s)
      if (!in[r.mul(x, y)])
        throw Error("set not closed under products in " + r.label());
}

struct Localization {
  FiniteRing ring;
  RingHom hom;
};

/// S^{-1}R for a finite ring: with t the product of all of S, some
/// power e = t^k is idempotent and S^{-1}R is the corner ring e*R with
/// the map a -> e*a.  Every element of S becomes a unit there; the
/// universal property is exercised by the test suite rather than
/// assumed.
inline Localization localize(const FiniteRing& r, const std::vector<Elem>& s) {
  require_multiplicative(r, s);
  Elem t = r.one();
  for (Elem x : s) t = r.mul(t, x);
  Elem p = t;
  Elem e = r.one();
  bool found = false;
  for (std::size_t k = 0; k < 2 * r.size() + 2; ++k) {
    if (r.mul(p, p) == p) {
      e = p;
      found = true;
      break;
    }
    p = r.mul(p, t);
  }
  if (!found)
    throw InvariantViolation("no idempotent power of " + std::to_string(t) +
                             " in " + r.label());
  CornerRing c = corner_ring(r, e);
  return Localization{c.ring, c.proj};
}

/// Complement of a prime ideal, the standard multiplicative set.
inline std::vector<Elem> complement_of(const Ideal& p) {
  std::vector<Elem> out;
  for (Elem a = 0; a < p.ring().size(); ++a)
    if (!p.contains(a)) out.push_back(a);
  return out;
}

/// Multiplicative closure {1, a, a^2, ...}.
inline std::vector<Elem> powers_of(const FiniteRing& r, Elem a) {
  std::vector<bool> seen(r.size(), false);
  std::vector<Elem> out;
  Elem p = r.one();
  while (!seen[p]) {
    seen[p] = true;
    out.push_back(p);
    p = r.mul(p, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace finspec
