#pragma once

/**
 * @file pointwise.hpp
 * @brief The pointwise localization functor: adjoin pointwise inverses
 *        to a finite ring, with the universal-property and stalk
 *        verifiers.
 *
 * The construction is a closed form special to finite rings.  A finite
 * commutative ring splits as a product of local rings along its
 * primitive idempotents, and in a finite local ring every element is a
 * unit or nilpotent.  Adjoining a pointwise inverse for s therefore
 * leaves unit factors untouched (s is already invertible there) and
 * kills s in the remaining factors: the defining relations s^2*x = s
 * and s*x^2 = x force s = 0 whenever s is nilpotent (s = s^k * x^(k-1)
 * for every k) and then x = 0.  Reassembling the factors gives the
 * universal ring; the universal property is verified per instance by
 * universal_property_check rather than assumed.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finspec/construct.hpp"
#include "finspec/hom.hpp"
#include "finspec/hom_search.hpp"
#include "finspec/quotients.hpp"
#include "finspec/regular.hpp"
#include "finspec/ring.hpp"
#include "finspec/spectrum.hpp"

namespace finspec {

struct PointwiseLocalization {
  FiniteRing source;
  std::vector<Elem> inverted;  // S, sorted
  FiniteRing result;
  RingHom eta;
  std::vector<std::pair<Elem, Elem>> inverse_of;  // s -> eta(s)^(-1)

  std::optional<Elem> inverse_image_of(Elem s) const {
    for (auto [a, b] : inverse_of)
      if (a == s) return b;
    return std::nullopt;
  }
};

namespace detail {

inline PointwiseLocalization identity_localization(const FiniteRing& r,
                                                   std::vector<Elem> s) {
  std::vector<std::pair<Elem, Elem>> inv;
  for (Elem x : s) {
    std::optional<Elem> b = pointwise_inverse(r, x);
    if (!b)
      throw InvariantViolation("identity localization without inverse in " +
                               r.label());
    inv.emplace_back(x, *b);
  }
  return PointwiseLocalization{r, std::move(s), r, RingHom::identity(r),
                               std::move(inv)};
}

}  // namespace detail

/// The universal ring map under which s acquires a pointwise inverse.
inline PointwiseLocalization adjoin_pointwise_inverse(const FiniteRing& r,
                                                      Elem s) {
  if (pointwise_inverse(r, s)) return detail::identity_localization(r, {s});
  // r is nontrivial here: in the trivial ring 0 is its own pointwise
  // inverse, so the fast path above applies.
  std::vector<FiniteRing> factors;
  std::vector<RingHom> maps;  // r -> factor
  for (Elem e : primitive_idempotents(r)) {
    CornerRing c = corner_ring(r, e);
    if (spec(c.ring).primes.size() != 1)
      throw InvariantViolation("corner factor of " + r.label() +
                               " is not local");
    Elem si = c.proj(s);
    if (is_unit(c.ring, si)) {
      factors.push_back(c.ring);
      maps.push_back(c.proj);
    } else {
      QuotientRing q = quotient_ring(c.ring, ideal_generated(c.ring, {si}));
      factors.push_back(q.ring);
      maps.push_back(compose(q.projection, c.proj));
    }
  }
  MultiProduct p = ring_product_many(factors);
  std::vector<Elem> eta_map(r.size());
  std::vector<Elem> comps(factors.size());
  for (Elem a = 0; a < r.size(); ++a) {
    for (std::size_t i = 0; i < factors.size(); ++i) comps[i] = maps[i](a);
    eta_map[a] = p.encode(comps);
  }
  RingHom eta(r, p.ring, std::move(eta_map));
  std::optional<Elem> b = pointwise_inverse(p.ring, eta(s));
  if (!b)
    throw InvariantViolation("adjoined element has no pointwise inverse in " +
                             p.ring.label());
  return PointwiseLocalization{r, {s}, p.ring, std::move(eta), {{s, *b}}};
}

/// S^(-1)R: iterate single adjunctions over S, pushing the remaining
/// elements forward through each step.
inline PointwiseLocalization pointwise_localization(const FiniteRing& r,
                                                    std::vector<Elem> s_set) {
  std::sort(s_set.begin(), s_set.end());
  s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
  if (!s_set.empty() && s_set.back() >= r.size())
    throw Error("inverted element out of range for " + r.label());
  FiniteRing cur = r;
  RingHom eta = RingHom::identity(r);
  for (Elem s : s_set) {
    PointwiseLocalization step = adjoin_pointwise_inverse(cur, eta(s));
    eta = compose(step.eta, eta);
    cur = step.result;
  }
  std::vector<std::pair<Elem, Elem>> inv;
  for (Elem s : s_set) {
    std::optional<Elem> b = pointwise_inverse(cur, eta(s));
    if (!b)
      throw InvariantViolation("inverted element lost its inverse in " +
                               cur.label());
    inv.emplace_back(s, *b);
  }
  return PointwiseLocalization{r, std::move(s_set), std::move(cur),
                               std::move(eta), std::move(inv)};
}

/// R^(-1)R, which must come out absolutely flat with a surjective eta.
inline PointwiseLocalization full_pointwise_ring(const FiniteRing& r) {
  std::vector<Elem> all(r.size());
  for (std::size_t a = 0; a < r.size(); ++a) all[a] = static_cast<Elem>(a);
  PointwiseLocalization l = pointwise_localization(r, std::move(all));
  if (!is_absolutely_flat(l.result))
    throw InvariantViolation("full pointwise ring of " + r.label() +
                             " is not absolutely flat");
  if (!l.eta.is_surjective())
    throw InvariantViolation("pointwise eta of " + r.label() +
                             " is not surjective");
  return l;
}

/// Outcome of checking the universal property of a localization against
/// one comparison map phi.
struct UniversalPropertyResult {
  enum class Status { confirmed, inapplicable, violated };
  Status status;
  std::size_t factorization_count = 0;
  std::optional<RingHom> factorization;
  std::string detail;

  bool ok() const { return status != Status::violated; }
  bool confirmed() const { return status == Status::confirmed; }
};

/// Asserts that exactly one psi with psi o eta = phi exists, by full
/// hom enumeration; inapplicable when some phi(s) has no pointwise
/// inverse in the target.
inline UniversalPropertyResult universal_property_check(
    const PointwiseLocalization& l, const RingHom& phi,
    std::uint64_t node_budget = kDefaultHomSearchBudget) {
  UniversalPropertyResult out{UniversalPropertyResult::Status::violated, 0,
                              std::nullopt, ""};
  if (!(phi.source() == l.source)) {
    out.detail = "comparison map does not start at the localized ring";
    return out;
  }
  for (Elem s : l.inverted)
    if (!pointwise_inverse(phi.target(), phi(s))) {
      out.status = UniversalPropertyResult::Status::inapplicable;
      out.detail = "phi(" + std::to_string(s) + ") has no pointwise inverse";
      return out;
    }
  std::vector<RingHom> matches;
  search_homs(
      l.result, phi.target(),
      [&](const RingHom& psi) {
        if (compose(psi, l.eta) == phi) matches.push_back(psi);
        return false;
      },
      node_budget);
  out.factorization_count = matches.size();
  if (matches.size() == 1) {
    out.status = UniversalPropertyResult::Status::confirmed;
    out.factorization = matches.front();
  } else {
    out.detail = "expected exactly one factorization, found " +
                 std::to_string(matches.size());
  }
  return out;
}

/// Stalk checks for a full pointwise localization: each localization of
/// the result at a prime is a field isomorphic to the residue field of
/// the pulled-back prime of the source, and the composed map image is
/// that whole field.
struct StalkReport {
  struct Entry {
    std::size_t prime_index;
    std::size_t stalk_size;
    std::size_t residue_size;
    bool stalk_is_field;
    bool pullback_is_prime;
    bool isomorphic;
    bool image_is_whole_stalk;
    bool ok() const {
      return stalk_is_field && pullback_is_prime && isomorphic &&
             image_is_whole_stalk;
    }
  };
  std::vector<Entry> entries;
  bool ok = true;
};

inline StalkReport verify_stalks(const PointwiseLocalization& l) {
  StalkReport report;
  Spectrum sp = spec(l.result);
  for (const PrimeIdeal& q : sp.primes) {
    StalkReport::Entry e{};
    e.prime_index = q.index;
    Localization loc = localize(l.result, complement_of(q.ideal));
    e.stalk_size = loc.ring.size();
    e.stalk_is_field = is_field(loc.ring);
    std::vector<bool> pb = l.eta.pullback_mask(q.ideal);
    e.pullback_is_prime =
        Ideal::is_ideal_mask(l.source, pb) && is_prime_ideal(Ideal(l.source, pb));
    if (e.pullback_is_prime) {
      QuotientRing residue = quotient_ring(l.source, Ideal(l.source, pb));
      e.residue_size = residue.ring.size();
      e.isomorphic =
          is_field(residue.ring) && is_isomorphic(loc.ring, residue.ring);
    }
    RingHom composed = compose(loc.hom, l.eta);
    e.image_is_whole_stalk = composed.is_surjective();
    report.entries.push_back(e);
    report.ok = report.ok && e.ok();
  }
  return report;
}

}  // namespace finspec
