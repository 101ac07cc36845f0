#pragma once

/**
 * @file theorems.hpp
 * @brief Verification layer: the nine-way separability report, the
 *        flat-vs-Zariski comparison, the absolute-flatness stability
 *        suite and the corpus runner.
 *
 * Every condition is computed by its own independent code path; no
 * condition's value is derived from another.  A report that comes out
 * inconsistent is a falsified claim and surfaces as a violation, the
 * loudest failure the library has.
 */

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finspec/expr.hpp"
#include "finspec/pointwise.hpp"
#include "finspec/poset.hpp"
#include "finspec/spectral_topologies.hpp"
#include "finspec/spectrum.hpp"
#include "finspec/topology.hpp"

namespace finspec {

enum class Tri { True, False, NA };

inline const char* to_cstring(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::NA:
      return "n/a";
  }
  return "?";
}

/// Condition tags in report order.  Condition (ii) quantifies over all
/// flat epimorphisms and is not finitely checkable; (iii) stands in for
/// it, so (ii) is deliberately absent from the schema.
inline constexpr std::array<const char*, 8> kSeparabilityConditions = {
    "i", "iii", "iv", "v", "vi", "vii", "viii", "ix"};

struct SeparabilityReport {
  std::string subject;
  std::string backend;  // "ring" or "poset"
  std::vector<std::pair<std::string, Tri>> conditions;
  bool consistent = false;

  Tri condition(const std::string& key) const {
    for (const auto& [k, v] : conditions)
      if (k == key) return v;
    throw Error("unknown condition tag " + key);
  }

  bool operator==(const SeparabilityReport& o) const {
    return subject == o.subject && backend == o.backend &&
           conditions == o.conditions && consistent == o.consistent;
  }
};

namespace detail {

inline bool all_applicable_equal(
    const std::vector<std::pair<std::string, Tri>>& conds) {
  std::optional<Tri> seen;
  for (const auto& [k, v] : conds) {
    if (v == Tri::NA) continue;
    if (seen && *seen != v) return false;
    seen = v;
  }
  return true;
}

}  // namespace detail

/// Evaluates the eight checkable separability conditions on a finite
/// ring, each by an independent route.
inline SeparabilityReport separability_report(const FiniteRing& r,
                                      std::string subject_label = "") {
  SeparabilityReport rep;
  rep.subject = subject_label.empty() ? r.label() : std::move(subject_label);
  rep.backend = "ring";

  Spectrum sp = spec(r);
  FiniteTopology zar = zariski_topology(sp);
  FiniteTopology flat = flat_topology(sp);
  FiniteTopology patch = patch_topology(sp);

  bool cond_i = is_absolutely_flat(reduced_ring(r).ring);

  bool cond_iii = true;
  for (const PrimeIdeal& p : sp.primes)
    if (!localize(r, complement_of(p.ideal)).hom.is_surjective())
      cond_iii = false;

  bool cond_iv = true;
  for (const PrimeIdeal& p : sp.primes)
    if (!is_field(quotient_ring(r, p.ideal).ring)) cond_iv = false;

  bool cond_vii = true;
  for (const PrimeIdeal& p : sp.primes)
    for (const PrimeIdeal& q : sp.primes) {
      if (p.index == q.index) continue;
      bool q_below_p = true;
      for (Elem a = 0; a < r.size() && q_below_p; ++a)
        if (q.ideal.contains(a) && !p.ideal.contains(a)) q_below_p = false;
      if (q_below_p) cond_vii = false;
    }

  rep.conditions = {{"i", cond_i ? Tri::True : Tri::False},
                    {"iii", cond_iii ? Tri::True : Tri::False},
                    {"iv", cond_iv ? Tri::True : Tri::False},
                    {"v", topologies_equal(patch, zar) ? Tri::True : Tri::False},
                    {"vi", is_hausdorff(zar) ? Tri::True : Tri::False},
                    {"vii", cond_vii ? Tri::True : Tri::False},
                    {"viii", is_hausdorff(flat) ? Tri::True : Tri::False},
                    {"ix", topologies_equal(patch, flat) ? Tri::True : Tri::False}};
  rep.consistent = detail::all_applicable_equal(rep.conditions);
  return rep;
}

/// Poset backend: (iv)/(vii) become "every point maximal/minimal" in the
/// specialization order; (i)/(iii) have no order-theoretic meaning and
/// are reported as not applicable.
inline SeparabilityReport separability_report(const SpectralPoset& p,
                                      std::string subject_label = "") {
  SeparabilityReport rep;
  rep.subject = subject_label.empty() ? "poset" : std::move(subject_label);
  rep.backend = "poset";

  FiniteTopology zar = zariski_topology(p);
  FiniteTopology flat = flat_topology(p);
  FiniteTopology patch = patch_topology(p);

  bool cond_iv = true, cond_vii = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.is_maximal(x)) cond_iv = false;
    if (!p.is_minimal(x)) cond_vii = false;
  }

  rep.conditions = {{"i", Tri::NA},
                    {"iii", Tri::NA},
                    {"iv", cond_iv ? Tri::True : Tri::False},
                    {"v", topologies_equal(patch, zar) ? Tri::True : Tri::False},
                    {"vi", is_hausdorff(zar) ? Tri::True : Tri::False},
                    {"vii", cond_vii ? Tri::True : Tri::False},
                    {"viii", is_hausdorff(flat) ? Tri::True : Tri::False},
                    {"ix", topologies_equal(patch, flat) ? Tri::True : Tri::False}};
  rep.consistent = detail::all_applicable_equal(rep.conditions);
  return rep;
}

/// Flat = Zariski versus "every prime maximal", computed independently.
struct FlatZariskiComparison {
  bool topologies_same;
  bool all_primes_maximal;
  bool consistent() const { return topologies_same == all_primes_maximal; }
};

inline FlatZariskiComparison compare_flat_zariski(const FiniteRing& r) {
  Spectrum sp = spec(r);
  bool same = topologies_equal(zariski_topology(sp), flat_topology(sp));
  bool maximal = true;
  for (const PrimeIdeal& p : sp.primes)
    if (!is_field(quotient_ring(r, p.ideal).ring)) maximal = false;
  return FlatZariskiComparison{same, maximal};
}

inline FlatZariskiComparison compare_flat_zariski(const SpectralPoset& p) {
  bool same = topologies_equal(zariski_topology(p), flat_topology(p));
  bool maximal = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!p.is_maximal(x)) maximal = false;
  return FlatZariskiComparison{same, maximal};
}

/// Absolute-flatness stability suite: quotients, localizations, the
/// local criterion, product factors and the three field criteria.
struct StabilityReport {
  struct Claim {
    std::string name;
    Tri status;
    std::string witness;
  };
  std::string subject;
  std::vector<Claim> claims;
  bool all_pass = true;

  void add(std::string name, Tri status, std::string witness = "") {
    if (status == Tri::False) all_pass = false;
    claims.push_back(Claim{std::move(name), status, std::move(witness)});
  }
};

inline StabilityReport stability_suite(const FiniteRing& r) {
  StabilityReport rep;
  rep.subject = r.label();
  const bool af = is_absolutely_flat(r);
  Spectrum sp = spec(r);

  if (af) {
    Tri status = Tri::True;
    std::string witness;
    for (Elem a = 0; a < r.size(); ++a) {
      QuotientRing q = quotient_ring(r, ideal_generated(r, {a}));
      if (!is_absolutely_flat(q.ring)) {
        status = Tri::False;
        witness = "quotient by <" + std::to_string(a) + ">";
        break;
      }
    }
    if (status == Tri::True && r.size() <= kOracleSubsetBound)
      for (const Ideal& i : enumerate_ideals_bruteforce(r))
        if (!is_absolutely_flat(quotient_ring(r, i).ring)) {
          status = Tri::False;
          witness = "quotient by ideal of size " + std::to_string(i.count());
          break;
        }
    rep.add("stable_under_quotients", status, witness);
  } else {
    rep.add("stable_under_quotients", Tri::NA, "ring not absolutely flat");
  }

  if (af) {
    Tri status = Tri::True;
    std::string witness;
    for (Elem a = 0; a < r.size(); ++a)
      if (!is_absolutely_flat(localize(r, powers_of(r, a)).ring)) {
        status = Tri::False;
        witness = "localization at powers of " + std::to_string(a);
        break;
      }
    for (const PrimeIdeal& p : sp.primes)
      if (status == Tri::True &&
          !is_absolutely_flat(localize(r, complement_of(p.ideal)).ring)) {
        status = Tri::False;
        witness = "localization at prime " + std::to_string(p.index);
      }
    rep.add("stable_under_localizations", status, witness);
  } else {
    rep.add("stable_under_localizations", Tri::NA, "ring not absolutely flat");
  }

  {
    bool all_local_af = true;
    for (const PrimeIdeal& p : sp.primes)
      if (!is_absolutely_flat(localize(r, complement_of(p.ideal)).ring))
        all_local_af = false;
    rep.add("local_criterion", af == all_local_af ? Tri::True : Tri::False,
            af == all_local_af ? "" : "absolute flatness disagrees with all localizations");
  }

  {
    bool factors_af = true;
    for (Elem e : primitive_idempotents(r))
      if (!is_absolutely_flat(corner_ring(r, e).ring)) factors_af = false;
    rep.add("product_factors", af == factors_af ? Tri::True : Tri::False,
            af == factors_af ? "" : "factor decomposition disagrees");
  }

  if (af && !r.is_trivial() && sp.primes.size() == 1)
    rep.add("field_if_local", is_field(r) ? Tri::True : Tri::False,
            is_field(r) ? "" : "local absolutely flat ring is not a field");
  else
    rep.add("field_if_local", Tri::NA);

  if (af && is_integral_domain(r))
    rep.add("field_if_domain", is_field(r) ? Tri::True : Tri::False,
            is_field(r) ? "" : "absolutely flat domain is not a field");
  else
    rep.add("field_if_domain", Tri::NA);

  if (af && !r.is_trivial() && idempotents(r).size() == 2)
    rep.add("field_if_connected", is_field(r) ? Tri::True : Tri::False,
            is_field(r) ? "" : "absolutely flat ring with trivial idempotents is not a field");
  else
    rep.add("field_if_connected", Tri::NA);

  return rep;
}

/// Invariants of the pointwise localization functor on the full ring
/// R^(-1)R: spectrum pullback bijection, clopen fibers, kernel versus
/// nilradical, separation of both topologies and the bijectivity
/// criterion.
struct PointwiseInvariantReport {
  std::string subject;
  bool pullback_bijection = false;
  bool clopen_fibers = false;
  bool nontrivial_iff = false;
  bool kernel_in_nilradical = false;
  bool kernel_equals_nilradical = false;
  bool spectra_hausdorff = false;
  bool bijective_iff_af = false;
  bool eta_surjective = false;
  bool result_absolutely_flat = false;

  bool ok() const {
    return pullback_bijection && clopen_fibers && nontrivial_iff &&
           kernel_in_nilradical && kernel_equals_nilradical &&
           spectra_hausdorff && bijective_iff_af && eta_surjective &&
           result_absolutely_flat;
  }
};

inline bool spectrum_pullback_is_bijection(const PointwiseLocalization& l) {
  Spectrum src = spec(l.source);
  Spectrum res = spec(l.result);
  if (src.primes.size() != res.primes.size()) return false;
  std::vector<std::vector<bool>> pulled;
  for (const PrimeIdeal& q : res.primes) {
    std::vector<bool> pb = l.eta.pullback_mask(q.ideal);
    if (!Ideal::is_ideal_mask(l.source, pb)) return false;
    if (!is_prime_ideal(Ideal(l.source, pb))) return false;
    pulled.push_back(std::move(pb));
  }
  std::sort(pulled.begin(), pulled.end());
  if (std::adjacent_find(pulled.begin(), pulled.end()) != pulled.end())
    return false;
  std::vector<std::vector<bool>> source_masks;
  for (const PrimeIdeal& p : src.primes) source_masks.push_back(p.ideal.mask());
  std::sort(source_masks.begin(), source_masks.end());
  return pulled == source_masks;
}

inline PointwiseInvariantReport check_pointwise_invariants(
    const FiniteRing& r) {
  PointwiseInvariantReport rep;
  rep.subject = r.label();
  std::vector<Elem> all(r.size());
  for (std::size_t a = 0; a < r.size(); ++a) all[a] = static_cast<Elem>(a);
  PointwiseLocalization l = pointwise_localization(r, all);

  rep.pullback_bijection = spectrum_pullback_is_bijection(l);
  rep.nontrivial_iff = l.result.is_trivial() == r.is_trivial();

  Ideal ker = l.eta.kernel();
  Ideal nil = nilradical(r);
  bool contained = true;
  for (Elem a = 0; a < r.size(); ++a)
    if (ker.contains(a) && !nil.contains(a)) contained = false;
  rep.kernel_in_nilradical = contained;
  rep.kernel_equals_nilradical = ker == nil;

  Spectrum res_sp = spec(l.result);
  FiniteTopology zar = zariski_topology(res_sp);
  FiniteTopology flat = flat_topology(res_sp);
  rep.spectra_hausdorff = is_hausdorff(zar) && is_hausdorff(flat);

  rep.clopen_fibers = true;
  for (Elem s : l.inverted) {
    Elem img = l.eta(s);
    Elem inv = *l.inverse_image_of(s);
    Mask v = vanishing_set(res_sp, img);
    Mask d = basic_open(
        res_sp, l.result.sub(l.result.one(), l.result.mul(img, inv)));
    if (v != d || !zar.is_clopen(v) || !flat.is_clopen(v))
      rep.clopen_fibers = false;
  }

  rep.bijective_iff_af = l.eta.is_bijective() == is_absolutely_flat(r);
  rep.eta_surjective = l.eta.is_surjective();
  rep.result_absolutely_flat = is_absolutely_flat(l.result);
  return rep;
}

// ---------------------------------------------------------------------------
// Corpus runner.

struct CorpusSubject {
  std::string label;
  std::string ring_expr;               // nonempty for ring subjects
  std::optional<SpectralPoset> poset;  // set for poset subjects

  static CorpusSubject ring(std::string expr) {
    return CorpusSubject{expr, expr, std::nullopt};
  }
  static CorpusSubject of_poset(std::string label, SpectralPoset p) {
    return CorpusSubject{std::move(label), "", std::move(p)};
  }
};

struct CorpusOptions {
  std::size_t max_ring_size = kDefaultMaxRingSize;
  std::uint64_t seed = 0;
  std::size_t pointwise_cap = 36;  // run pointwise/stalk checks up to here
  std::size_t ideal_samples = 3;   // random f.g. ideals per flat ring
};

struct CorpusEntryReport {
  std::string label;
  std::string kind;  // "ring", "poset" or "error"
  std::string error;
  std::optional<SeparabilityReport> separability;
  std::optional<FlatZariskiComparison> flat_zariski;
  std::optional<StabilityReport> stability;
  std::optional<bool> pointwise_ok;
  std::optional<bool> stalks_ok;
  std::optional<bool> idempotent_generator_ok;
  std::vector<std::string> violations;
};

struct CorpusReport {
  std::vector<CorpusEntryReport> entries;
  std::size_t ring_count = 0;
  std::size_t poset_count = 0;
  std::size_t parse_error_count = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline bool random_ideal_generators_check(const FiniteRing& r,
                                          std::uint64_t seed,
                                          std::size_t samples) {
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    std::size_t count = 1 + rng() % 3;
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(static_cast<Elem>(rng() % r.size()));
    Elem e = idempotent_generator(r, gens);
    if (r.mul(e, e) != e) return false;
    if (!(ideal_generated(r, {e}) == ideal_generated(r, gens))) return false;
  }
  return true;
}

}  // namespace detail

/// Runs every verifier on every subject; parse errors are recorded per
/// entry and the run continues.  Ordering is the subject order, so the
/// report is deterministic.
inline CorpusReport run_corpus(const std::vector<CorpusSubject>& subjects,
                               const CorpusOptions& options = {}) {
  CorpusReport report;
  for (std::size_t idx = 0; idx < subjects.size(); ++idx) {
    const CorpusSubject& subject = subjects[idx];
    CorpusEntryReport entry;
    entry.label = subject.label;
    auto violation = [&](std::string what) {
      entry.violations.push_back(subject.label + ": " + what);
    };
    if (subject.poset) {
      try {
        entry.separability = separability_report(*subject.poset, subject.label);
        entry.kind = "poset";
        ++report.poset_count;
        if (!entry.separability->consistent)
          violation("separability conditions disagree");
        entry.flat_zariski = compare_flat_zariski(*subject.poset);
        if (!entry.flat_zariski->consistent())
          violation("flat=zariski disagrees with maximality");
      } catch (const BoundError& e) {
        entry.kind = "error";
        entry.error = e.what();
        entry.separability.reset();
        ++report.parse_error_count;
      }
    } else {
      try {
        FiniteRing r = eval_ring_expr(subject.ring_expr, options.max_ring_size);
        entry.kind = "ring";
        ++report.ring_count;
        entry.separability = separability_report(r, subject.label);
        if (!entry.separability->consistent)
          violation("separability conditions disagree");
        entry.flat_zariski = compare_flat_zariski(r);
        if (!entry.flat_zariski->consistent())
          violation("flat=zariski disagrees with maximality");
        entry.stability = stability_suite(r);
        if (!entry.stability->all_pass) violation("stability suite failed");
        if (r.size() <= options.pointwise_cap) {
          PointwiseInvariantReport p = check_pointwise_invariants(r);
          entry.pointwise_ok = p.ok();
          if (!p.ok()) violation("pointwise localization invariants failed");
          StalkReport stalks = verify_stalks(full_pointwise_ring(r));
          entry.stalks_ok = stalks.ok;
          if (!stalks.ok) violation("stalk verification failed");
        }
        if (is_absolutely_flat(r) && !r.is_trivial()) {
          bool ok = detail::random_ideal_generators_check(
              r, options.seed * 1000003 + idx, options.ideal_samples);
          entry.idempotent_generator_ok = ok;
          if (!ok) violation("idempotent ideal generator failed");
        }
      } catch (const ParseError& e) {
        entry.kind = "error";
        entry.error = e.what();
        ++report.parse_error_count;
      } catch (const BoundError& e) {
        entry.kind = "error";
        entry.error = e.what();
        ++report.parse_error_count;
      }
    }
    for (const std::string& v : entry.violations)
      report.violations.push_back(v);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace finspec
