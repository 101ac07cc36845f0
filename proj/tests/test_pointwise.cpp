#include <doctest.h>

#include <algorithm>

#include "corpus_helpers.hpp"
#include "finspec/finspec.hpp"

using namespace finspec;
using testutil::corpus_rings_up_to;

TEST_SUITE_BEGIN("pointwise");

namespace {

// Fold single adjunctions in a caller-chosen order (the library API
// canonicalizes the order, so order independence is probed here).
PointwiseLocalization fold_adjoin(const FiniteRing& r,
                                  const std::vector<Elem>& order) {
  FiniteRing cur = r;
  RingHom eta = RingHom::identity(r);
  for (Elem s : order) {
    PointwiseLocalization step = adjoin_pointwise_inverse(cur, eta(s));
    eta = compose(step.eta, eta);
    cur = step.result;
  }
  std::vector<Elem> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  return PointwiseLocalization{r, sorted, cur, eta, {}};
}

bool kernel_inside_nilradical(const PointwiseLocalization& l) {
  Ideal ker = l.eta.kernel();
  Ideal nil = nilradical(l.source);
  for (Elem a = 0; a < l.source.size(); ++a)
    if (ker.contains(a) && !nil.contains(a)) return false;
  return true;
}

bool clopen_fiber_identity(const PointwiseLocalization& l) {
  Spectrum sp = spec(l.result);
  FiniteTopology zar = zariski_topology(sp);
  FiniteTopology flat = flat_topology(sp);
  for (Elem s : l.inverted) {
    Elem img = l.eta(s);
    std::optional<Elem> inv = pointwise_inverse(l.result, img);
    if (!inv) return false;
    Mask v = vanishing_set(sp, img);
    Mask d =
        basic_open(sp, l.result.sub(l.result.one(), l.result.mul(img, *inv)));
    if (v != d || !zar.is_clopen(v) || !flat.is_clopen(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("adjoining an inverse to Z/4 kills the nilpotent") {
  FiniteRing z4 = ring_zmod(4);
  PointwiseLocalization l = adjoin_pointwise_inverse(z4, 2);
  CHECK(l.result.size() == 2);
  CHECK(is_isomorphic(l.result, ring_zmod(2)));
  CHECK(l.eta.kernel().elements() == std::vector<Elem>{0, 2});
  CHECK(l.inverse_image_of(2) == l.result.zero());
}

TEST_CASE("adjoining a unit changes nothing") {
  FiniteRing z12 = ring_zmod(12);
  for (Elem s : {Elem{1}, Elem{5}, Elem{7}, Elem{11}}) {
    PointwiseLocalization l = adjoin_pointwise_inverse(z12, s);
    CHECK(l.result.same_object(z12));
    CHECK(l.eta.is_bijective());
    CHECK(l.inverse_image_of(s) == unit_inverse(z12, s));
  }
}

TEST_CASE("adjoining an already pointwise-invertible element is identity") {
  FiniteRing z6 = ring_zmod(6);
  PointwiseLocalization l = adjoin_pointwise_inverse(z6, 2);
  CHECK(l.result.same_object(z6));
  CHECK(l.inverse_image_of(2) == 2);
}

TEST_CASE("pointwise localization of Z/12 at everything") {
  FiniteRing z12 = ring_zmod(12);
  std::vector<Elem> all;
  for (Elem a = 0; a < 12; ++a) all.push_back(a);
  PointwiseLocalization l = pointwise_localization(z12, all);
  CHECK(l.result.size() == 6);
  CHECK(is_isomorphic(l.result, ring_zmod(6)));
  CHECK(l.eta.kernel().elements() == std::vector<Elem>{0, 6});
  CHECK(l.eta.kernel() == nilradical(z12));
}

TEST_CASE("empty S gives the identity") {
  FiniteRing z12 = ring_zmod(12);
  PointwiseLocalization l = pointwise_localization(z12, {});
  CHECK(l.result.same_object(z12));
  CHECK(l.eta == RingHom::identity(z12));
}

TEST_CASE("absolutely flat source gives bijective eta") {
  FiniteRing z6 = ring_zmod(6);
  std::vector<Elem> all;
  for (Elem a = 0; a < 6; ++a) all.push_back(a);
  CHECK(pointwise_localization(z6, all).eta.is_bijective());
}

TEST_CASE("full pointwise ring examples") {
  PointwiseLocalization z12 = full_pointwise_ring(ring_zmod(12));
  CHECK(is_isomorphic(z12.result, ring_zmod(6)));
  CHECK(is_absolutely_flat(z12.result));

  PointwiseLocalization f9 = full_pointwise_ring(gf_field(9));
  CHECK(f9.eta.is_bijective());

  FiniteRing dual = ring_poly_quotient(ring_zmod(2), {0, 0, 1});
  PointwiseLocalization d = full_pointwise_ring(dual);
  CHECK(d.result.size() == 2);

  PointwiseLocalization triv = full_pointwise_ring(ring_zmod(1));
  CHECK(triv.result.is_trivial());
}

TEST_CASE("universal property checks") {
  FiniteRing z12 = ring_zmod(12);
  PointwiseLocalization l = full_pointwise_ring(z12);

  std::vector<RingHom> to_f3 = enumerate_homs(z12, ring_zmod(3));
  REQUIRE(to_f3.size() == 1);
  UniversalPropertyResult u = universal_property_check(l, to_f3[0]);
  CHECK(u.confirmed());
  CHECK(u.factorization_count == 1);
  CHECK(u.factorization->is_surjective());

  UniversalPropertyResult self = universal_property_check(l, l.eta);
  CHECK(self.confirmed());
  CHECK(*self.factorization == RingHom::identity(l.result));

  FiniteRing z4 = ring_zmod(4);
  PointwiseLocalization a = adjoin_pointwise_inverse(z4, 2);
  std::vector<RingHom> to_f2 = enumerate_homs(z4, ring_zmod(2));
  REQUIRE(to_f2.size() == 1);
  UniversalPropertyResult v = universal_property_check(a, to_f2[0]);
  CHECK(v.confirmed());
  CHECK(v.factorization->is_bijective());

  // identity on Z/4 does not invert 2: inapplicable, not a violation
  UniversalPropertyResult w =
      universal_property_check(a, RingHom::identity(z4));
  CHECK(w.status == UniversalPropertyResult::Status::inapplicable);
  CHECK(w.ok());
}

TEST_CASE("universal property across small corpus rings and fields") {
  for (const FiniteRing& r : corpus_rings_up_to(16)) {
    PointwiseLocalization l = full_pointwise_ring(r);
    for (std::size_t q : {2, 3, 4, 5}) {
      FiniteRing f = gf_field(q);
      for (const RingHom& phi : enumerate_homs(r, f)) {
        UniversalPropertyResult u = universal_property_check(l, phi);
        INFO(r.label(), " -> GF(", q, ")");
        CHECK(u.confirmed());
      }
    }
  }
}

TEST_CASE("universal property against non-field targets") {
  // Absolutely flat targets with several idempotents admit more homs,
  // so uniqueness of the factorization is a sharper check there.
  std::vector<FiniteRing> targets = {
      ring_zmod(6), ring_product(ring_zmod(2), ring_zmod(3)).ring,
      ring_product(ring_zmod(2), ring_zmod(2)).ring, ring_zmod(10)};
  std::size_t confirmed = 0;
  for (const FiniteRing& r : corpus_rings_up_to(16)) {
    PointwiseLocalization l = full_pointwise_ring(r);
    for (const FiniteRing& t : targets)
      for (const RingHom& phi : enumerate_homs(r, t)) {
        UniversalPropertyResult u = universal_property_check(l, phi);
        INFO(r.label(), " -> ", t.label());
        CHECK(u.confirmed());
        ++confirmed;
      }
  }
  CHECK(confirmed > 20);
}

TEST_CASE("universal property of partial localizations") {
  FiniteRing z12 = ring_zmod(12);
  PointwiseLocalization l = pointwise_localization(z12, {2});
  std::size_t applicable = 0;
  for (const FiniteRing& t :
       {ring_zmod(3), ring_zmod(4), ring_zmod(6), ring_zmod(2)})
    for (const RingHom& phi : enumerate_homs(z12, t)) {
      UniversalPropertyResult u = universal_property_check(l, phi);
      CHECK(u.ok());
      if (u.status != UniversalPropertyResult::Status::inapplicable) {
        CHECK(u.confirmed());
        ++applicable;
      }
    }
  CHECK(applicable >= 2);
  // a target that does not invert 2 must be reported inapplicable
  std::vector<RingHom> to_z4 = enumerate_homs(z12, ring_zmod(4));
  REQUIRE(to_z4.size() == 1);
  CHECK(universal_property_check(l, to_z4[0]).status ==
        UniversalPropertyResult::Status::inapplicable);
}

TEST_CASE("stalk verification") {
  PointwiseLocalization z12 = full_pointwise_ring(ring_zmod(12));
  StalkReport rep = verify_stalks(z12);
  CHECK(rep.ok);
  REQUIRE(rep.entries.size() == 2);
  std::vector<std::size_t> sizes = {rep.entries[0].stalk_size,
                                    rep.entries[1].stalk_size};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3});

  PointwiseLocalization f8 = full_pointwise_ring(gf_field(8));
  StalkReport frep = verify_stalks(f8);
  CHECK(frep.ok);
  REQUIRE(frep.entries.size() == 1);
  CHECK(frep.entries[0].stalk_size == 8);

  PointwiseLocalization f2f2 =
      full_pointwise_ring(ring_product(ring_zmod(2), ring_zmod(2)).ring);
  StalkReport prep = verify_stalks(f2f2);
  CHECK(prep.ok);
  REQUIRE(prep.entries.size() == 2);
  CHECK(prep.entries[0].stalk_size == 2);
  CHECK(prep.entries[1].stalk_size == 2);
}

TEST_CASE("partial localizations keep the spectrum and kernel invariants") {
  std::vector<FiniteRing> rings = {ring_zmod(12), ring_zmod(8), ring_zmod(9),
                                   ring_product(ring_zmod(4), ring_zmod(3)).ring,
                                   ring_poly_quotient(ring_zmod(2), {0, 0, 1})};
  for (const FiniteRing& r : rings) {
    INFO(r.label());
    for (Elem s = 0; s < r.size(); ++s) {
      PointwiseLocalization l = pointwise_localization(r, {s});
      CHECK(spectrum_pullback_is_bijection(l));
      CHECK(kernel_inside_nilradical(l));
      CHECK(clopen_fiber_identity(l));
      CHECK(l.result.is_trivial() == r.is_trivial());
      CHECK(l.eta.is_surjective());
    }
  }
}

TEST_CASE("order independence up to compatible isomorphism") {
  std::vector<FiniteRing> rings = {ring_zmod(12), ring_zmod(8),
                                   ring_product(ring_zmod(4), ring_zmod(3)).ring};
  for (const FiniteRing& r : rings) {
    std::vector<Elem> asc, desc;
    for (Elem a = 0; a < r.size(); ++a) asc.push_back(a);
    desc.assign(asc.rbegin(), asc.rend());
    PointwiseLocalization l1 = fold_adjoin(r, asc);
    PointwiseLocalization l2 = fold_adjoin(r, desc);
    bool found = false;
    search_homs(l1.result, l2.result, [&](const RingHom& psi) {
      if (psi.is_bijective() && compose(psi, l1.eta) == l2.eta) {
        found = true;
        return true;
      }
      return false;
    });
    INFO(r.label());
    CHECK(found);
  }
}

TEST_CASE("the full pointwise ring is a functor") {
  std::vector<std::pair<FiniteRing, FiniteRing>> pairs = {
      {ring_zmod(12), ring_zmod(6)},
      {ring_zmod(4), ring_zmod(2)},
      {ring_zmod(6), ring_zmod(6)},
      {ring_zmod(12), ring_zmod(3)},
  };
  for (const auto& [a, b] : pairs) {
    PointwiseLocalization la = full_pointwise_ring(a);
    PointwiseLocalization lb = full_pointwise_ring(b);
    for (const RingHom& f : enumerate_homs(a, b)) {
      RingHom rhs = compose(lb.eta, f);
      std::size_t count = 0;
      search_homs(la.result, lb.result, [&](const RingHom& h) {
        if (compose(h, la.eta) == rhs) ++count;
        return false;
      });
      INFO(a.label(), " -> ", b.label());
      CHECK(count == 1);
    }
  }
}

TEST_CASE("bijectivity characterizes absolute flatness over small rings") {
  for (const FiniteRing& r : corpus_rings_up_to(24)) {
    INFO(r.label());
    std::vector<Elem> all;
    for (Elem a = 0; a < r.size(); ++a) all.push_back(a);
    PointwiseLocalization l = pointwise_localization(r, all);
    CHECK(l.eta.is_bijective() == is_absolutely_flat(r));
  }
}

TEST_SUITE_END();
