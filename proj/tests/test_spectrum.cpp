#include <doctest.h>

#include <algorithm>

#include "corpus_helpers.hpp"
#include "finspec/finspec.hpp"

using namespace finspec;
using testutil::corpus_rings;
using testutil::corpus_rings_up_to;
using testutil::prime_masks;

TEST_SUITE_BEGIN("spectrum");

namespace {

std::vector<Elem> prime_elements(const Spectrum& s, std::size_t i) {
  return s.primes[i].ideal.elements();
}

}  // namespace

TEST_CASE("spectrum of Z/12") {
  Spectrum s = spec(ring_zmod(12));
  REQUIRE(s.primes.size() == 2);
  std::vector<std::vector<Elem>> sets = {prime_elements(s, 0),
                                         prime_elements(s, 1)};
  std::sort(sets.begin(), sets.end());
  CHECK(sets[0] == std::vector<Elem>{0, 2, 4, 6, 8, 10});
  CHECK(sets[1] == std::vector<Elem>{0, 3, 6, 9});
}

TEST_CASE("spectrum of fields and products") {
  for (std::size_t q : {2, 3, 4, 5, 8, 9}) {
    Spectrum s = spec(gf_field(q));
    REQUIRE(s.primes.size() == 1);
    CHECK(s.primes[0].ideal.elements() == std::vector<Elem>{0});
  }
  // Z/2 x Z/3: {0} x Z/3 and Z/2 x {0}, in pair encoding ia*3+ib.
  Spectrum s = spec(ring_product(ring_zmod(2), ring_zmod(3)).ring);
  REQUIRE(s.primes.size() == 2);
  std::vector<std::vector<Elem>> sets = {prime_elements(s, 0),
                                         prime_elements(s, 1)};
  std::sort(sets.begin(), sets.end());
  CHECK(sets[0] == std::vector<Elem>{0, 1, 2});
  CHECK(sets[1] == std::vector<Elem>{0, 3});
}

TEST_CASE("spectrum of the trivial ring is empty") {
  CHECK(spec(ring_zmod(1)).primes.empty());
  CHECK(spec_bruteforce_oracle(ring_zmod(1)).primes.empty());
}

TEST_CASE("oracle examples") {
  Spectrum s30 = spec_bruteforce_oracle(ring_zmod(30));
  REQUIRE(s30.primes.size() == 3);
  std::vector<std::size_t> sizes;
  for (const PrimeIdeal& p : s30.primes) sizes.push_back(p.ideal.count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{6, 10, 15});  // <5>, <3>, <2>

  FiniteRing dual = ring_poly_quotient(ring_zmod(2), {0, 0, 1});
  Spectrum sd = spec_bruteforce_oracle(dual);
  REQUIRE(sd.primes.size() == 1);
  CHECK(sd.primes[0].ideal.elements() == std::vector<Elem>{0, 2});

  CHECK_THROWS_AS(spec_bruteforce_oracle(gf_field(25)), BoundError);
}

TEST_CASE("spec agrees with the oracle") {
  for (std::size_t n = 1; n <= 100; ++n) {
    FiniteRing r = ring_zmod(n);
    CHECK(prime_masks(spec(r)) == prime_masks(spec_bruteforce_oracle(r)));
  }
  for (const FiniteRing& r : corpus_rings_up_to(kOracleSubsetBound)) {
    INFO(r.label());
    CHECK(prime_masks(spec(r)) == prime_masks(spec_bruteforce_oracle(r)));
  }
}

TEST_CASE("primes are proper, prime, maximal, and contain the nilradical") {
  for (const FiniteRing& r : corpus_rings_up_to(kAxiomCheckBound)) {
    INFO(r.label());
    Spectrum s = spec(r);
    Ideal nil = nilradical(r);
    std::vector<bool> intersection(r.size(), true);
    for (const PrimeIdeal& p : s.primes) {
      CHECK(p.ideal.is_proper());
      CHECK(is_prime_ideal(p.ideal));
      CHECK(is_field(residue_field(r, p).ring));
      for (Elem a = 0; a < r.size(); ++a) {
        if (nil.contains(a)) CHECK(p.ideal.contains(a));
        if (!p.ideal.contains(a)) intersection[a] = false;
      }
    }
    if (!s.primes.empty()) CHECK(intersection == nil.mask());
  }
}

TEST_CASE("spectrum of a product is the disjoint union of pullbacks") {
  std::vector<FiniteRing> sample = {ring_zmod(4), ring_zmod(6), gf_field(4),
                                    ring_zmod(9)};
  for (const FiniteRing& a : sample)
    for (const FiniteRing& b : sample) {
      RingProduct p = ring_product(a, b);
      std::vector<std::vector<bool>> expected;
      for (const PrimeIdeal& q : spec(a).primes)
        expected.push_back(p.first.pullback_mask(q.ideal));
      for (const PrimeIdeal& q : spec(b).primes)
        expected.push_back(p.second.pullback_mask(q.ideal));
      std::sort(expected.begin(), expected.end());
      CHECK(prime_masks(spec(p.ring)) == expected);
    }
}

TEST_CASE("residue fields of Z/12") {
  FiniteRing z12 = ring_zmod(12);
  Spectrum s = spec(z12);
  std::vector<std::size_t> sizes;
  for (const PrimeIdeal& p : s.primes) {
    QuotientRing k = residue_field(z12, p);
    CHECK(k.projection.is_surjective());
    sizes.push_back(k.ring.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3});

  FiniteRing f9 = gf_field(9);
  Spectrum sf = spec(f9);
  QuotientRing k = residue_field(f9, sf.primes[0]);
  CHECK(k.ring.size() == 9);
  CHECK(k.projection.is_bijective());
}

TEST_CASE("basic opens and vanishing sets") {
  FiniteRing z12 = ring_zmod(12);
  Spectrum s = spec(z12);
  auto prime_with = [&](Elem member) {
    for (const PrimeIdeal& p : s.primes)
      if (p.ideal.contains(member)) return p.index;
    REQUIRE(false);
    return std::size_t{0};
  };
  std::size_t p2 = prime_with(2), p3 = prime_with(3);

  CHECK(basic_open(s, 2) == PointSet{1} << p3);
  CHECK(basic_open(s, 0) == 0);
  CHECK(basic_open(s, 1) == 0b11);
  CHECK(basic_open(s, 6) == 0);

  CHECK(vanishing_set(s, ideal_generated(z12, {6})) == 0b11);
  CHECK(vanishing_set(s, ideal_generated(z12, {0})) == 0b11);
  CHECK(vanishing_set(s, full_ideal(z12)) == 0);
  CHECK(vanishing_set(s, Elem{2}) == PointSet{1} << p2);
}

TEST_SUITE_END();
