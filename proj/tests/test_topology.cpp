#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "corpus_helpers.hpp"
#include "finspec/finspec.hpp"

using namespace finspec;
using testutil::corpus_posets;
using testutil::corpus_rings_up_to;

TEST_SUITE_BEGIN("topology");

namespace {

std::vector<Mask> sorted_masks(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// All poset subjects from the default corpus, unwrapped.
std::vector<SpectralPoset> poset_samples() {
  std::vector<SpectralPoset> out;
  for (const CorpusSubject& s : corpus_posets()) out.push_back(*s.poset);
  return out;
}

}  // namespace

TEST_CASE("generation from a subbasis") {
  FiniteTopology sierpinski = FiniteTopology::from_subbasis(2, {0b01});
  CHECK(sierpinski.opens() == std::vector<Mask>{0b00, 0b01, 0b11});

  FiniteTopology discrete =
      FiniteTopology::from_subbasis(3, {0b001, 0b010, 0b100});
  CHECK(discrete.opens().size() == 8);
  CHECK(discrete.is_discrete());

  FiniteTopology indiscrete = FiniteTopology::from_subbasis(2, {});
  CHECK(indiscrete.opens() == std::vector<Mask>{0b00, 0b11});

  CHECK_THROWS_AS(FiniteTopology::from_subbasis(17, {}), BoundError);
  CHECK_THROWS_AS(FiniteTopology::from_subbasis(2, {0b100}), Error);
}

TEST_CASE("explicit families are validated") {
  CHECK_NOTHROW(FiniteTopology(2, {0b00, 0b01, 0b11}));
  // missing the union {0,1} of {0} and {1}
  CHECK_THROWS_AS(FiniteTopology(2, {0b00, 0b01, 0b10}), Error);
  // missing the full set
  CHECK_THROWS_AS(FiniteTopology(2, {0b00, 0b01}), Error);
}

TEST_CASE("generation soundness on deterministic samples") {
  // Closure properties verified pairwise on every generated family.
  std::vector<std::vector<Mask>> subbases = {
      {0b0011, 0b0110}, {0b0001, 0b1000, 0b1110}, {0b0101, 0b0011, 0b1001}, {}};
  for (const auto& sb : subbases) {
    FiniteTopology t = FiniteTopology::from_subbasis(4, sb);
    CHECK(t.is_open(0));
    CHECK(t.is_open(t.full()));
    for (Mask a : t.opens())
      for (Mask b : t.opens()) {
        CHECK(t.is_open(a | b));
        CHECK(t.is_open(a & b));
      }
  }
}

TEST_CASE("zariski topology examples") {
  FiniteTopology z12 = zariski_topology(spec(ring_zmod(12)));
  CHECK(z12.is_discrete());

  FiniteTopology chain = zariski_topology(chain_poset(2));
  CHECK(chain.opens() == std::vector<Mask>{0b00, 0b01, 0b11});

  FiniteTopology anti = zariski_topology(antichain_poset(4));
  CHECK(anti.is_discrete());
}

TEST_CASE("flat topology examples") {
  FiniteTopology z12 = flat_topology(spec(ring_zmod(12)));
  CHECK(z12.is_discrete());

  FiniteTopology chain = flat_topology(chain_poset(2));
  CHECK(chain.opens() == std::vector<Mask>{0b00, 0b10, 0b11});

  FiniteTopology point = flat_topology(antichain_poset(1));
  CHECK(point.opens() == std::vector<Mask>{0b0, 0b1});
}

TEST_CASE("patch topology examples") {
  CHECK(patch_topology(chain_poset(2)).is_discrete());
  CHECK(patch_topology(spec(ring_zmod(12))).is_discrete());
  CHECK(patch_topology(antichain_poset(1)).is_discrete());
}

TEST_CASE("hausdorff predicate") {
  CHECK(is_hausdorff(FiniteTopology::from_subbasis(
      3, {0b001, 0b010, 0b100})));
  CHECK_FALSE(is_hausdorff(FiniteTopology::from_subbasis(2, {0b01})));
  CHECK_FALSE(is_hausdorff(zariski_topology(chain_poset(2))));
}

TEST_CASE("points closed") {
  CHECK(points_closed(FiniteTopology::from_subbasis(2, {0b01, 0b10})));
  CHECK_FALSE(points_closed(FiniteTopology::from_subbasis(2, {0b01})));
  FiniteTopology flat_chain = flat_topology(chain_poset(2));
  CHECK_FALSE(points_closed(flat_chain));
  CHECK(flat_chain.closure(0b10) == 0b11);  // closure of {m} is {0,m}
}

TEST_CASE("specialization order") {
  FiniteTopology discrete = FiniteTopology::from_subbasis(3, {0b001, 0b010, 0b100});
  CHECK(specialization_order(discrete) == antichain_poset(3));

  SpectralPoset chain = chain_poset(2);
  CHECK(specialization_order(zariski_topology(chain)) == chain);

  CHECK(specialization_order(zariski_topology(spec(ring_zmod(12)))) ==
        antichain_poset(2));

  FiniteTopology indiscrete = FiniteTopology::from_subbasis(2, {});
  CHECK_THROWS_WITH_AS(specialization_order(indiscrete),
                       doctest::Contains("not T0"), Error);
}

TEST_CASE("topology comparison") {
  Spectrum s = spec(ring_zmod(12));
  CHECK(topologies_equal(zariski_topology(s), flat_topology(s)));
  SpectralPoset chain = chain_poset(2);
  CHECK_FALSE(topologies_equal(zariski_topology(chain), flat_topology(chain)));
  FiniteTopology t = zariski_topology(chain);
  CHECK(topologies_equal(t, t));
  CHECK_THROWS_AS(
      topologies_equal(t, FiniteTopology::from_subbasis(3, {})), Error);
}

TEST_CASE("hochster duality involution") {
  for (const SpectralPoset& p : poset_samples()) {
    CHECK(p.dual().dual() == p);
    CHECK(specialization_order(zariski_topology(p)) == p);
    CHECK(specialization_order(flat_topology(p)) == p.dual());
    CHECK(zariski_topology(p.dual()) == flat_topology(p));
  }
}

TEST_CASE("ring and poset backends cohere") {
  for (const FiniteRing& r : corpus_rings_up_to(36)) {
    INFO(r.label());
    Spectrum s = spec(r);
    SpectralPoset order = containment_poset(s);
    CHECK(topologies_equal(zariski_topology(s), zariski_topology(order)));
    CHECK(topologies_equal(flat_topology(s), flat_topology(order)));
    CHECK(topologies_equal(patch_topology(s), patch_topology(order)));
  }
}

TEST_CASE("patch refines both and is discrete on T0 spaces") {
  for (const SpectralPoset& p : poset_samples()) {
    FiniteTopology zar = zariski_topology(p);
    FiniteTopology flat = flat_topology(p);
    FiniteTopology patch = patch_topology(p);
    CHECK(refines(patch, zar));
    CHECK(refines(patch, flat));
    CHECK(patch.is_discrete());
  }
  for (const FiniteRing& r : corpus_rings_up_to(36)) {
    Spectrum s = spec(r);
    FiniteTopology patch = patch_topology(s);
    CHECK(refines(patch, zariski_topology(s)));
    CHECK(refines(patch, flat_topology(s)));
    CHECK(patch.is_discrete());
  }
}

TEST_CASE("hausdorff iff discrete on finite spaces") {
  std::vector<FiniteTopology> spaces;
  for (const SpectralPoset& p : poset_samples()) {
    spaces.push_back(zariski_topology(p));
    spaces.push_back(flat_topology(p));
    spaces.push_back(patch_topology(p));
  }
  spaces.push_back(FiniteTopology::from_subbasis(2, {0b01}));
  spaces.push_back(FiniteTopology::from_subbasis(3, {}));
  for (const FiniteTopology& t : spaces)
    CHECK(is_hausdorff(t) == t.is_discrete());
}

TEST_CASE("poset parsing") {
  SpectralPoset p = parse_poset("points: 2\n0 < 1\n");
  CHECK(p == chain_poset(2));

  SpectralPoset closure = parse_poset("points: 3\n0 < 1\n1 < 2\n");
  CHECK(closure.leq(0, 2));
  CHECK(closure == chain_poset(3));

  SpectralPoset commented = parse_poset("# dvr\npoints: 2\n\n0 < 1\n");
  CHECK(commented == chain_poset(2));

  CHECK_THROWS_AS(parse_poset("points: 2\n0 < 1\n1 < 0\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("0 < 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("points: 2\n0 <= 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("points: 2\n0 < 5\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("points: 2\n1 < 1\n"), ParseError);
}

TEST_CASE("stock posets") {
  CHECK(chain_poset(3).has_nontrivial_order());
  CHECK_FALSE(antichain_poset(3).has_nontrivial_order());
  SpectralPoset fence = fence_poset(3);  // 0 < 1 > 2
  CHECK(fence.leq(0, 1));
  CHECK(fence.leq(2, 1));
  CHECK_FALSE(fence.leq(0, 2));
  SpectralPoset tree = tree_poset({0, 0});
  CHECK(tree.leq(0, 1));
  CHECK(tree.leq(0, 2));
  CHECK_FALSE(tree.leq(1, 2));
  CHECK(diamond_poset().leq(0, 3));
}

TEST_SUITE_END();
