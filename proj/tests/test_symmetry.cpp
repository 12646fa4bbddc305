#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace heawood;

namespace {

struct HeawoodFixture {
  SimpleGraph g = heawood_standard();
  PermGroup aut = automorphism_group(g);
  std::vector<GroupAction> actions;
  std::vector<SubgroupRecord> census = enumerate_subgroups(aut);

  HeawoodFixture() {
    for (ActionDomain d : {ActionDomain::vertices(), ActionDomain::edges(), ActionDomain::cycles(6),
                           ActionDomain::cycles(12), ActionDomain::cycles(14)})
      actions.push_back(induced_action(aut, g, d));
  }
};

const HeawoodFixture& fixture() {
  static const HeawoodFixture f;
  return f;
}

/// Orbit count by explicit search over images, without Burnside.
std::size_t direct_orbit_count(const GroupAction& a) {
  std::vector<bool> seen(a.domain_size(), false);
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < a.domain_size(); ++x) {
    if (seen[x]) continue;
    ++orbits;
    for (std::size_t i = 0; i < a.group().order(); ++i) seen[a.action_of_index(i)(static_cast<int>(x))] = true;
  }
  return orbits;
}

}  // namespace

TEST(Automorphisms, HeawoodGroupHasOrder336) {
  const auto& h = fixture();
  EXPECT_EQ(h.aut.order(), 336u);
  for (const Perm& p : h.aut.elements()) ASSERT_TRUE(is_automorphism(p, h.g));
  const auto sp = order_spectrum(h.aut);
  EXPECT_FALSE(sp.count(14));
  EXPECT_FALSE(sp.count(21));
}

TEST(Automorphisms, SmallFamilies) {
  EXPECT_EQ(automorphism_group(petersen_graph()).order(), 120u);
  EXPECT_EQ(automorphism_group(cycle_graph(9)).order(), 18u);
  EXPECT_EQ(automorphism_group(complete_graph(5)).order(), 120u);
  EXPECT_EQ(automorphism_group(path_graph(4)).order(), 2u);
  EXPECT_EQ(automorphism_group(SimpleGraph(0, {})).order(), 1u);
}

TEST(Automorphisms, ElementLimitRaisesResourceError) {
  EXPECT_THROW(automorphism_group(complete_graph(8), 1000), ResourceError);
  EXPECT_THROW(automorphism_group(cycle_graph(33)), InputError);
}

TEST(Automorphisms, NonAutomorphismsAreRejected) {
  const SimpleGraph g = heawood_standard();
  EXPECT_FALSE(is_automorphism(parse_perm("(1,2)", LabelingMap::one_based(14)), g));
  EXPECT_FALSE(is_automorphism(Perm::identity(13), g));
  const PermGroup bad = generate_group({parse_perm("(1,2)", LabelingMap::one_based(14))});
  EXPECT_THROW(induced_action(bad, g, ActionDomain::vertices()), InputError);
}

TEST(Actions, TransitiveOnVerticesEdgesAndLongCycles) {
  for (const auto& a : fixture().actions) EXPECT_TRUE(is_transitive(a)) << a.domain().name();
}

TEST(Actions, ActionIsAHomomorphism) {
  const auto& h = fixture();
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, h.aut.order() - 1);
  for (const auto& a : h.actions)
    for (int t = 0; t < 200; ++t) {
      const Perm& x = h.aut.element(pick(rng));
      const Perm& y = h.aut.element(pick(rng));
      ASSERT_EQ(a.action_of(x * y), a.action_of(x) * a.action_of(y)) << a.domain().name();
    }
}

TEST(Actions, NonMemberIsAnInputError) {
  const auto& h = fixture();
  EXPECT_THROW(h.actions[0].action_of(Perm::identity(3)), InputError);
}

TEST(Burnside, OrbitCountsMatchDirectCountForEveryCensusSubgroupAndDomain) {
  const auto& h = fixture();
  std::size_t pairs = 0;
  for (const auto& rec : h.census) {
    const PermGroup sub = subgroup_group(h.aut, rec);
    for (const auto& a : h.actions) {
      const GroupAction r = a.restricted(sub);
      const Rational value = burnside_orbit_count(r);
      ASSERT_TRUE(value.is_integer()) << rec.iso_type.label() << " on " << a.domain().name();
      ASSERT_EQ(static_cast<std::size_t>(value.num / value.den), direct_orbit_count(r));
      ASSERT_EQ(static_cast<std::size_t>(value.num / value.den), orbit_partition(r).size());
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, h.census.size() * 5);
}

TEST(Burnside, OverrideGivesThirtyTwelfths) {
  const PermGroup a4 = generate_group({Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})});
  FixOverride fix;
  for (const Perm& p : a4.elements()) fix[p] = p.is_identity() ? 14 : element_order(p) == 3 ? 2 : 0;
  const Rational r = burnside_orbit_count(a4, fix);
  EXPECT_EQ(r.num, 30);
  EXPECT_EQ(r.den, 12);
  EXPECT_FALSE(r.is_integer());
  EXPECT_EQ(r, (Rational{5, 2}));
  EXPECT_EQ(r.str(), "30/12");
  fix.erase(a4.element(1));
  EXPECT_THROW(burnside_orbit_count(a4, fix), InputError);
}

TEST(CycleMotion, DescriptorsOfRotationsAndReflections) {
  const SimpleGraph g = heawood_standard();
  const LabelingMap outer = LabelingMap::one_based(14);
  std::vector<VertexId> ring(14);
  for (int i = 0; i < 14; ++i) ring[i] = i;
  const Cycle c = Cycle::canonical(ring);
  const Perm rot = parse_perm(kRotationText, outer);
  const auto d = cycle_action_descriptor(rot, c);
  EXPECT_EQ(d.kind, RotationDescriptor::Kind::Rotation);
  EXPECT_EQ(d.step, 2u);
  EXPECT_EQ(d.str(), "rotation 2pi*1/7");
  EXPECT_EQ(cycle_action_descriptor(parse_perm(kReflectionText, outer), c).kind, RotationDescriptor::Kind::Reflection);
  EXPECT_EQ(cycle_action_descriptor(Perm::identity(14), c).kind, RotationDescriptor::Kind::Identity);
  EXPECT_THROW(cycle_action_descriptor(parse_perm("(1,2)", outer), enumerate_cycles(g, 6).front()), InputError);
}

TEST(CycleMotion, PrintedRotationIsNotAnAutomorphismButTheCorrectedOneIs) {
  const SimpleGraph g = heawood_standard();
  const LabelingMap outer = LabelingMap::one_based(14);
  const Perm printed = parse_perm(kPrintedRotationText, outer);
  EXPECT_EQ(element_order(printed), 42u);
  EXPECT_FALSE(is_automorphism(printed, g));
  const Perm fixed = parse_perm(kRotationText, outer);
  EXPECT_EQ(element_order(fixed), 7u);
  EXPECT_TRUE(is_automorphism(fixed, g));
  EXPECT_EQ(iso_type(generate_group({fixed, parse_perm(kReflectionText, outer)})), IsoType::dihedral(7));
}

// --- properties -------------------------------------------------------------

TEST(SymmetryProperties, AutomorphismGroupMatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const SimpleGraph g = support::random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    const auto brute = oracle::automorphisms(support::to_adj(g));
    const PermGroup aut = automorphism_group(g);
    std::set<oracle::Images> lib;
    for (const Perm& p : aut.elements()) lib.insert(p.images());
    ASSERT_EQ(lib, brute) << to_edge_list(g);
  }
}

TEST(SymmetryProperties, AutomorphismsMapCyclesToCycles) {
  const auto& h = fixture();
  std::mt19937 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, h.aut.order() - 1);
  for (int len : {6, 12, 14}) {
    const auto cycles = enumerate_cycles(h.g, len);
    for (int t = 0; t < 100; ++t) {
      const Perm& p = h.aut.element(pick(rng));
      const Cycle& c = cycles[rng() % cycles.size()];
      const Cycle img = image_of(p, c);
      ASSERT_TRUE(img.is_cycle_of(h.g));
      ASSERT_TRUE(std::binary_search(cycles.begin(), cycles.end(), img));
    }
  }
}

TEST(SymmetryProperties, RelabelledHeawoodHasConjugateAutomorphismGroup) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 4; ++trial) {
    const auto sigma = oracle::random_perm(14, rng);
    const SimpleGraph g = support::relabel(heawood_standard(), sigma);
    const PermGroup aut = automorphism_group(g);
    EXPECT_EQ(aut.order(), 336u);
    EXPECT_EQ(order_spectrum(aut), order_spectrum(fixture().aut));
  }
}

TEST(SymmetryProperties, InvariantCycleMotionHasOrderDividingElementOrder) {
  const auto& h = fixture();
  for (const auto& a : h.actions) {
    if (a.domain().kind != ActionDomain::Kind::Cycles) continue;
    for (const Perm& p : h.aut.elements())
      for (std::size_t ci : fixed_points(p, a)) {
        const auto d = cycle_action_descriptor(p, a.cycles()[ci]);
        const std::size_t motion_order = d.kind == RotationDescriptor::Kind::Identity ? 1
                                         : d.kind == RotationDescriptor::Kind::Reflection
                                             ? 2
                                             : d.length / std::gcd(d.step, d.length);
        ASSERT_EQ(element_order(p) % motion_order, 0u);
      }
  }
}
