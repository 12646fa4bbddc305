#include <gtest/gtest.h>

#include "support.hpp"

using namespace heawood;

namespace {

const CertificateReport& classified() {
  static const CertificateReport rep = Certifier(heawood_standard()).classify();
  return rep;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

/// One edge swapped: {1,2} replaced by {1,3}.
SimpleGraph swapped_edge_graph() {
  return support::with_edges(heawood_standard(), {Edge{0, 1}}, {Edge{0, 2}});
}

}  // namespace

TEST(Certifier, AllSixteenChecksVerifyOnHeawood) {
  const auto& rep = classified();
  ASSERT_EQ(rep.checks.size(), 16u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.verified()) << c.id << " " << c.witnesses.dump();
  EXPECT_TRUE(rep.all_checks_verified());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) EXPECT_EQ(rep.checks[i].id, "K" + std::to_string(i + 1));
}

TEST(Certifier, CensusAndBurnsideWitnesses) {
  const auto& rep = classified();
  const auto& k1 = rep.find_check("K1")->witnesses;
  EXPECT_EQ(k1["cycle_counts"]["6"], 28);
  EXPECT_EQ(k1["cycle_counts"]["12"], 56);
  EXPECT_EQ(k1["cycle_counts"]["14"], 24);
  EXPECT_EQ(k1["girth"], 6);
  const auto& k12 = rep.find_check("K12")->witnesses;
  EXPECT_EQ(k12["value"], "30/12");
  EXPECT_EQ(k12["integral"], false);
  EXPECT_EQ(rep.find_check("K3")->witnesses["order"], 336);
  EXPECT_EQ(rep.find_check("K5")->witnesses["distance3_pairs"], 28);
}

TEST(Certifier, ClassificationReplayReachesSevenGroups) {
  const auto& rep = classified();
  ASSERT_TRUE(rep.final_groups.has_value());
  EXPECT_EQ(*rep.final_groups, expected_final_groups());
  ASSERT_EQ(rep.derivation.size(), 6u);
  EXPECT_EQ(rep.derivation[1].candidates_after, expected_pruned_candidates());
  EXPECT_EQ(as_set(rep.derivation[1].groups),
            (std::set<std::string>{"Z4", "Z8", "D4", "D8", "S4", "PSL(2,7)", "PGL(2,7)"}));
  EXPECT_EQ(as_set(rep.derivation[2].groups), (std::set<std::string>{"D2", "D6"}));
  EXPECT_EQ(as_set(rep.derivation[3].groups), (std::set<std::string>{"A4"}));
  EXPECT_EQ(as_set(rep.derivation[4].groups), (std::set<std::string>{"Z7⋊Z3", "Z7⋊Z6"}));
  EXPECT_EQ(rep.derivation[5].groups, expected_final_groups());
  for (const auto& s : rep.derivation) EXPECT_EQ(s.status, StepStatus::Complete);
}

TEST(Certifier, JustificationsReferenceExistingIdsAndFollowCitationRules) {
  const auto& rep = classified();
  for (const auto& s : rep.derivation) {
    bool cites_verified_check = false;
    for (const auto& id : s.justification) {
      const bool known = Certifier::is_check_id(id) || Certifier::is_axiom_id(id);
      EXPECT_TRUE(known) << id;
      if (Certifier::is_check_id(id) && rep.find_check(id)->verified()) cites_verified_check = true;
    }
    if (s.action == "eliminate") {
      EXPECT_TRUE(cites_verified_check);
    }
    if (s.action == "retain") {
      const auto j = as_set(s.justification);
      EXPECT_TRUE(j.count("A4") && j.count("A6"));
    }
  }
}

TEST(Certifier, AxiomsAreNeverVerified) {
  const auto& rep = classified();
  ASSERT_EQ(rep.axioms.size(), 6u);
  const Json j = to_json(rep);
  for (const auto& a : j["axioms"]) EXPECT_NE(a["status"], "VERIFIED");
  EXPECT_EQ(j["axioms"][5]["status"], "ASSERTED-CONSTRUCTION");
}

TEST(Certifier, WithholdingA3BlocksTheTwoPowerAndD2Steps) {
  const auto rep = Certifier(heawood_standard(), {"A3"}).classify();
  EXPECT_FALSE(rep.final_groups.has_value());
  EXPECT_EQ(rep.derivation[1].status, StepStatus::AxiomMissing);
  EXPECT_EQ(rep.derivation[2].status, StepStatus::AxiomMissing);
  EXPECT_EQ(rep.derivation[4].status, StepStatus::Complete);
  EXPECT_TRUE(rep.all_checks_verified());
  EXPECT_TRUE(rep.axioms[2].withheld);
}

TEST(Certifier, WithholdingA5LeavesFrobeniusGroupsUneliminated) {
  const auto rep = Certifier(heawood_standard(), {"A5"}).classify();
  EXPECT_FALSE(rep.final_groups.has_value());
  const auto& step = rep.derivation[4];
  EXPECT_EQ(step.status, StepStatus::AxiomMissing);
  EXPECT_EQ(to_string(step.status), "not eliminated (axiom missing)");
  const auto after = as_set(step.candidates_after);
  EXPECT_TRUE(after.count("Z7⋊Z3") && after.count("Z7⋊Z6"));
  EXPECT_NE(format_text(rep).find("not eliminated (axiom missing)"), std::string::npos);
}

TEST(Certifier, UnknownIdsAreInputErrors) {
  Certifier c(heawood_standard());
  EXPECT_THROW(c.run_check("K99"), InputError);
  EXPECT_THROW(c.run_check("k1"), InputError);
  EXPECT_THROW(Certifier(heawood_standard(), {"A9"}), InputError);
}

TEST(Certifier, ReportsAreDeterministic) {
  const std::string a = format_machine(Certifier(heawood_standard()).classify());
  const std::string b = format_machine(Certifier(heawood_standard()).classify());
  EXPECT_EQ(a, b);
  EXPECT_EQ(format_text(classified()), format_text(Certifier(heawood_standard()).classify()));
}

TEST(Certifier, MachineFormatHasTheDocumentedTopLevelFields) {
  const Json j = Json::parse(format_machine(classified()));
  for (const char* key : {"schema_version", "graph_digest", "checks", "axioms", "derivation", "final_groups"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["graph_digest"], graph_digest(heawood_standard()));
  EXPECT_EQ(j["checks"].size(), 16u);
  EXPECT_EQ(j["final_groups"].size(), 7u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "VERIFIED");
}

TEST(Certifier, ExplicitPermutationWitnesses) {
  const auto& k16 = classified().find_check("K16")->witnesses;
  EXPECT_EQ(k16["printed_rotation"]["order"], 42);
  EXPECT_EQ(k16["printed_rotation"]["automorphism"], false);
  EXPECT_EQ(k16["rotation"]["automorphism"], true);
  EXPECT_EQ(k16["generated_group"]["iso_type"], "D7");
  EXPECT_EQ(k16["glide"]["labelings_tried"], 2688);
  EXPECT_EQ(k16["glide"]["labelings_admitting"], 672);
  EXPECT_EQ(k16["glide"]["order"], 6);
}

TEST(GlideLabeling, DerivedLabelingMakesTheGlideAnAutomorphism) {
  const SimpleGraph g = heawood_standard();
  const auto lab = derived_twelve_cycle_labeling(g);
  ASSERT_TRUE(lab.has_value());
  const Perm glide = parse_perm(kGlideText, *lab);
  EXPECT_TRUE(is_automorphism(glide, g));
  EXPECT_EQ(element_order(glide), 6u);
  // 1..12 trace a 12-cycle; v and w lie off it.
  std::vector<VertexId> ring;
  for (int i = 1; i <= 12; ++i) ring.push_back(static_cast<VertexId>(lab->index(std::to_string(i))));
  EXPECT_TRUE(Cycle::canonical(ring).is_cycle_of(g));
  const auto v = static_cast<VertexId>(lab->index("v")), w = static_cast<VertexId>(lab->index("w"));
  EXPECT_TRUE(g.adjacent(static_cast<VertexId>(lab->index("4")), w));
  EXPECT_FALSE(g.adjacent(static_cast<VertexId>(lab->index("7")), v));
  EXPECT_EQ(distance(g, v, w), 3);
  EXPECT_FALSE(derived_twelve_cycle_labeling(petersen_graph()).has_value());
}

TEST(GlideLabeling, AdmittingLabelingsAllContainTheInvariantHexagon) {
  const SimpleGraph g = heawood_standard();
  std::size_t admitting = 0;
  for (const Cycle& c : enumerate_cycles(g, 12))
    for (std::size_t start = 0; start < 12; ++start)
      for (bool rev : {false, true})
        for (bool swap : {false, true}) {
          const LabelingMap lab = twelve_cycle_labeling(g, c, start, rev, swap);
          const Perm p = parse_perm(kGlideText, lab);
          if (!is_automorphism(p, g)) continue;
          ++admitting;
          std::vector<VertexId> hex;
          for (auto l : kGlideHexagon) hex.push_back(static_cast<VertexId>(lab.index(l)));
          ASSERT_TRUE(Cycle::canonical(hex).is_cycle_of(g));
        }
  EXPECT_EQ(admitting, 672u);
}

TEST(OuterLabeling, FoundOnRelabelledCopiesAndAbsentElsewhere) {
  const SimpleGraph h = heawood_standard();
  EXPECT_EQ(find_outer_labeling(h, enumerate_cycles(h, 14)), LabelingMap::one_based(14));
  std::mt19937 rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    const SimpleGraph g = support::relabel(h, oracle::random_perm(14, rng));
    const auto lab = find_outer_labeling(g, enumerate_cycles(g, 14));
    ASSERT_TRUE(lab.has_value());
    EXPECT_TRUE(is_automorphism(parse_perm(kRotationText, *lab), g));
    EXPECT_TRUE(is_automorphism(parse_perm(kReflectionText, *lab), g));
    std::vector<VertexId> ring;
    for (int i = 1; i <= 14; ++i) ring.push_back(static_cast<VertexId>(lab->index(std::to_string(i))));
    EXPECT_TRUE(Cycle::canonical(ring).is_cycle_of(g));
  }
  const SimpleGraph swapped = swapped_edge_graph();
  EXPECT_FALSE(find_outer_labeling(swapped, enumerate_cycles(swapped, 14)).has_value());
  EXPECT_FALSE(find_outer_labeling(petersen_graph(), {}).has_value());
}

// --- negative controls --------------------------------------------------------

TEST(NegativeControls, PetersenFailsTheCensusAndGetsNoFinalList) {
  Certifier c(petersen_graph());
  const auto k1 = c.run_check("K1");
  EXPECT_FALSE(k1.verified());
  EXPECT_TRUE(k1.witnesses.contains("counterexample"));
  const auto rep = c.classify();
  EXPECT_FALSE(rep.final_groups.has_value());
  EXPECT_NE(format_text(rep).find("no final group list"), std::string::npos);
}

TEST(NegativeControls, SwappedEdgeFailsTheOrderSevenCheck) {
  Certifier c(swapped_edge_graph());
  const auto k6 = c.run_check("K6");
  EXPECT_FALSE(k6.verified());
  EXPECT_TRUE(k6.witnesses.contains("counterexample"));
  EXPECT_FALSE(c.classify().final_groups.has_value());
}

TEST(NegativeControls, EverySingleEdgeRemovalOrAdditionFailsAnEarlyCheck) {
  const SimpleGraph h = heawood_standard();
  auto fails_early = [](const SimpleGraph& g) {
    Certifier c(g);
    for (const char* id : {"K1", "K2", "K3", "K4", "K5", "K6", "K7", "K8"})
      if (!c.run_check(id).verified()) return true;
    return false;
  };
  for (const Edge& e : h.edges()) EXPECT_TRUE(fails_early(support::with_edges(h, {e}, {}))) << e.u << "-" << e.v;
  for (const Edge& e : support::non_edges(h)) EXPECT_TRUE(fails_early(support::with_edges(h, {}, {e}))) << e.u << "-" << e.v;
}

TEST(CertifierProperties, RelabelledHeawoodClassifiesIdentically) {
  std::mt19937 rng(1414);
  for (int trial = 0; trial < 3; ++trial) {
    const SimpleGraph g = support::relabel(heawood_standard(), oracle::random_perm(14, rng));
    const auto rep = Certifier(g).classify();
    EXPECT_TRUE(rep.all_checks_verified());
    ASSERT_TRUE(rep.final_groups.has_value());
    EXPECT_EQ(*rep.final_groups, expected_final_groups());
  }
}
