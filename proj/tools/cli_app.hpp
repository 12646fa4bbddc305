#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "heawood/heawood.hpp"

namespace heawood::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct Options {
  std::string format = "text";
  std::string out_path;
  std::string labeling = "figure1";
  std::string graph_path;
  std::vector<std::string> withhold;
  std::string check_id;
  int cycle_length = 0;
  bool spectrum = false;
  bool conjugacy = false;
  bool subgroups = false;
};

inline SimpleGraph load_graph(const Options& o) {
  if (o.graph_path.empty()) return heawood_standard();
  std::ifstream in(o.graph_path);
  if (!in) throw InputError("cannot open graph file '" + o.graph_path + "'");
  return parse_edge_list(in);
}

inline LabelingMap load_labeling(const Options& o, const SimpleGraph& g) {
  if (o.labeling == "derived12") {
    auto lab = derived_twelve_cycle_labeling(g);
    if (!lab) throw InputError("derived12 labeling needs a 14-vertex graph with a 12-cycle");
    return *lab;
  }
  return LabelingMap::one_based(static_cast<std::size_t>(g.vertex_count()));
}

inline Json cycle_labels(const Cycle& c, const LabelingMap& lab) {
  Json out = Json::array();
  for (VertexId v : c.vertices()) out.push_back(lab.label(static_cast<std::size_t>(v)));
  return out;
}

inline std::string dump_cycles(const Options& o, const SimpleGraph& g, const LabelingMap& lab) {
  if (o.cycle_length < 3) throw InputError("--length must be at least 3");
  std::vector<Cycle> cs;
  if (o.cycle_length <= g.vertex_count()) cs = enumerate_cycles(g, o.cycle_length);
  if (o.format == "machine") {
    Json j{{"length", o.cycle_length}, {"count", cs.size()}, {"cycles", Json::array()}};
    for (const Cycle& c : cs) j["cycles"].push_back(cycle_labels(c, lab));
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  for (const Cycle& c : cs) {
    for (std::size_t i = 0; i < c.length(); ++i) s << (i ? " " : "") << lab.label(static_cast<std::size_t>(c[i]));
    s << "\n";
  }
  return s.str();
}

inline std::string dump_graph(const Options& o, const SimpleGraph& g, const LabelingMap& lab) {
  if (o.format == "machine") {
    Json j{{"vertices", g.vertex_count()}, {"edges", Json::array()}, {"digest", graph_digest(g)}};
    for (const Edge& e : g.edges())
      j["edges"].push_back({lab.label(static_cast<std::size_t>(e.u)), lab.label(static_cast<std::size_t>(e.v))});
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "# " << graph_digest(g) << "\n" << to_edge_list(g);
  return s.str();
}

inline std::string dump_group(const Options& o, const SimpleGraph& g, const LabelingMap& lab) {
  const PermGroup aut = automorphism_group(g);
  const bool all = !o.spectrum && !o.conjugacy && !o.subgroups;
  Json j{{"order", aut.order()}};
  std::ostringstream s;
  s << "Aut order " << aut.order();
  if (aut.order() <= kMaxIsoTypeOrder) {
    j["iso_type"] = iso_type(aut).label();
    s << " (" << iso_type(aut).label() << ")";
  }
  s << "\n";
  if (all || o.spectrum) {
    const auto sp = order_spectrum(aut);
    Json js = Json::object();
    s << "element orders:\n";
    for (const auto& [k, c] : sp) {
      js[std::to_string(k)] = c;
      s << "  order " << k << ": " << c << "\n";
    }
    j["spectrum"] = js;
  }
  if (all || o.conjugacy) {
    const auto classes = conjugacy_classes(aut);
    Json jc = Json::array();
    s << "conjugacy classes: " << classes.size() << "\n";
    for (const auto& cls : classes) {
      const Perm& rep = aut.element(cls.front());
      const std::string text = format_perm(rep, lab);
      jc.push_back(Json{{"size", cls.size()}, {"element_order", element_order(rep)}, {"representative", text}});
      s << "  size " << cls.size() << ", order " << element_order(rep) << ", e.g. " << text << "\n";
    }
    j["conjugacy_classes"] = jc;
  }
  if (all || o.subgroups) {
    const auto subs = enumerate_subgroups(aut);
    std::map<IsoType, std::size_t> per_type;
    Json jl = Json::array();
    for (const auto& rec : subs) {
      ++per_type[rec.iso_type];
      Json gens = Json::array();
      const PermGroup sub = subgroup_group(aut, rec);
      for (const Perm& p : sub.generators()) gens.push_back(format_perm(p, lab));
      jl.push_back(Json{{"order", rec.order}, {"iso_type", rec.iso_type.label()}, {"generators", gens}});
    }
    Json jt = Json::object();
    s << "subgroups: " << subs.size() << "\n";
    for (const auto& [t, c] : per_type) {
      jt[t.label()] = c;
      s << "  " << t.label() << " (order " << t.group_order() << "): " << c << "\n";
    }
    j["subgroup_types"] = jt;
    j["subgroups"] = jl;
  }
  return o.format == "machine" ? j.dump(2) + "\n" : s.str();
}

inline std::string render(const Options& o, const CertificateReport& rep) {
  return o.format == "machine" ? format_machine(rep) : format_text(rep);
}

/// Parses argv and runs one command. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Machine-checked symmetry certificate for the Heawood graph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
  app.add_option("--labeling", o.labeling, "Vertex labels for dumped cycles and permutations")
      ->check(CLI::IsMember({"figure1", "derived12"}));
  app.add_option("--graph", o.graph_path, "Edge-list file to check instead of the Heawood graph");
  app.add_option("--withhold", o.withhold, "Axiom ids to withhold from the classification (repeatable)");

  auto* check = app.add_subcommand("check", "Run one check (K1..K16) or all");
  check->add_option("id", o.check_id, "Check id or 'all'")->required();
  auto* all = app.add_subcommand("all", "Run every check");
  auto* classify = app.add_subcommand("classify", "Run all checks and replay the elimination");
  auto* dump = app.add_subcommand("dump", "Dump computed objects");
  dump->require_subcommand(1);
  dump->fallthrough();
  auto* dump_c = dump->add_subcommand("cycles", "List cycles of one length");
  dump_c->add_option("--length", o.cycle_length, "Cycle length")->required();
  auto* dump_grp = dump->add_subcommand("group", "Automorphism group data");
  dump_grp->add_flag("--spectrum", o.spectrum, "Element order histogram");
  dump_grp->add_flag("--conjugacy", o.conjugacy, "Conjugacy classes");
  dump_grp->add_flag("--subgroups", o.subgroups, "Subgroup census");
  auto* dump_g = dump->add_subcommand("graph", "Edge list and digest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  int code = kOk;
  std::string text;
  try {
    for (const auto& a : o.withhold)
      if (!Certifier::is_axiom_id(a)) throw InputError("unknown axiom id '" + a + "'");
    if (check->parsed() && o.check_id != "all" && !Certifier::is_check_id(o.check_id))
      throw InputError("unknown check id '" + o.check_id + "'");

    const SimpleGraph g = load_graph(o);
    if (check->parsed() || all->parsed() || classify->parsed()) {
      Certifier cert(g, std::set<std::string>(o.withhold.begin(), o.withhold.end()));
      CertificateReport rep;
      if (classify->parsed()) {
        rep = cert.classify();
      } else if (all->parsed() || o.check_id == "all") {
        rep = cert.run_all();
      } else {
        rep.graph_digest = graph_digest(g);
        rep.checks.push_back(cert.run_check(o.check_id));
      }
      code = rep.all_checks_verified() ? kOk : kCheckFailed;
      text = render(o, rep);
    } else {
      const LabelingMap lab = load_labeling(o, g);
      if (dump_c->parsed()) text = dump_cycles(o, g, lab);
      if (dump_grp->parsed()) text = dump_group(o, g, lab);
      if (dump_g->parsed()) text = dump_graph(o, g, lab);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
    f << text;
  }
  return code;
}

}  // namespace heawood::cli
