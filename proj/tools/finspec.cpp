// Command-line front end: ring expressions and poset files in, spectra,
// topologies, pointwise localizations and verification reports out.
//
// Exit codes: 0 success, 1 parse/bound errors, 2 a falsified invariant
// (the loudest failure; CI can tell bad input from a falsified claim).

#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finspec/finspec.hpp"

namespace {

using namespace finspec;

struct GlobalOptions {
  bool json = false;
  std::size_t max_size = kDefaultMaxRingSize;
  std::uint64_t seed = 0;
};

std::string join_parts(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

SpectralPoset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poset file " + path);
  return parse_poset(in);
}

int cmd_spec(const GlobalOptions& g, const std::string& expr) {
  FiniteRing r = eval_ring_expr(expr, g.max_size);
  SpectrumListing listing = make_spectrum_listing(spec(r), expr);
  if (g.json)
    std::cout << to_json(listing).dump(2) << "\n";
  else
    print_spectrum(std::cout, listing);
  return 0;
}

int cmd_topology(const GlobalOptions& g, const std::string& expr,
                 const std::string& poset_path, const std::string& kind) {
  FiniteTopology t = [&] {
    if (!poset_path.empty()) {
      SpectralPoset p = load_poset_file(poset_path);
      if (kind == "zariski") return zariski_topology(p);
      if (kind == "flat") return flat_topology(p);
      return patch_topology(p);
    }
    Spectrum s = spec(eval_ring_expr(expr, g.max_size));
    if (kind == "zariski") return zariski_topology(s);
    if (kind == "flat") return flat_topology(s);
    return patch_topology(s);
  }();
  SpectralPoset order = specialization_order(t);
  if (g.json) {
    json j = to_json(t);
    j["kind"] = kind;
    json edges = json::array();
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t k = 0; k < order.size(); ++k)
        if (i != k && order.leq(i, k)) edges.push_back(json::array({i, k}));
    j["specialization"] = edges;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << kind << "\n";
    print_topology(std::cout, t);
    print_poset(std::cout, order);
  }
  return 0;
}

int cmd_pointwise(const GlobalOptions& g, const std::string& expr,
                  const std::vector<long long>& invert, bool invert_given) {
  FiniteRing r = eval_ring_expr(expr, g.max_size);
  std::vector<Elem> s;
  if (!invert_given) {
    for (std::size_t a = 0; a < r.size(); ++a) s.push_back(static_cast<Elem>(a));
  } else {
    for (long long v : invert) {
      if (v < 0 || static_cast<std::size_t>(v) >= r.size())
        throw ParseError("inverted element " + std::to_string(v) +
                         " is out of range for " + r.label());
      s.push_back(static_cast<Elem>(v));
    }
  }
  PointwiseLocalization l = pointwise_localization(r, s);
  if (g.json)
    std::cout << to_json(l).dump(2) << "\n";
  else
    print_pointwise(std::cout, l);
  return 0;
}

int cmd_report(const GlobalOptions& g, const std::string& expr,
               const std::string& poset_path) {
  SeparabilityReport rep =
      poset_path.empty()
          ? separability_report(eval_ring_expr(expr, g.max_size), expr)
          : separability_report(load_poset_file(poset_path), poset_path);
  if (g.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    print_report(std::cout, rep);
  return rep.consistent ? 0 : 2;
}

int cmd_corpus(const GlobalOptions& g, const std::string& list_path) {
  std::vector<CorpusSubject> subjects =
      list_path.empty() ? default_corpus() : load_corpus_list(list_path);
  CorpusOptions options;
  options.max_ring_size = g.max_size;
  options.seed = g.seed;
  CorpusReport rep = run_corpus(subjects, options);
  if (g.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    print_corpus(std::cout, rep);
  if (!rep.ok()) return 2;
  if (rep.parse_error_count > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra, spectral topologies and pointwise "
               "localizations of finite commutative rings"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit machine-readable JSON");
  app.add_option("--max-size", g.max_size, "ring size bound")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized property subsets")
      ->capture_default_str();

  std::vector<std::string> spec_expr;
  CLI::App* spec_cmd =
      app.add_subcommand("spec", "list the prime ideals of a ring");
  spec_cmd->add_option("expr", spec_expr, "ring expression")->required();
  spec_cmd->fallthrough();

  std::vector<std::string> topo_expr;
  std::string topo_poset, topo_kind;
  CLI::App* topo_cmd = app.add_subcommand(
      "topology", "open sets, separation and specialization order");
  topo_cmd->add_option("expr", topo_expr, "ring expression");
  topo_cmd->add_option("--poset", topo_poset, "poset file");
  topo_cmd->add_option("--kind", topo_kind, "zariski, flat or patch")
      ->required()
      ->check(CLI::IsMember({"zariski", "flat", "patch"}));
  topo_cmd->fallthrough();

  std::vector<std::string> pw_expr;
  std::vector<long long> pw_invert;
  CLI::App* pw_cmd = app.add_subcommand(
      "pointwise", "pointwise localization (everything by default)");
  pw_cmd->add_option("expr", pw_expr, "ring expression")->required();
  CLI::Option* invert_opt =
      pw_cmd->add_option("--invert", pw_invert, "elements to invert")
          ->delimiter(',');
  pw_cmd->fallthrough();

  std::vector<std::string> rep_expr;
  std::string rep_poset;
  CLI::App* rep_cmd =
      app.add_subcommand("report", "nine-way separability report");
  rep_cmd->add_option("expr", rep_expr, "ring expression");
  rep_cmd->add_option("--poset", rep_poset, "poset file");
  rep_cmd->fallthrough();

  std::string corpus_file;
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "run every verifier over a corpus");
  corpus_cmd->add_option("--file", corpus_file, "corpus list file");
  corpus_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spec_cmd->parsed()) return cmd_spec(g, join_parts(spec_expr));
    if (topo_cmd->parsed()) {
      if (topo_poset.empty() == topo_expr.empty())
        throw ParseError("topology needs a ring expression or --poset FILE");
      return cmd_topology(g, join_parts(topo_expr), topo_poset, topo_kind);
    }
    if (pw_cmd->parsed())
      return cmd_pointwise(g, join_parts(pw_expr), pw_invert,
                           invert_opt->count() > 0);
    if (rep_cmd->parsed()) {
      if (rep_poset.empty() == rep_expr.empty())
        throw ParseError("report needs a ring expression or --poset FILE");
      return cmd_report(g, join_parts(rep_expr), rep_poset);
    }
    if (corpus_cmd->parsed()) return cmd_corpus(g, corpus_file);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
