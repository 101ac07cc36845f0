#pragma once

/**
 * @file report_io.hpp
 * @brief Text and JSON rendering for spectra, reports and corpus runs.
 *
 * JSON objects are emitted with sorted keys, so identical inputs render
 * byte-identically.
 */

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finspec/pointwise.hpp"
#include "finspec/spectrum.hpp"
#include "finspec/theorems.hpp"
#include "finspec/topology.hpp"

namespace finspec {

using json = nlohmann::json;

// --------------------------------------------------------------------------
// Spectrum listing.

struct SpectrumListing {
  struct Prime {
    std::vector<int> members;
    std::size_t residue_field_size;
    bool operator==(const Prime& o) const {
      return members == o.members && residue_field_size == o.residue_field_size;
    }
  };
  std::string subject;
  std::size_t ring_size = 0;
  std::vector<Prime> primes;

  bool operator==(const SpectrumListing& o) const {
    return subject == o.subject && ring_size == o.ring_size &&
           primes == o.primes;
  }
};

inline SpectrumListing make_spectrum_listing(const Spectrum& s,
                                             std::string subject = "") {
  SpectrumListing out;
  out.subject = subject.empty() ? s.ring.label() : std::move(subject);
  out.ring_size = s.ring.size();
  for (const PrimeIdeal& p : s.primes) {
    SpectrumListing::Prime q;
    for (Elem a : p.ideal.elements()) q.members.push_back(a);
    q.residue_field_size = residue_field(s.ring, p).ring.size();
    out.primes.push_back(std::move(q));
  }
  return out;
}

inline json to_json(const SpectrumListing& l) {
  json primes = json::array();
  for (const auto& p : l.primes)
    primes.push_back(json{{"members", p.members},
                          {"residue_field_size", p.residue_field_size}});
  return json{{"subject", l.subject},
              {"ring_size", l.ring_size},
              {"primes", primes}};
}

inline SpectrumListing spectrum_listing_from_json(const json& j) {
  SpectrumListing out;
  out.subject = j.at("subject").get<std::string>();
  out.ring_size = j.at("ring_size").get<std::size_t>();
  for (const json& p : j.at("primes")) {
    SpectrumListing::Prime q;
    q.members = p.at("members").get<std::vector<int>>();
    q.residue_field_size = p.at("residue_field_size").get<std::size_t>();
    out.primes.push_back(std::move(q));
  }
  return out;
}

inline void print_spectrum(std::ostream& os, const SpectrumListing& l) {
  os << "subject: " << l.subject << "\n";
  os << "primes: " << l.primes.size() << "\n";
  for (std::size_t i = 0; i < l.primes.size(); ++i) {
    os << "p" << i << ": {";
    for (std::size_t k = 0; k < l.primes[i].members.size(); ++k)
      os << (k ? "," : "") << l.primes[i].members[k];
    os << "} residue field size " << l.primes[i].residue_field_size << "\n";
  }
}

// --------------------------------------------------------------------------
// Separability report.

inline const char* condition_description(const std::string& key) {
  if (key == "i") return "reduced ring absolutely flat";
  if (key == "iii") return "R -> R_p surjective at every prime";
  if (key == "iv") return "every prime maximal";
  if (key == "v") return "patch = zariski";
  if (key == "vi") return "zariski separated";
  if (key == "vii") return "every prime minimal";
  if (key == "viii") return "flat separated";
  if (key == "ix") return "patch = flat";
  return "?";
}

inline json to_json(Tri t) {
  switch (t) {
    case Tri::True:
      return true;
    case Tri::False:
      return false;
    case Tri::NA:
      return nullptr;
  }
  return nullptr;
}

inline Tri tri_from_json(const json& j) {
  if (j.is_null()) return Tri::NA;
  return j.get<bool>() ? Tri::True : Tri::False;
}

inline json to_json(const SeparabilityReport& r) {
  json conds = json::object();
  for (const auto& [k, v] : r.conditions) conds[k] = to_json(v);
  return json{{"subject", r.subject},
              {"backend", r.backend},
              {"conditions", conds},
              {"consistent", r.consistent}};
}

inline SeparabilityReport separability_report_from_json(const json& j) {
  SeparabilityReport r;
  r.subject = j.at("subject").get<std::string>();
  r.backend = j.at("backend").get<std::string>();
  const json& conds = j.at("conditions");
  for (const char* key : kSeparabilityConditions)
    r.conditions.emplace_back(key, tri_from_json(conds.at(key)));
  r.consistent = j.at("consistent").get<bool>();
  return r;
}

inline void print_report(std::ostream& os, const SeparabilityReport& r) {
  os << "subject: " << r.subject << "\n";
  os << "backend: " << r.backend << "\n";
  for (const auto& [k, v] : r.conditions) {
    std::string tag = "(" + k + ")";
    os << "  " << tag << std::string(tag.size() < 7 ? 7 - tag.size() : 1, ' ')
       << condition_description(k) << ": " << to_cstring(v) << "\n";
  }
  os << "consistent: " << (r.consistent ? "true" : "false") << "\n";
}

// --------------------------------------------------------------------------
// Stability suite and the flat-vs-Zariski comparison.

inline json to_json(const FlatZariskiComparison& c) {
  return json{{"topologies_same", c.topologies_same},
              {"all_primes_maximal", c.all_primes_maximal},
              {"consistent", c.consistent()}};
}

inline json to_json(const StabilityReport& s) {
  json claims = json::array();
  for (const auto& c : s.claims)
    claims.push_back(json{{"name", c.name},
                          {"status", to_json(c.status)},
                          {"witness", c.witness}});
  return json{{"subject", s.subject},
              {"claims", claims},
              {"all_pass", s.all_pass}};
}

inline void print_stability(std::ostream& os, const StabilityReport& s) {
  os << "subject: " << s.subject << "\n";
  for (const auto& c : s.claims) {
    os << "  " << c.name << ": " << to_cstring(c.status);
    if (!c.witness.empty()) os << " (" << c.witness << ")";
    os << "\n";
  }
  os << "all_pass: " << (s.all_pass ? "true" : "false") << "\n";
}

// --------------------------------------------------------------------------
// Pointwise localization listing.

inline json to_json(const PointwiseLocalization& l) {
  json eta = json::array();
  for (Elem a = 0; a < l.source.size(); ++a) eta.push_back(l.eta(a));
  json inv = json::array();
  for (auto [s, b] : l.inverse_of)
    inv.push_back(json{{"element", s}, {"inverse", b}});
  json kernel = json::array();
  for (Elem a : l.eta.kernel().elements()) kernel.push_back(a);
  return json{{"source", l.source.label()},
              {"source_size", l.source.size()},
              {"result", l.result.label()},
              {"result_size", l.result.size()},
              {"inverted", l.inverted},
              {"eta", eta},
              {"kernel", kernel},
              {"inverses", inv}};
}

inline void print_pointwise(std::ostream& os, const PointwiseLocalization& l) {
  os << "source: " << l.source.label() << " (size " << l.source.size()
     << ")\n";
  os << "result: " << l.result.label() << " (size " << l.result.size()
     << ")\n";
  os << "eta:";
  for (Elem a = 0; a < l.source.size(); ++a)
    os << " " << a << "->" << l.eta(a);
  os << "\n";
  os << "kernel: {";
  bool first = true;
  for (Elem a : l.eta.kernel().elements()) {
    os << (first ? "" : ",") << a;
    first = false;
  }
  os << "}\n";
  os << "inverses:";
  for (auto [s, b] : l.inverse_of) os << " " << s << "->" << b;
  os << "\n";
}

// --------------------------------------------------------------------------
// Topology listing.

inline std::string mask_to_string(Mask m, std::size_t ground) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < ground; ++x)
    if (m >> x & 1) {
      out += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
  return out + "}";
}

inline json to_json(const FiniteTopology& t) {
  json opens = json::array();
  for (Mask m : t.opens()) {
    json pts = json::array();
    for (std::size_t x = 0; x < t.ground_size(); ++x)
      if (m >> x & 1) pts.push_back(x);
    opens.push_back(pts);
  }
  return json{{"points", t.ground_size()},
              {"opens", opens},
              {"hausdorff", is_hausdorff(t)}};
}

inline void print_topology(std::ostream& os, const FiniteTopology& t) {
  os << "points: " << t.ground_size() << "\n";
  os << "opens:";
  for (Mask m : t.opens()) os << " " << mask_to_string(m, t.ground_size());
  os << "\n";
  os << "hausdorff: " << (is_hausdorff(t) ? "true" : "false") << "\n";
}

inline void print_poset(std::ostream& os, const SpectralPoset& p) {
  bool any = false;
  os << "order:";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) {
        os << " " << i << "<" << j;
        any = true;
      }
  if (!any) os << " (antichain)";
  os << "\n";
}

// --------------------------------------------------------------------------
// Corpus report.

inline json to_json(const CorpusEntryReport& e) {
  json j{{"label", e.label}, {"kind", e.kind}};
  if (!e.error.empty()) j["error"] = e.error;
  if (e.separability) j["separability"] = to_json(*e.separability);
  if (e.flat_zariski) j["flat_zariski"] = to_json(*e.flat_zariski);
  if (e.stability) j["stability_all_pass"] = e.stability->all_pass;
  if (e.pointwise_ok) j["pointwise_ok"] = *e.pointwise_ok;
  if (e.stalks_ok) j["stalks_ok"] = *e.stalks_ok;
  if (e.idempotent_generator_ok)
    j["idempotent_generator_ok"] = *e.idempotent_generator_ok;
  if (!e.violations.empty()) j["violations"] = e.violations;
  return j;
}

inline json to_json(const CorpusReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return json{{"entries", entries},
              {"ring_count", r.ring_count},
              {"poset_count", r.poset_count},
              {"parse_error_count", r.parse_error_count},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

inline void print_corpus(std::ostream& os, const CorpusReport& r) {
  for (const auto& e : r.entries) {
    os << e.kind;
    os << std::string(e.kind.size() < 6 ? 6 - e.kind.size() : 1, ' ');
    os << e.label;
    if (e.kind == "error") {
      os << "  PARSE-ERROR: " << e.error << "\n";
      continue;
    }
    os << (e.violations.empty() ? "  ok" : "  VIOLATION") << "\n";
    for (const std::string& v : e.violations) os << "    " << v << "\n";
  }
  os << "rings: " << r.ring_count << "  posets: " << r.poset_count
     << "  parse errors: " << r.parse_error_count << "\n";
  os << "violations: " << r.violations.size() << "\n";
}

}  // namespace finspec
