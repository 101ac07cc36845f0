#pragma once

/**
 * @file corpus.hpp
 * @brief The default verification corpus: modular rings, small Galois
 *        fields, products, nilpotent examples and a family of small
 *        spectral posets.
 */

#include <fstream>
#include <string>
#include <vector>

#include "finspec/poset.hpp"
#include "finspec/theorems.hpp"

namespace finspec {

inline std::vector<CorpusSubject> default_ring_subjects() {
  std::vector<CorpusSubject> out;
  for (std::size_t n = 1; n <= 60; ++n)
    out.push_back(CorpusSubject::ring("Z/" + std::to_string(n)));
  for (std::size_t q : {2, 3, 4, 5, 8, 9})
    out.push_back(CorpusSubject::ring("GF(" + std::to_string(q) + ")"));
  for (const char* e : {
           "Z/2 x Z/2", "Z/2 x Z/3", "Z/2 x Z/4", "Z/3 x Z/3", "Z/4 x Z/9",
           "Z/6 x Z/6", "Z/2 x Z/2 x Z/2", "Z/2 x GF(4)", "Z/3 x GF(9)",
           "GF(4) x GF(4)", "Z/12 x Z/3", "Z/10 x Z/10", "Z/2 x Z/3 x Z/5",
           "GF(2) x GF(2) x GF(2) x GF(2)", "Z/4 x Z/2 x Z/9",
       })
    out.push_back(CorpusSubject::ring(e));
  for (const char* e : {
           "Z/2[x]/(x^2)", "Z/2[x]/(x^3)", "Z/3[x]/(x^2)", "Z/4[x]/(x^2)",
           "Z/2[x]/(x^2+x)", "Z/5[x]/(x^2+1)", "Z/2[x]/(x^3+x)",
       })
    out.push_back(CorpusSubject::ring(e));
  for (const char* e : {
           "Z/12/(6)", "Z/16/(8)", "Z/36/(12)", "(Z/4 x Z/4)/(2)",
       })
    out.push_back(CorpusSubject::ring(e));
  return out;
}

inline std::vector<CorpusSubject> default_poset_subjects() {
  std::vector<CorpusSubject> out;
  out.push_back(CorpusSubject::of_poset("point", antichain_poset(1)));
  for (std::size_t k = 2; k <= 5; ++k)
    out.push_back(CorpusSubject::of_poset("chain" + std::to_string(k),
                                          chain_poset(k)));
  for (std::size_t k = 2; k <= 5; ++k)
    out.push_back(CorpusSubject::of_poset("antichain" + std::to_string(k),
                                          antichain_poset(k)));
  for (std::size_t k = 3; k <= 5; ++k)
    out.push_back(CorpusSubject::of_poset("fence" + std::to_string(k),
                                          fence_poset(k)));
  out.push_back(CorpusSubject::of_poset("tree3v", tree_poset({0, 0})));
  out.push_back(CorpusSubject::of_poset("tree4star", tree_poset({0, 0, 0})));
  out.push_back(CorpusSubject::of_poset("tree4y", tree_poset({0, 1, 1})));
  out.push_back(CorpusSubject::of_poset("tree4fork", tree_poset({0, 0, 1})));
  out.push_back(
      CorpusSubject::of_poset("tree5bin", tree_poset({0, 0, 1, 1})));
  out.push_back(
      CorpusSubject::of_poset("tree5mix", tree_poset({0, 1, 1, 0})));
  out.push_back(CorpusSubject::of_poset("diamond4", diamond_poset()));
  out.push_back(CorpusSubject::of_poset(
      "npose4", SpectralPoset::from_edges(4, {{0, 2}, {1, 2}, {1, 3}})));
  out.push_back(CorpusSubject::of_poset(
      "lambda3", SpectralPoset::from_edges(3, {{0, 2}, {1, 2}})));
  return out;
}

inline std::vector<CorpusSubject> default_corpus() {
  std::vector<CorpusSubject> out = default_ring_subjects();
  for (CorpusSubject& p : default_poset_subjects())
    out.push_back(std::move(p));
  return out;
}

/// Corpus list file: one subject per line.  A line `poset <path>` loads
/// a poset file; anything else is a ring expression.  Blank lines and
/// `#` comments are skipped.
inline std::vector<CorpusSubject> load_corpus_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus list " + path);
  std::vector<CorpusSubject> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (body.rfind("poset ", 0) == 0) {
      std::string path_part = body.substr(6);
      std::size_t pb = path_part.find_first_not_of(" \t");
      path_part = pb == std::string::npos ? "" : path_part.substr(pb);
      std::ifstream pin(path_part);
      if (!pin) throw ParseError("cannot open poset file " + path_part);
      out.push_back(CorpusSubject::of_poset(path_part, parse_poset(pin)));
    } else {
      out.push_back(CorpusSubject::ring(body));
    }
  }
  return out;
}

}  // namespace finspec
