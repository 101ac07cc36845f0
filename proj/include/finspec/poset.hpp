#pragma once

/**
 * @file poset.hpp
 * @brief Finite partial orders standing for specialization orders of
 *        spectral spaces, with a line-oriented ingestion format.
 *
 * Orientation convention, fixed once for the whole library: p <= q means
 * p is contained in q, i.e. q is a specialization of p (q lies in the
 * closure of {p} under the Zariski topology).
 */

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finspec/errors.hpp"

namespace finspec {

class SpectralPoset {
 public:
  SpectralPoset(std::size_t n, std::vector<bool> leq,
                std::vector<std::string> labels = {})
      : n_(n), leq_(std::move(leq)), labels_(std::move(labels)) {
    if (leq_.size() != n_ * n_) throw Error("order relation has wrong shape");
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (std::size_t i = 0; i < n_; ++i)
        labels_.push_back("p" + std::to_string(i));
    }
    if (labels_.size() != n_) throw Error("label list has wrong length");
    for (std::size_t i = 0; i < n_; ++i)
      if (!leq_[i * n_ + i]) throw Error("order is not reflexive");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && leq_[i * n_ + j] && leq_[j * n_ + i])
          throw Error("order is not antisymmetric");
        if (!leq_[i * n_ + j]) continue;
        for (std::size_t k = 0; k < n_; ++k)
          if (leq_[j * n_ + k] && !leq_[i * n_ + k])
            throw Error("order is not transitive");
      }
  }

  /// Builds the reflexive-transitive closure of the edges i < j,
  /// rejecting cycles.
  static SpectralPoset from_edges(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
      std::vector<std::string> labels = {}) {
    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
    for (auto [i, j] : edges) {
      if (i >= n || j >= n) throw ParseError("poset edge index out of range");
      if (i == j) throw ParseError("poset has a reflexive strict edge");
      leq[i * n + j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq[i * n + j] && leq[j * n + i])
          throw ParseError("poset edges contain a cycle through " +
                           std::to_string(i) + " and " + std::to_string(j));
    return SpectralPoset(n, std::move(leq), std::move(labels));
  }

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool is_maximal(std::size_t p) const {
    for (std::size_t q = 0; q < n_; ++q)
      if (q != p && leq(p, q)) return false;
    return true;
  }
  bool is_minimal(std::size_t p) const {
    for (std::size_t q = 0; q < n_; ++q)
      if (q != p && leq(q, p)) return false;
    return true;
  }
  bool has_nontrivial_order() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && leq(i, j)) return true;
    return false;
  }

  SpectralPoset dual() const {
    std::vector<bool> d(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) d[i * n_ + j] = leq(j, i);
    return SpectralPoset(n_, std::move(d), labels_);
  }

  /// Labels are ignored; only the order matters.
  bool operator==(const SpectralPoset& o) const {
    return n_ == o.n_ && leq_ == o.leq_;
  }
  bool operator!=(const SpectralPoset& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  std::vector<bool> leq_;
  std::vector<std::string> labels_;
};

/// Parses the poset text format: first line `points: n`, then one
/// `i < j` edge per line.  Blank lines and lines starting with `#` are
/// skipped; the transitive closure is applied and cycles are rejected.
inline SpectralPoset parse_poset(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool have_points = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::istringstream ls(line);
    if (!have_points) {
      std::string head;
      ls >> head;
      if (head != "points:")
        throw ParseError("poset line " + std::to_string(lineno) +
                         ": expected `points: n`");
      if (!(ls >> n))
        throw ParseError("poset line " + std::to_string(lineno) +
                         ": missing point count");
      have_points = true;
      continue;
    }
    std::size_t i, j;
    std::string rel;
    if (!(ls >> i >> rel >> j) || rel != "<")
      throw ParseError("poset line " + std::to_string(lineno) +
                       ": expected `i < j`");
    edges.emplace_back(i, j);
  }
  if (!have_points) throw ParseError("poset file is missing `points: n`");
  return SpectralPoset::from_edges(n, edges);
}

inline SpectralPoset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

// Small stock posets used by the test corpus.

inline SpectralPoset chain_poset(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return SpectralPoset::from_edges(k, e);
}

inline SpectralPoset antichain_poset(std::size_t k) {
  return SpectralPoset::from_edges(k, {});
}

/// Zigzag order 0 < 1 > 2 < 3 > ...
inline SpectralPoset fence_poset(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (i % 2 == 0)
      e.emplace_back(i, i + 1);
    else
      e.emplace_back(i + 1, i);
  }
  return SpectralPoset::from_edges(k, e);
}

/// Rooted tree given by parent < child edges; parents[i] is the parent
/// of point i+1.
inline SpectralPoset tree_poset(const std::vector<std::size_t>& parents) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < parents.size(); ++i)
    e.emplace_back(parents[i], i + 1);
  return SpectralPoset::from_edges(parents.size() + 1, e);
}

inline SpectralPoset diamond_poset() {
  return SpectralPoset::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace finspec
