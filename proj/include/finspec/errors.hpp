#pragma once

/**
 * @file errors.hpp
 * @brief Error types and size limits shared across the library.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace finspec {

/// Default cap on the number of elements of a constructed ring.
inline constexpr std::size_t kDefaultMaxRingSize = 4096;

/// Exhaustive O(n^3) axiom checks are only run up to this size.
inline constexpr std::size_t kAxiomCheckBound = 64;

/// Explicit open-set families are only built for ground sets this small.
inline constexpr std::size_t kMaxTopologyPoints = 16;

/// Subset-scan oracles (2^n) are limited to this ring size.
inline constexpr std::size_t kOracleSubsetBound = 16;

/// Node budget for the homomorphism backtracking search.
inline constexpr std::uint64_t kDefaultHomSearchBudget = 1'000'000;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size bound was exceeded.
struct BoundError : Error {
  using Error::Error;
};

/// Malformed input text (ring expressions, poset files, corpus lists).
struct ParseError : Error {
  using Error::Error;
};

/// The homomorphism search exceeded its node budget.
struct SearchBudgetError : Error {
  using Error::Error;
};

/// A verified mathematical invariant failed.  This is the loudest failure
/// the library can produce: it means either an implementation bug or a
/// falsified claim, never bad user input.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace finspec
