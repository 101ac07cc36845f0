#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative unital rings given by explicit Cayley tables.
 *
 * Elements are indices 0..size-1 into addition and multiplication tables.
 * A FiniteRing is an immutable value: copies share the tables, so passing
 * rings around is cheap and thread-safe.
 */

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finspec/errors.hpp"

namespace finspec {

/// Element of a finite ring, as an index into its tables.
using Elem = std::uint16_t;

class FiniteRing {
 public:
  /// Builds a ring from explicit tables (row-major, size*size entries).
  /// Checks totality, commutativity of both operations, identities,
  /// additive inverses and zero != one for nontrivial sizes.  The O(n^3)
  /// laws (associativity, distributivity) are checked separately by
  /// verify_ring_axioms.
  FiniteRing(std::size_t size, std::vector<Elem> add_table,
             std::vector<Elem> mul_table, Elem zero, Elem one,
             std::string label) {
    if (size == 0) throw BoundError("ring must have at least one element");
    if (size > 65535) throw BoundError("ring size exceeds element type");
    if (add_table.size() != size * size || mul_table.size() != size * size)
      throw Error("Cayley table has wrong shape for ring " + label);
    auto d = std::make_shared<Data>();
    d->size = size;
    d->add = std::move(add_table);
    d->mul = std::move(mul_table);
    d->zero = zero;
    d->one = one;
    d->label = std::move(label);
    for (Elem v : d->add)
      if (v >= size) throw Error("addition table not closed: " + d->label);
    for (Elem v : d->mul)
      if (v >= size) throw Error("multiplication table not closed: " + d->label);
    if (zero >= size || one >= size)
      throw Error("identity index out of range: " + d->label);
    if (size > 1 && zero == one)
      throw Error("zero equals one in a nontrivial ring: " + d->label);
    for (std::size_t a = 0; a < size; ++a) {
      if (d->add[a * size + zero] != a)
        throw Error("zero is not an additive identity: " + d->label);
      if (d->mul[a * size + one] != a)
        throw Error("one is not a multiplicative identity: " + d->label);
      for (std::size_t b = a; b < size; ++b) {
        if (d->add[a * size + b] != d->add[b * size + a])
          throw Error("addition is not commutative: " + d->label);
        if (d->mul[a * size + b] != d->mul[b * size + a])
          throw Error("multiplication is not commutative: " + d->label);
      }
    }
    d->neg.assign(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < size; ++b)
        if (d->add[a * size + b] == zero) {
          d->neg[a] = static_cast<Elem>(b);
          found = true;
          break;
        }
      if (!found) throw Error("element without additive inverse: " + d->label);
    }
    data_ = std::move(d);
  }

  std::size_t size() const { return data_->size; }
  Elem zero() const { return data_->zero; }
  Elem one() const { return data_->one; }
  const std::string& label() const { return data_->label; }
  bool is_trivial() const { return data_->size == 1; }

  Elem add(Elem a, Elem b) const { return data_->add[a * data_->size + b]; }
  Elem mul(Elem a, Elem b) const { return data_->mul[a * data_->size + b]; }
  Elem neg(Elem a) const { return data_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem acc = one();
    Elem base = a;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  /// True when the two values share the same underlying tables.
  bool same_object(const FiniteRing& o) const { return data_ == o.data_; }

  /// Structural equality; labels are ignored.
  bool operator==(const FiniteRing& o) const {
    if (data_ == o.data_) return true;
    return data_->size == o.data_->size && data_->zero == o.data_->zero &&
           data_->one == o.data_->one && data_->add == o.data_->add &&
           data_->mul == o.data_->mul;
  }
  bool operator!=(const FiniteRing& o) const { return !(*this == o); }

  /// Returns a copy of this ring with a different label.
  FiniteRing with_label(std::string label) const {
    FiniteRing r = *this;
    auto d = std::make_shared<Data>(*data_);
    d->label = std::move(label);
    r.data_ = std::move(d);
    return r;
  }

 private:
  struct Data {
    std::size_t size = 0;
    std::vector<Elem> add, mul, neg;
    Elem zero = 0, one = 0;
    std::string label;
  };
  std::shared_ptr<const Data> data_;
};

/// Witness for a failed ring law, as a printable description.
inline std::optional<std::string> find_ring_axiom_violation(
    const FiniteRing& r) {
  const std::size_t n = r.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return "(+ assoc) at " + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return "(* assoc) at " + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return "(distrib) at " + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c);
      }
  return std::nullopt;
}

/// Full O(n^3) law check; callers gate it by size (kAxiomCheckBound).
inline bool verify_ring_axioms(const FiniteRing& r) {
  return !find_ring_axiom_violation(r).has_value();
}

/// Canonical image of an integer: k times the ring identity.
inline Elem int_image(const FiniteRing& r, long long k) {
  bool negate = k < 0;
  std::uint64_t m = negate ? static_cast<std::uint64_t>(-(k + 1)) + 1
                           : static_cast<std::uint64_t>(k);
  Elem acc = r.zero();
  Elem base = r.one();
  while (m > 0) {
    if (m & 1) acc = r.add(acc, base);
    base = r.add(base, base);
    m >>= 1;
  }
  return negate ? r.neg(acc) : acc;
}

inline bool is_unit(const FiniteRing& r, Elem a) {
  for (Elem b = 0; b < r.size(); ++b)
    if (r.mul(a, b) == r.one()) return true;
  return false;
}

/// Multiplicative inverse of a unit, if any.
inline std::optional<Elem> unit_inverse(const FiniteRing& r, Elem a) {
  for (Elem b = 0; b < r.size(); ++b)
    if (r.mul(a, b) == r.one()) return b;
  return std::nullopt;
}

/// Nontrivial and every nonzero element invertible.
inline bool is_field(const FiniteRing& r) {
  if (r.is_trivial()) return false;
  for (Elem a = 0; a < r.size(); ++a)
    if (a != r.zero() && !is_unit(r, a)) return false;
  return true;
}

/// Nontrivial and without zero divisors.
inline bool is_integral_domain(const FiniteRing& r) {
  if (r.is_trivial()) return false;
  for (Elem a = 0; a < r.size(); ++a) {
    if (a == r.zero()) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (b == r.zero()) continue;
      if (r.mul(a, b) == r.zero()) return false;
    }
  }
  return true;
}

namespace detail {

inline std::string join_elems(const std::vector<Elem>& v,
                              std::size_t max_shown = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < max_shown; ++i) {
    if (i) os << ",";
    os << v[i];
  }
  if (v.size() > max_shown) os << ",...";
  return os.str();
}

}  // namespace detail

}  // namespace finspec
