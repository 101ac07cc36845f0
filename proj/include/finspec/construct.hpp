#pragma once

/**
 * @file construct.hpp
 * @brief Ring constructors: Z/n, direct products, polynomial quotients,
 *        Galois fields and idempotent corner rings.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finspec/hom.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// The ring of integers modulo n; element i is the residue i.
inline FiniteRing ring_zmod(std::size_t n,
                            std::size_t max_size = kDefaultMaxRingSize) {
  if (n == 0) throw BoundError("Z/0 is not a finite ring");
  if (n > max_size)
    throw BoundError("Z/" + std::to_string(n) + " exceeds size bound " +
                     std::to_string(max_size));
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing(n, std::move(add), std::move(mul), 0,
                    n == 1 ? 0 : 1, "Z/" + std::to_string(n));
}

namespace detail {

inline std::string product_factor_label(const std::string& l) {
  return l.find(" x ") == std::string::npos ? l : "(" + l + ")";
}

}  // namespace detail

/// Direct product of several rings.  Indices are mixed-radix with the
/// first factor varying slowest, so pairs encode as ia*|B|+ib.
struct MultiProduct {
  FiniteRing ring;
  std::vector<FiniteRing> factors;
  std::vector<std::size_t> stride;

  Elem encode(const std::vector<Elem>& comps) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      idx += comps[i] * stride[i];
    return static_cast<Elem>(idx);
  }
  std::vector<Elem> decode(Elem x) const {
    std::vector<Elem> comps(factors.size());
    std::size_t rest = x;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      comps[i] = static_cast<Elem>(rest / stride[i]);
      rest %= stride[i];
    }
    return comps;
  }
  Elem component(Elem x, std::size_t i) const {
    return static_cast<Elem>(x / stride[i] % factors[i].size());
  }
  RingHom projection(std::size_t i) const {
    std::vector<Elem> m(ring.size());
    for (std::size_t x = 0; x < ring.size(); ++x)
      m[x] = component(static_cast<Elem>(x), i);
    return RingHom(ring, factors[i], std::move(m));
  }
};

inline MultiProduct ring_product_many(
    std::vector<FiniteRing> factors,
    std::size_t max_size = kDefaultMaxRingSize) {
  if (factors.empty()) {
    FiniteRing triv = ring_zmod(1, max_size);
    return MultiProduct{triv, {}, {}};
  }
  if (factors.size() == 1)
    return MultiProduct{factors[0], {factors[0]}, {1}};
  std::size_t n = 1;
  for (const FiniteRing& f : factors) {
    if (f.size() > max_size / n)
      throw BoundError("product ring exceeds size bound " +
                       std::to_string(max_size));
    n *= f.size();
  }
  const std::size_t k = factors.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;)
    stride[i - 1] = stride[i] * factors[i].size();
  std::vector<Elem> comps(k), lcomp(k), rcomp(k);
  auto enc = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx += c[i] * stride[i];
    return idx;
  };
  auto dec = [&](std::size_t x, std::vector<Elem>& c) {
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<Elem>(x / stride[i]);
      x %= stride[i];
    }
  };
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    dec(a, lcomp);
    for (std::size_t b = 0; b < n; ++b) {
      dec(b, rcomp);
      for (std::size_t i = 0; i < k; ++i)
        comps[i] = factors[i].add(lcomp[i], rcomp[i]);
      add[a * n + b] = static_cast<Elem>(enc(comps));
      for (std::size_t i = 0; i < k; ++i)
        comps[i] = factors[i].mul(lcomp[i], rcomp[i]);
      mul[a * n + b] = static_cast<Elem>(enc(comps));
    }
  }
  for (std::size_t i = 0; i < k; ++i) comps[i] = factors[i].zero();
  Elem zero = static_cast<Elem>(enc(comps));
  for (std::size_t i = 0; i < k; ++i) comps[i] = factors[i].one();
  Elem one = static_cast<Elem>(enc(comps));
  std::string label = detail::product_factor_label(factors[0].label());
  for (std::size_t i = 1; i < k; ++i)
    label += " x " + detail::product_factor_label(factors[i].label());
  FiniteRing ring(n, std::move(add), std::move(mul), zero, one,
                  std::move(label));
  return MultiProduct{std::move(ring), std::move(factors), std::move(stride)};
}

struct RingProduct {
  FiniteRing ring;
  RingHom first, second;
};

/// Binary product with its two canonical projections.
inline RingProduct ring_product(const FiniteRing& a, const FiniteRing& b,
                                std::size_t max_size = kDefaultMaxRingSize) {
  MultiProduct p = ring_product_many({a, b}, max_size);
  return RingProduct{p.ring, p.projection(0), p.projection(1)};
}

namespace detail {

/// Renders a monic coefficient vector (constant term first) as a
/// polynomial in x with coefficients shown as element indices.
inline std::string poly_to_string(const std::vector<Elem>& f, Elem zero,
                                  Elem one) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == zero && !(i == 0 && out.empty())) continue;
    if (!out.empty()) out += "+";
    const bool coeff_shown = i == 0 || f[i] != one;
    if (coeff_shown) out += std::to_string(f[i]);
    if (i >= 1) {
      if (coeff_shown) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace detail

/// Quotient of r[x] by a monic polynomial, as coefficient vectors of
/// length deg(f).  Coefficient i of an element index is digit i base
/// |r|, constant term least significant.
inline FiniteRing ring_poly_quotient(
    const FiniteRing& r, const std::vector<Elem>& f,
    std::size_t max_size = kDefaultMaxRingSize) {
  if (f.size() < 2) throw Error("modulus polynomial must have degree >= 1");
  if (f.back() != r.one())
    throw Error("modulus polynomial is not monic over " + r.label());
  const std::size_t d = f.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r.size() > max_size / n)
      throw BoundError("polynomial quotient exceeds size bound " +
                       std::to_string(max_size));
    n *= r.size();
  }
  auto digit = [&](std::size_t x, std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) x /= r.size();
    return static_cast<Elem>(x % r.size());
  };
  std::vector<Elem> va(d), vb(d);
  std::vector<Elem> conv(2 * d - 1);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < d; ++i) va[i] = digit(a, i);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) vb[i] = digit(b, i);
      std::size_t s = 0;
      for (std::size_t i = d; i-- > 0;) s = s * r.size() + r.add(va[i], vb[i]);
      add[a * n + b] = static_cast<Elem>(s);
      std::fill(conv.begin(), conv.end(), r.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          conv[i + j] = r.add(conv[i + j], r.mul(va[i], vb[j]));
      for (std::size_t i = 2 * d - 1; i-- > d;) {
        Elem c = conv[i];
        if (c == r.zero()) continue;
        conv[i] = r.zero();
        for (std::size_t j = 0; j < d; ++j)
          conv[i - d + j] = r.sub(conv[i - d + j], r.mul(c, f[j]));
      }
      std::size_t p = 0;
      for (std::size_t i = d; i-- > 0;) p = p * r.size() + conv[i];
      mul[a * n + b] = static_cast<Elem>(p);
    }
  }
  std::size_t zs = 0, os = 0;
  for (std::size_t i = d; i-- > 0;) {
    zs = zs * r.size() + r.zero();
    os = os * r.size() + (i == 0 ? r.one() : r.zero());
  }
  Elem zero = static_cast<Elem>(zs);
  Elem one = static_cast<Elem>(os);
  std::string label =
      r.label() + "[x]/(" + detail::poly_to_string(f, r.zero(), r.one()) + ")";
  return FiniteRing(n, std::move(add), std::move(mul), zero, one,
                    std::move(label));
}

namespace detail {

/// Remainder of monic division of a by b over Z/p (int coefficient
/// vectors, constant term first, b monic).
inline std::vector<int> polymod_zp(std::vector<int> a,
                                   const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    int lead = a.back() % p;
    std::size_t off = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[off + i] = ((a[off + i] - lead * b[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

inline bool is_zero_poly(const std::vector<int>& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

/// Irreducibility of a monic polynomial over Z/p by exhaustive scan of
/// monic divisors of degree 1..deg/2.
inline bool irreducible_zp(const std::vector<int>& f, int p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t dd = 1; dd <= d / 2; ++dd) {
    std::vector<int> g(dd + 1, 0);
    g[dd] = 1;
    while (true) {
      if (is_zero_poly(polymod_zp(f, g, p))) return false;
      std::size_t i = 0;
      while (i < dd && g[i] == p - 1) g[i++] = 0;
      if (i == dd) break;
      ++g[i];
    }
  }
  return true;
}

}  // namespace detail

inline bool is_prime_power(std::size_t q) {
  if (q < 2) return false;
  std::size_t p = q;
  for (std::size_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  while (q % p == 0) q /= p;
  return q == 1;
}

/// The field with q = p^k elements, as Z/p[x]/(f) for the least monic
/// irreducible f of degree k, where polynomials are ordered by their
/// base-p digit encoding (constant term least significant).
inline FiniteRing gf_field(std::size_t q,
                           std::size_t max_size = kDefaultMaxRingSize) {
  if (q < 2) throw Error("GF argument must be a prime power >= 2");
  std::size_t p = 0;
  for (std::size_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = q;  // q itself is prime
  std::size_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw Error("GF argument " + std::to_string(q) + " is not a prime power");
  if (q > max_size)
    throw BoundError("GF(" + std::to_string(q) + ") exceeds size bound " +
                     std::to_string(max_size));
  FiniteRing base = ring_zmod(p, max_size);
  if (k == 1) return base.with_label("GF(" + std::to_string(q) + ")");
  std::vector<int> f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (detail::irreducible_zp(f, static_cast<int>(p))) break;
    std::size_t i = 0;
    while (f[i] == static_cast<int>(p) - 1) f[i++] = 0;
    if (i == k)
      throw InvariantViolation("no irreducible polynomial found for GF(" +
                               std::to_string(q) + ")");
    ++f[i];
  }
  std::vector<Elem> fe(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fe[i] = static_cast<Elem>(f[i]);
  FiniteRing ext = ring_poly_quotient(base, fe, max_size);
  if (!is_field(ext))
    throw InvariantViolation("GF construction did not yield a field");
  return ext.with_label("GF(" + std::to_string(q) + ")");
}

/// The ring e*R on an idempotent e, with identity e, together with the
/// surjection a -> e*a.
struct CornerRing {
  FiniteRing ring;
  RingHom proj;
  std::vector<Elem> element_of;  // corner index -> element of the big ring
};

inline CornerRing corner_ring(const FiniteRing& r, Elem e) {
  if (r.mul(e, e) != e) throw Error("corner element is not idempotent");
  std::vector<Elem> elems;
  std::vector<int> index_of(r.size(), -1);
  for (Elem a = 0; a < r.size(); ++a) {
    Elem x = r.mul(e, a);
    if (index_of[x] < 0) {
      index_of[x] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<Elem>(index_of[r.add(elems[i], elems[j])]);
      mul[i * n + j] = static_cast<Elem>(index_of[r.mul(elems[i], elems[j])]);
    }
  Elem zero = static_cast<Elem>(index_of[r.zero()]);
  Elem one = static_cast<Elem>(index_of[e]);
  FiniteRing corner(n, std::move(add), std::move(mul), zero, one,
                    std::to_string(e) + "*(" + r.label() + ")");
  std::vector<Elem> proj(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    proj[a] = static_cast<Elem>(index_of[r.mul(e, a)]);
  RingHom h(r, corner, std::move(proj));
  return CornerRing{std::move(corner), std::move(h), std::move(elems)};
}

}  // namespace finspec
