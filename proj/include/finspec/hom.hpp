#pragma once

/**
 * @file hom.hpp
 * @brief Unital ring homomorphisms between finite rings.
 */

#include <utility>
#include <vector>

#include "finspec/ideal.hpp"
#include "finspec/ring.hpp"

namespace finspec {

class RingHom {
 public:
  /// Total map given by an image array; checks 0->0, 1->1 and
  /// preservation of + and * over all pairs.
  RingHom(FiniteRing source, FiniteRing target, std::vector<Elem> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {
    if (map_.size() != source_.size())
      throw Error("hom image array has wrong length");
    for (Elem v : map_)
      if (v >= target_.size()) throw Error("hom image out of range");
    if (map_[source_.zero()] != target_.zero())
      throw Error("hom does not preserve zero");
    if (map_[source_.one()] != target_.one())
      throw Error("hom does not preserve one");
    for (Elem a = 0; a < source_.size(); ++a)
      for (Elem b = a; b < source_.size(); ++b) {
        if (map_[source_.add(a, b)] != target_.add(map_[a], map_[b]))
          throw Error("hom does not preserve addition");
        if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
          throw Error("hom does not preserve multiplication");
      }
  }

  const FiniteRing& source() const { return source_; }
  const FiniteRing& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

  bool is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (Elem v : map_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    std::size_t n = 0;
    for (Elem v : map_)
      if (!hit[v]) {
        hit[v] = true;
        ++n;
      }
    return n == target_.size();
  }

  bool is_bijective() const {
    return source_.size() == target_.size() && is_injective();
  }

  Ideal kernel() const {
    std::vector<bool> m(source_.size(), false);
    for (Elem a = 0; a < source_.size(); ++a)
      m[a] = map_[a] == target_.zero();
    return Ideal(source_, std::move(m));
  }

  /// Preimage of an ideal of the target.
  std::vector<bool> pullback_mask(const Ideal& i) const {
    std::vector<bool> m(source_.size(), false);
    for (Elem a = 0; a < source_.size(); ++a) m[a] = i.contains(map_[a]);
    return m;
  }

  static RingHom identity(const FiniteRing& r) {
    std::vector<Elem> m(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) m[a] = static_cast<Elem>(a);
    return RingHom(r, r, std::move(m));
  }

  /// Equal as maps between structurally equal rings.
  bool operator==(const RingHom& o) const {
    return map_ == o.map_ && source_ == o.source_ && target_ == o.target_;
  }
  bool operator!=(const RingHom& o) const { return !(*this == o); }

 private:
  FiniteRing source_, target_;
  std::vector<Elem> map_;
};

/// g after f; requires f.target and g.source to agree structurally.
inline RingHom compose(const RingHom& g, const RingHom& f) {
  if (!(f.target() == g.source()))
    throw Error("hom composition domain mismatch");
  std::vector<Elem> m(f.source().size());
  for (Elem a = 0; a < f.source().size(); ++a) m[a] = g(f(a));
  return RingHom(f.source(), g.target(), std::move(m));
}

}  // namespace finspec
