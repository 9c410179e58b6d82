#pragma once

#include "groupfn/rat.hpp"

#include <stdexcept>

namespace groupfn {

// Closed rational interval [lo, hi], lo <= hi.
struct QInterval {
  Rat lo;
  Rat hi;

  QInterval() = default;
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }
  static QInterval point(const Rat& v) { return QInterval(v, v); }

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
  bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend QInterval operator*(const Rat& s, const QInterval& i) {
    return s.sign() >= 0 ? QInterval(s * i.lo, s * i.hi) : QInterval(s * i.hi, s * i.lo);
  }
  QInterval shifted(const Rat& s) const { return QInterval(lo + s, hi + s); }
};

}  // namespace groupfn
