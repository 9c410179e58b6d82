#pragma once

#include "groupfn/atom_registry.hpp"
#include "groupfn/interval.hpp"
#include "groupfn/rat.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace groupfn {

// The group problem is anchored at b = 1/2 throughout.
inline const Rat& b_point() {
  static const Rat b(1, 2);
  return b;
}

struct RefinementBudgetError : std::runtime_error {
  RefinementBudgetError()
      : std::runtime_error(
            "interval refinement budget exhausted (width 2^-256); a comparison stayed "
            "sign-indeterminate, which suggests the declared atoms are not Q-linearly "
            "independent of 1") {}
};

enum class Ordering { LT, EQ, GT };

// Exact element x = c_b * b + sum_a c_a * a of the Q-subspace spanned by
// b = 1/2 and the registry's atoms. Coordinates are rationals; zero atom
// coefficients are never stored, so equality is structural and decidable.
// x is rational iff the atom part is empty, and then x = c_b / 2.
class HamelNumber {
 public:
  HamelNumber() : b_coeff_(0) {}

  // q = (2q) * b: the embedding of the rationals.
  static HamelNumber from_rational(const Rat& q) {
    HamelNumber x;
    x.b_coeff_ = Rat(2) * q;
    return x;
  }
  static HamelNumber from_integer(long z) { return from_rational(Rat(z)); }

  // coeff * atom, e.g. atom(reg, "sqrt2") is the number sqrt(2).
  static HamelNumber atom(const RegistryPtr& reg, const AtomId& id, const Rat& coeff = Rat(1));

  // The coefficient of b. This is also the additive function determined by
  // f(b) = 1, f(a) = 0 on every atom, evaluated at *this.
  const Rat& b_coefficient() const { return b_coeff_; }
  const std::map<AtomId, Rat>& atom_coefficients() const { return atom_coeffs_; }
  const RegistryPtr& registry() const { return reg_; }

  bool is_rational() const { return atom_coeffs_.empty(); }
  Rat rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value() on an irrational number");
    return b_coeff_ / Rat(2);
  }

  friend HamelNumber operator+(const HamelNumber& x, const HamelNumber& y);
  friend HamelNumber operator-(const HamelNumber& x, const HamelNumber& y);
  HamelNumber operator-() const { return Rat(-1) * *this; }
  friend HamelNumber operator*(const Rat& s, const HamelNumber& x);

  // Structural equality; coincides with real equality under the registry's
  // independence assumption. Mixing registries throws.
  friend bool operator==(const HamelNumber& x, const HamelNumber& y);

  // Rational interval of width <= eps containing the real value, computed
  // from atom enclosures with the width budget split evenly across terms.
  QInterval approx(const Rat& eps) const;

  // Exact for rational values; otherwise refines enclosures until the answer
  // is determined. Throws RefinementBudgetError past width 2^-256.
  mpz_class floor_real() const;
  Ordering compare_to_rational(const Rat& q) const;

  // -1 / 0 / +1; 0 only for the exact zero.
  int sign_real() const;

  double to_double() const { return approx(Rat(1, 1L << 40)).midpoint().to_double(); }

  std::string str() const;  // debug form, e.g. "3/2*b + -1/3*sqrt2"

 private:
  void set_atom_coeff(const AtomId& id, const Rat& c) {
    if (c.is_zero())
      atom_coeffs_.erase(id);
    else
      atom_coeffs_[id] = c;
  }
  static RegistryPtr merged_registry(const HamelNumber& x, const HamelNumber& y);

  Rat b_coeff_;
  std::map<AtomId, Rat> atom_coeffs_;  // no zero entries
  RegistryPtr reg_;                    // null only while atom_coeffs_ is empty
};

inline Ordering compare(const HamelNumber& x, const HamelNumber& y) {
  const HamelNumber d = x - y;
  const int s = d.sign_real();
  return s < 0 ? Ordering::LT : s > 0 ? Ordering::GT : Ordering::EQ;
}

// floor and fractional part of the real value: x = z + r with r in [0, 1).
struct ModOneSplit {
  mpz_class integer_part;
  HamelNumber fractional_part;
};
ModOneSplit split_mod_one(const HamelNumber& x);

}  // namespace groupfn
