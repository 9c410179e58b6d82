#include "groupfn/hamel.hpp"

#include <utility>

namespace groupfn {

namespace {
// Refinement stops once interval widths reach 2^-256.
const int kMaxRefineBits = 256;
}  // namespace

HamelNumber HamelNumber::atom(const RegistryPtr& reg, const AtomId& id, const Rat& coeff) {
  if (!reg) throw std::invalid_argument("atom: null registry");
  reg->spec(id);  // validates the id
  HamelNumber x;
  if (!coeff.is_zero()) {
    x.atom_coeffs_.emplace(id, coeff);
    x.reg_ = reg;
  }
  return x;
}

RegistryPtr HamelNumber::merged_registry(const HamelNumber& x, const HamelNumber& y) {
  if (x.reg_ && y.reg_ && x.reg_ != y.reg_) throw RegistryMismatch();
  return x.reg_ ? x.reg_ : y.reg_;
}

HamelNumber operator+(const HamelNumber& x, const HamelNumber& y) {
  HamelNumber r;
  r.reg_ = HamelNumber::merged_registry(x, y);
  r.b_coeff_ = x.b_coeff_ + y.b_coeff_;
  r.atom_coeffs_ = x.atom_coeffs_;
  for (const auto& [id, c] : y.atom_coeffs_) {
    auto it = r.atom_coeffs_.find(id);
    if (it == r.atom_coeffs_.end()) {
      r.atom_coeffs_.emplace(id, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.atom_coeffs_.erase(it);
    }
  }
  if (r.atom_coeffs_.empty()) r.reg_.reset();
  return r;
}

HamelNumber operator-(const HamelNumber& x, const HamelNumber& y) { return x + Rat(-1) * y; }

HamelNumber operator*(const Rat& s, const HamelNumber& x) {
  HamelNumber r;
  r.b_coeff_ = s * x.b_coeff_;
  if (!s.is_zero()) {
    for (const auto& [id, c] : x.atom_coeffs_) r.atom_coeffs_.emplace(id, s * c);
    if (!r.atom_coeffs_.empty()) r.reg_ = x.reg_;
  }
  return r;
}

bool operator==(const HamelNumber& x, const HamelNumber& y) {
  HamelNumber::merged_registry(x, y);  // reject cross-registry comparison
  return x.b_coeff_ == y.b_coeff_ && x.atom_coeffs_ == y.atom_coeffs_;
}

QInterval HamelNumber::approx(const Rat& eps) const {
  if (eps.sign() <= 0) throw std::invalid_argument("approx: eps must be positive");
  QInterval acc = QInterval::point(b_coeff_ * b_point());
  if (atom_coeffs_.empty()) return acc;
  const Rat per_term = eps / Rat(static_cast<long>(atom_coeffs_.size()) + 1);
  for (const auto& [id, c] : atom_coeffs_) {
    const Rat atom_width = per_term / c.abs();
    acc = acc + c * reg_->enclose(id, atom_width);
  }
  return acc;
}

mpz_class HamelNumber::floor_real() const {
  if (is_rational()) return rational_value().floor();
  Rat w(1, 2);
  for (int k = 1; k <= kMaxRefineBits; ++k, w = w / Rat(2)) {
    const QInterval i = approx(w);
    mpz_class flo = i.lo.floor(), fhi = i.hi.floor();
    if (flo == fhi) return flo;
  }
  throw RefinementBudgetError();
}

Ordering HamelNumber::compare_to_rational(const Rat& q) const {
  if (is_rational()) {
    const Rat v = rational_value();
    return v < q ? Ordering::LT : v > q ? Ordering::GT : Ordering::EQ;
  }
  Rat w(1, 2);
  for (int k = 1; k <= kMaxRefineBits; ++k, w = w / Rat(2)) {
    const QInterval i = approx(w);
    if (q < i.lo) return Ordering::GT;
    if (q > i.hi) return Ordering::LT;
  }
  throw RefinementBudgetError();
}

int HamelNumber::sign_real() const {
  switch (compare_to_rational(Rat(0))) {
    case Ordering::LT: return -1;
    case Ordering::GT: return 1;
    default: return 0;
  }
}

std::string HamelNumber::str() const {
  std::string s = b_coeff_.str() + "*b";
  for (const auto& [id, c] : atom_coeffs_) s += " + " + c.str() + "*" + id;
  return s;
}

ModOneSplit split_mod_one(const HamelNumber& x) {
  mpz_class z = x.floor_real();
  HamelNumber r = x - HamelNumber::from_rational(Rat(z));
  return {std::move(z), std::move(r)};
}

}  // namespace groupfn
