#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace groupfn {

// Exact rational in canonical form: denominator > 0, gcd(|num|, den) = 1.
// Canonical form is an invariant of every constructor and operator, so
// operator== is structural and coincides with real equality.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    require_nonzero_den();
    v_.canonicalize();
  }
  explicit Rat(mpz_class z) : v_(std::move(z)) {}
  explicit Rat(mpq_class q) : v_(std::move(q)) {
    require_nonzero_den();
    v_.canonicalize();
  }

  // Accepts "p/q" or a bare integer "p"; rejects everything else.
  static std::optional<Rat> parse(std::string_view s);

  // Canonical "p/q"; the denominator is always printed ("3" -> "3/1").
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_odd_integer() const { return is_integer() && mpz_odd_p(v_.get_num().get_mpz_t()); }
  bool is_even_integer() const { return is_integer() && mpz_even_p(v_.get_num().get_mpz_t()); }
  int sign() const { return sgn(v_); }

  // Largest integer <= *this, exact.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  // *this - floor(*this), in [0, 1).
  Rat frac() const { return *this - Rat(floor()); }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const { return v_.get_d(); }

  // 2^k for any integer k (negative k gives 1/2^|k|).
  static Rat pow2(long k);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  void require_nonzero_den() {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
  }
  mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace groupfn
