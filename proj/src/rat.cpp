#include "groupfn/rat.hpp"

#include <cctype>

namespace groupfn {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view s) {
  const auto slash = s.find('/');
  std::string_view num_part = s.substr(0, slash);
  if (!valid_integer_token(num_part)) return std::nullopt;
  mpz_class num(std::string(num_part), 10);
  if (slash == std::string_view::npos) return Rat(std::move(num));
  std::string_view den_part = s.substr(slash + 1);
  if (!valid_integer_token(den_part)) return std::nullopt;
  mpz_class den(std::string(den_part), 10);
  if (sgn(den) == 0) return std::nullopt;
  return Rat(num, den);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow2(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rat(std::move(p)) : Rat(mpz_class(1), p);
}

}  // namespace groupfn
