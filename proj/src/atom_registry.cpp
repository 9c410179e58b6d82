#include "groupfn/atom_registry.hpp"

#include <cstdint>
#include <cstdio>
#include <utility>

namespace groupfn {

int minpoly_sign_at(const std::vector<mpz_class>& poly, const Rat& x) {
  // Horner, exact.
  Rat acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rat(mpz_class(*it));
  return acc.sign();
}

std::shared_ptr<const AtomRegistry> AtomRegistry::make(std::vector<AtomSpec> atoms) {
  auto reg = std::shared_ptr<AtomRegistry>(new AtomRegistry());
  for (auto& a : atoms) {
    if (reg->index_.count(a.id))
      throw std::invalid_argument("atom registry: duplicate id '" + a.id + "'");
    if (a.minpoly.size() < 2)
      throw std::invalid_argument("atom '" + a.id + "': minpoly must have degree >= 1");
    const int slo = minpoly_sign_at(a.minpoly, a.bracket.lo);
    const int shi = minpoly_sign_at(a.minpoly, a.bracket.hi);
    if (slo == 0 || shi == 0 || slo == shi)
      throw std::invalid_argument("atom '" + a.id +
                                  "': minpoly must change sign across root_interval");
    reg->index_.emplace(a.id, reg->atoms_.size());
    reg->atoms_.push_back(std::move(a));
  }
  return reg;
}

std::shared_ptr<const AtomRegistry> AtomRegistry::builtin() {
  static const std::shared_ptr<const AtomRegistry> reg = make({
      {"sqrt2", {mpz_class(-2), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), "sqrt2"},
      {"sqrt3", {mpz_class(-3), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), "sqrt3"},
      {"sqrt5", {mpz_class(-5), mpz_class(0), mpz_class(1)}, QInterval(Rat(2), Rat(3)), "sqrt5"},
  });
  return reg;
}

const AtomSpec& AtomRegistry::spec(const AtomId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown atom id '" + id + "'");
  return atoms_[it->second];
}

QInterval AtomRegistry::enclose(const AtomId& id, const Rat& max_width) const {
  if (max_width.sign() <= 0) throw std::invalid_argument("enclose: width must be positive");
  const AtomSpec& a = spec(id);
  Rat lo = a.bracket.lo, hi = a.bracket.hi;
  int slo = minpoly_sign_at(a.minpoly, lo);
  while (hi - lo > max_width) {
    const Rat mid = (lo + hi) / Rat(2);
    const int sm = minpoly_sign_at(a.minpoly, mid);
    if (sm == 0)
      throw std::domain_error("atom '" + a.id + "' has a rational root; atoms must be irrational");
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return QInterval(lo, hi);
}

std::string AtomRegistry::fingerprint() const {
  std::string canon;
  for (const auto& a : atoms_) {
    canon += a.id;
    canon += '|';
    for (const auto& c : a.minpoly) {
      canon += c.get_str();
      canon += ',';
    }
    canon += a.bracket.lo.str() + ";" + a.bracket.hi.str() + "\n";
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace groupfn
