#include "bellift/padic.hpp"

#include <algorithm>

#include "bellift/errors.hpp"

namespace bellift {

std::string PadicValuation::to_string() const {
  return lower_bound_only_ ? ">=" + std::to_string(value_) : std::to_string(value_);
}

PadicInt::PadicInt(Prime p, unsigned long precision, const Int& residue)
    : p_(p), precision_(precision), modulus_(prime_power(p, precision)) {
  if (p < 2) throw Error(Errc::NotAPrime, "p must be prime");
  if (precision == 0) throw Error(Errc::InvalidArgument, "precision must be >= 1");
  residue_ = mod(residue, modulus_);
}

PadicInt PadicInt::reduce(unsigned long precision) const {
  return PadicInt(p_, std::min(precision, precision_), residue_);
}

PadicInt from_int(const Int& a, Prime p, unsigned long precision) {
  return PadicInt(p, precision, a);
}

PadicInt from_rat(const Rat& x, Prime p, unsigned long precision) {
  if (x == 0) return PadicInt(p, precision, 0);
  if (vp(x, p).value() < 0) {
    throw Error(Errc::NotPadicInteger, "denominator of " + x.get_str() + " is divisible by p");
  }
  Int modulus = prime_power(p, precision);
  Int den_inv;
  mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
  return PadicInt(p, precision, Int(x.get_num() * den_inv));
}

PadicValuation valuation(const PadicInt& x) {
  if (x.is_zero()) return PadicValuation::at_least(x.precision());
  return PadicValuation::exact(static_cast<unsigned long>(vp(x.residue(), x.prime()).value()));
}

PadicInt unit_inverse(const PadicInt& x) {
  auto v = valuation(x);
  if (!v.is_exact() || v.value() != 0) throw Error(Errc::NotAUnit, "not a p-adic unit");
  Int inv;
  mpz_invert(inv.get_mpz_t(), x.residue().get_mpz_t(), x.modulus().get_mpz_t());
  return PadicInt(x.prime(), x.precision(), inv);
}

std::vector<unsigned long> digits(const PadicInt& x) {
  std::vector<unsigned long> out;
  out.reserve(x.precision());
  Int rest = x.residue();
  for (unsigned long i = 0; i < x.precision(); ++i) {
    out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), x.prime()));
  }
  return out;
}

namespace {

void require_same_prime(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) {
    throw Error(Errc::PrimeMismatch, "operands have different primes");
  }
}

unsigned long common_precision(const PadicInt& a, const PadicInt& b) {
  require_same_prime(a, b);
  return std::min(a.precision(), b.precision());
}

}  // namespace

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  return PadicInt(a.prime(), common_precision(a, b), Int(a.residue() + b.residue()));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  return PadicInt(a.prime(), common_precision(a, b), Int(a.residue() - b.residue()));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  return PadicInt(a.prime(), common_precision(a, b), Int(a.residue() * b.residue()));
}

PadicInt operator-(const PadicInt& a) {
  return PadicInt(a.prime(), a.precision(), Int(-a.residue()));
}

PadicInt pow(const PadicInt& x, unsigned long exponent) {
  Int r;
  Int e(exponent);
  mpz_powm(r.get_mpz_t(), x.residue().get_mpz_t(), e.get_mpz_t(), x.modulus().get_mpz_t());
  return PadicInt(x.prime(), x.precision(), r);
}

std::string to_string(const PadicInt& x) {
  const auto ds = digits(x);
  const std::string p = std::to_string(x.prime());
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out += std::to_string(ds[i]);
    if (i == 1) out += "*" + p;
    if (i > 1) out += "*" + p + "^" + std::to_string(i);
    out += " + ";
  }
  out += "O(" + p + "^" + std::to_string(x.precision()) + ")";
  return out;
}

nlohmann::json to_json(const PadicInt& x) {
  return {{"p", x.prime()}, {"precision", x.precision()}, {"digits", digits(x)}};
}

PadicInt padic_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<Prime>();
  const auto precision = j.at("precision").get<unsigned long>();
  const auto ds = j.at("digits").get<std::vector<unsigned long>>();
  if (ds.size() != precision) throw Error(Errc::InvalidArgument, "digit count != precision");
  Int value = 0;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    if (*it >= p) throw Error(Errc::InvalidArgument, "digit out of range");
    value = value * p + *it;
  }
  return PadicInt(p, precision, value);
}

}  // namespace bellift
