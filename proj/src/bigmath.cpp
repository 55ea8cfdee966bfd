#include "bellift/bigmath.hpp"

#include <array>

#include "bellift/errors.hpp"

namespace bellift {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

long Valuation::value() const {
  if (infinite_) throw Error(Errc::InvalidArgument, "valuation is infinite");
  return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return a.value_ <=> b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Valuation vp(const Int& a, Prime p) {
  if (a == 0) return Valuation::infinity();
  Int rest;
  Int prime(p);
  auto count = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t());
  return Valuation(static_cast<long>(count));
}

Valuation vp(const Rat& x, Prime p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(vp(Int(x.get_num()), p).value() - vp(Int(x.get_den()), p).value());
}

unsigned long digit_sum(unsigned long n, Prime p) {
  unsigned long s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

unsigned long vp_factorial(unsigned long n, Prime p) {
  return (n - digit_sum(n, p)) / (p - 1);
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int falling(const Int& a, unsigned long n) {
  Int r = 1;
  for (unsigned long i = 0; i < n; ++i) {
    r *= a - i;
    if (r == 0) break;
  }
  return r;
}

Int binom(const Int& n, unsigned long k) {
  if (n >= 0 && n.fits_ulong_p()) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k);
    return r;
  }
  return Int(falling(n, k) / factorial(k));
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(Errc::InvalidArgument, "zero to a negative power");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  Rat r;
  r.get_num() = pow(Int(base.get_num()), e);
  r.get_den() = pow(Int(base.get_den()), e);
  return r;
}

Int prime_power(Prime p, unsigned long exponent) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, exponent);
  return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return is_prime(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::InvalidArgument, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(Errc::InvalidArgument, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(Errc::InvalidArgument, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_fraction_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace bellift
