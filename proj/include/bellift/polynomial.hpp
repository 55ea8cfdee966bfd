#pragma once

// Dense univariate polynomials, constant term first, templated on the
// coefficient scalar (Int or Rat).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bellift/bigmath.hpp"
#include "bellift/errors.hpp"

namespace bellift {

template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Horner evaluation; T is any type closed under + and * with Scalar.
  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = T(acc * x);
      acc = T(acc + *it);
    }
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d.push_back(Scalar(coeffs_[i] * static_cast<unsigned long>(i)));
    }
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Scalar> r(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    std::vector<Scalar> r(std::max(f.coeffs_.size(), g.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i) + g.coeff(i);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    std::vector<Scalar> r(std::max(f.coeffs_.size(), g.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i) - g.coeff(i);
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].get_str() + ")";
      if (i == 1) out += "*x";
      if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<Int>;
using RatPolynomial = Polynomial<Rat>;

inline RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rat> c;
  for (const auto& a : f.coeffs()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

/// Quotient and remainder in Q[x]; divisor must be nonzero.
inline std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& f,
                                                      const RatPolynomial& g) {
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  std::vector<Rat> rem = f.coeffs();
  if (f.degree() < g.degree()) return {RatPolynomial(), f};
  std::vector<Rat> quot(static_cast<std::size_t>(f.degree() - g.degree() + 1), Rat(0));
  const auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rat c = rem[i + dg] / g.leading();
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[i + j] -= c * g.coeffs()[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Monic gcd in Q[x] by the Euclidean algorithm (zero if both are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rat> c = a.coeffs();
  const Rat lead = c.back();
  for (auto& x : c) x /= lead;
  return RatPolynomial(std::move(c));
}

/// Clears denominators and content; leading coefficient made positive.
inline IntPolynomial primitive_part(const RatPolynomial& f) {
  if (f.is_zero()) return {};
  Int den_lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ints;
  Int content = 0;
  for (const auto& c : f.coeffs()) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPolynomial(std::move(ints));
}

}  // namespace bellift
