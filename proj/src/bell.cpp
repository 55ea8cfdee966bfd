#include "bellift/bell.hpp"

#include "bellift/errors.hpp"

namespace bellift {

Rat bell(std::size_t n, std::size_t k, std::span<const Rat> xs) {
  if (k > n) return 0;
  return BellTable<Rat>(xs, n)(n, k);
}

namespace {

// Walks part sizes j = 1..n choosing multiplicities i_j; `acc` carries
// prod (x_j/j!)^{i_j} / i_j!.
void enumerate_partitions(std::size_t j, std::size_t n_left, std::size_t k_left,
                          const Rat& acc, std::span<const Rat> xs,
                          std::span<const Rat> inv_fact, Rat& total) {
  if (n_left == 0 && k_left == 0) {
    total += acc;
    return;
  }
  if (j > n_left || k_left == 0) return;
  Rat x = j <= xs.size() ? xs[j - 1] : Rat(0);
  Rat weight = x * inv_fact[j];
  Rat term = acc;
  for (std::size_t i = 0; i * j <= n_left && i <= k_left; ++i) {
    if (i > 0) {
      term *= weight;
      term /= static_cast<unsigned long>(i);
    }
    if (term == 0) break;
    enumerate_partitions(j + 1, n_left - i * j, k_left - i, term, xs, inv_fact, total);
  }
}

}  // namespace

Rat bell_oracle(std::size_t n, std::size_t k, std::span<const Rat> xs) {
  if (n > 14) throw Error(Errc::OracleTooLarge, "bell_oracle limited to n <= 14");
  if (k > n) return 0;
  std::vector<Rat> inv_fact(n + 2);
  for (std::size_t j = 0; j < inv_fact.size(); ++j) inv_fact[j] = Rat(1) / Rat(factorial(j));
  Rat total = 0;
  enumerate_partitions(1, n, k, Rat(1), xs, inv_fact, total);
  return total * factorial(n);
}

Rat bell_falling(std::size_t n, std::size_t k, const Int& a) {
  if (k > n) return 0;
  Int sum = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    Int term = binom(Int(static_cast<unsigned long>(k)), j) * falling(Int(a * static_cast<unsigned long>(j)), n);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return make_rat(sum, factorial(k));
}

}  // namespace bellift
