#pragma once

// Partial Bell polynomials B_{n,k}(x_1, x_2, ...) evaluated on numeric
// sequences. Entries beyond the supplied sequence are zero.

#include <cstddef>
#include <span>
#include <vector>

#include "bellift/bigmath.hpp"

namespace bellift {

/// Memo of B_{n,k}(xs) for 0 <= k <= n <= n_max, filled with
///   B_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) x_j B_{n-j,k-1}.
/// Scalar is Int or Rat. Read-only after construction.
template <class Scalar>
class BellTable {
 public:
  BellTable(std::span<const Scalar> xs, std::size_t n_max)
      : n_max_(n_max), table_((n_max + 1) * (n_max + 1), Scalar(0)) {
    at(0, 0) = 1;
    // Pascal row n-1 is kept while filling row n.
    std::vector<Int> row{1};
    for (std::size_t n = 1; n <= n_max_; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        Scalar sum = 0;
        for (std::size_t j = 1; j <= n - k + 1; ++j) {
          if (j > xs.size()) break;
          const Scalar& x = xs[j - 1];
          if (x == 0) continue;
          const Scalar& prev = at(n - j, k - 1);
          if (prev == 0) continue;
          sum += row[j - 1] * x * prev;
        }
        at(n, k) = std::move(sum);
      }
      std::vector<Int> next(n + 1);
      next[0] = next[n] = 1;
      for (std::size_t i = 1; i < n; ++i) next[i] = row[i - 1] + row[i];
      row = std::move(next);
    }
  }

  /// B_{n,k}; zero outside 0 <= k <= n. n must not exceed max_n().
  const Scalar& operator()(std::size_t n, std::size_t k) const {
    static const Scalar zero(0);
    if (k > n || n > n_max_) return zero;
    return table_[n * (n_max_ + 1) + k];
  }

  std::size_t max_n() const noexcept { return n_max_; }

 private:
  Scalar& at(std::size_t n, std::size_t k) { return table_[n * (n_max_ + 1) + k]; }

  std::size_t n_max_;
  std::vector<Scalar> table_;
};

/// B_{n,k}(xs) via the recurrence; 0 when k > n.
Rat bell(std::size_t n, std::size_t k, std::span<const Rat> xs);

/// Direct sum over pi(n,k). Reference for tests; n <= 14 else OracleTooLarge.
Rat bell_oracle(std::size_t n, std::size_t k, std::span<const Rat> xs);

/// B_{n,k}((a)_1, (a)_2, ...) = (1/k!) sum_j (-1)^{k-j} C(k,j) (ja)_n.
Rat bell_falling(std::size_t n, std::size_t k, const Int& a);

}  // namespace bellift
