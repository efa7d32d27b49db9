#pragma once

// Semistandard Young tableaux on the two-row rectangle 2 x (d-1) and the
// associated Kostka numbers.  The content vector (m_1, ..., m_n) prescribes
// how many times each value appears; the column count is half the entry sum.

#include "sphgon/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sphgon {

// Entry k of a MultiplicityVector is the multiplicity of value k+1 (>= 0).
using MultiplicityVector = std::vector<int>;

inline void validate_multiplicities(const MultiplicityVector& mult) {
  for (int m : mult)
    if (m < 0) throw std::invalid_argument("multiplicities must be non-negative");
}

inline long multiplicity_sum(const MultiplicityVector& mult) {
  long sum = 0;
  for (int m : mult) sum += m;
  return sum;
}

// A filling of the 2 x cols rectangle: rows weakly increase left to right,
// columns strictly increase top to bottom.
struct Tableau {
  std::vector<int> top;
  std::vector<int> bottom;

  int columns() const { return static_cast<int>(top.size()); }

  bool valid() const {
    if (top.size() != bottom.size()) return false;
    for (size_t j = 0; j < top.size(); ++j) {
      if (top[j] >= bottom[j]) return false;
      if (j > 0 && (top[j] < top[j - 1] || bottom[j] < bottom[j - 1])) return false;
    }
    return true;
  }

  bool operator==(const Tableau& other) const = default;
};

// All tableaux of shape 2 x (sum/2) with the given content, in row-major
// lexicographic order.  Odd content sum admits no such shape: empty list.
inline std::vector<Tableau> enumerate_ssyt(const MultiplicityVector& mult) {
  validate_multiplicities(mult);
  const long sum = multiplicity_sum(mult);
  std::vector<Tableau> out;
  if (sum % 2 != 0) return out;
  const int cols = static_cast<int>(sum / 2);
  const int values = static_cast<int>(mult.size());

  Tableau t;
  t.top.assign(cols, 0);
  t.bottom.assign(cols, 0);
  MultiplicityVector remaining = mult;

  // Cells are filled row-major (top row first), trying values in ascending
  // order, so results come out in row-major lexicographic order.
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == 2 * cols) {
      out.push_back(t);
      return;
    }
    const bool top_row = cell < cols;
    const int col = top_row ? cell : cell - cols;
    int low = 1;
    if (top_row) {
      if (col > 0) low = t.top[col - 1];
    } else {
      low = t.top[col] + 1;
      if (col > 0) low = std::max(low, t.bottom[col - 1]);
    }
    for (int v = low; v <= values; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      (top_row ? t.top : t.bottom)[col] = v;
      self(self, cell + 1);
      ++remaining[v - 1];
    }
  };
  if (cols == 0) {
    out.push_back(t);
    return out;
  }
  rec(rec, 0);
  return out;
}

// Kostka number for the two-row rectangle, by a horizontal-strip DP over
// row-length states (r1, r2): value k contributes a cells to row 1 and b to
// row 2 with a + b = m_k and r2 + b <= r1 (new bottom cells must sit under
// previously filled top cells).
inline BigInt kostka(const MultiplicityVector& mult) {
  validate_multiplicities(mult);
  const long sum = multiplicity_sum(mult);
  if (sum % 2 != 0) return 0;
  const int cols = static_cast<int>(sum / 2);

  auto index = [cols](int r1, int r2) { return r1 * (cols + 1) + r2; };
  std::vector<BigInt> dp((cols + 1) * (cols + 1), 0), next(dp.size());
  dp[index(0, 0)] = 1;

  for (int m : mult) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (int r1 = 0; r1 <= cols; ++r1)
      for (int r2 = 0; r2 <= r1; ++r2) {
        const BigInt& ways = dp[index(r1, r2)];
        if (ways == 0) continue;
        const int max_b = std::min(m, r1 - r2);
        for (int b = 0; b <= max_b; ++b) {
          const int a = m - b;
          if (r1 + a > cols) continue;
          next[index(r1 + a, r2 + b)] += ways;
        }
      }
    dp.swap(next);
  }
  return dp[index(cols, cols)];
}

inline BigInt catalan(long d) {
  if (d < 0) throw std::invalid_argument("catalan index must be non-negative");
  return binomial(2 * d, d) / (d + 1);
}

}  // namespace sphgon
