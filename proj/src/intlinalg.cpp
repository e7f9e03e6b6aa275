#include "tits/intlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tits {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

namespace {

// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};

Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  // keep y = 0 when a | b so eliminations never disturb other columns
  if (a != 0 && b % a == 0) return a > 0 ? Bezout{a, 1, 0} : Bezout{-a, -1, 0};
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Row combination: (r_i, r_j) <- (a r_i + b r_j, c r_i + d r_j), ad - bc = +-1.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b,
                  std::int64_t c, std::int64_t d) {
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    std::int64_t x = m[i][k], y = m[j][k];
    m[i][k] = a * x + b * y;
    m[j][k] = c * x + d * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b,
                  std::int64_t c, std::int64_t d) {
  for (auto& row : m) {
    std::int64_t x = row[i], y = row[j];
    row[i] = a * x + b * y;
    row[j] = c * x + d * y;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  IntMatrix left = identity(rows);

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Bring a nonzero entry of minimal magnitude to (t, t).
    for (;;) {
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      std::swap(a[t], a[pi]);
      std::swap(left[t], left[pi]);
      combine_cols(a, t, pj, 0, 1, 1, 0);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        auto [g, x, y] = ext_gcd(a[t][t], a[i][t]);
        std::int64_t p = a[t][t] / g, q = a[i][t] / g;
        combine_rows(a, t, i, x, y, -q, p);
        combine_rows(left, t, i, x, y, -q, p);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        auto [g, x, y] = ext_gcd(a[t][t], a[t][j]);
        std::int64_t p = a[t][t] / g, q = a[t][j] / g;
        combine_cols(a, t, j, x, y, -q, p);
      }
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) clean = false;
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            combine_rows(a, t, i, 1, 1, 0, 1);
            combine_rows(left, t, i, 1, 1, 0, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& v : a[t]) v = -v;
      for (auto& v : left[t]) v = -v;
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = a[t][t];
  out.left = std::move(left);
  return out;
}

std::int64_t determinant(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void Lattice::add(const IntVec& input) {
  IntVec v = input;
  for (;;) {
    auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (lead == v.end()) return;
    const auto q = static_cast<std::size_t>(lead - v.begin());
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), q);
    const auto pos = static_cast<std::size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != q) {
      if (v[q] < 0)
        for (auto& x : v) x = -x;
      pivots_.insert(it, q);
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
      return;
    }
    IntVec& r = rows_[pos];
    auto [g, x, y] = ext_gcd(r[q], v[q]);
    const std::int64_t p = r[q] / g, s = v[q] / g;
    IntVec nr(dim_), nv(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      nr[k] = x * r[k] + y * v[k];
      nv[k] = p * v[k] - s * r[k];
    }
    r = std::move(nr);
    v = std::move(nv);
  }
}

bool Lattice::contains(IntVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (std::size_t j = 0; j < p; ++j)
      if (v[j] != 0) return false;
    if (v[p] % rows_[k][p] != 0) return false;
    const std::int64_t f = v[p] / rows_[k][p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= f * rows_[k][j];
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace tits
