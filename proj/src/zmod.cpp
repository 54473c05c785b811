#include "fusionlab/zmod.hpp"

#include <stdexcept>
#include <utility>

namespace fusionlab {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 reduce(i128 v, i64 m) {
  i64 r = static_cast<i64>(v % m);
  return r < 0 ? r + m : r;
}

// rows (p, q) <- (s p + t q, u p + v q), all mod m.
void mix(std::vector<i64>& p, std::vector<i64>& q, i64 s, i64 t, i64 u, i64 v, i64 m, std::size_t from) {
  for (std::size_t j = from; j < p.size(); ++j) {
    const i128 pj = p[j], qj = q[j];
    p[j] = reduce(s * pj + t * qj, m);
    q[j] = reduce(u * pj + v * qj, m);
  }
}

}  // namespace

i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  i64 old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
    old_t = std::exchange(cur_t, old_t - q * cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

std::optional<std::vector<i64>> solve_mod(std::vector<std::vector<i64>> a, std::vector<i64> b, i64 m) {
  if (m < 1 || m > (i64{1} << 62)) throw std::invalid_argument("solve_mod: modulus out of range");
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_mod: right-hand side length mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("solve_mod: ragged matrix");
    for (auto& v : row) v = reduce(v, m);
  }
  for (auto& v : b) v = reduce(v, m);

  // Column operations are accumulated in v_cols (stored by column) so that
  // x = V y recovers the original unknowns.
  std::vector<std::vector<i64>> v_cols(cols, std::vector<i64>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) v_cols[j][j] = 1 % m;

  auto col_mix = [&](std::size_t c1, std::size_t c2, i64 s, i64 t, i64 u, i64 v, std::size_t from_row) {
    for (std::size_t i = from_row; i < rows; ++i) {
      const i128 x = a[i][c1], y = a[i][c2];
      a[i][c1] = reduce(s * x + t * y, m);
      a[i][c2] = reduce(u * x + v * y, m);
    }
    mix(v_cols[c1], v_cols[c2], s, t, u, v, m, 0);
  };

  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    const std::size_t t = rank;
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pr != t) {
      std::swap(a[pr], a[t]);
      std::swap(b[pr], b[t]);
    }
    if (pc != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][t]);
      std::swap(v_cols[pc], v_cols[t]);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const i64 p = a[t][t], q = a[i][t];
        if (q % p == 0) {
          const i64 f = m - q / p % m;
          for (std::size_t j = t; j < cols; ++j) a[i][j] = reduce(a[i][j] + static_cast<i128>(f) * a[t][j], m);
          b[i] = reduce(b[i] + static_cast<i128>(f) * b[t], m);
        } else {
          i64 s, u;
          const i64 g = ext_gcd(p, q, s, u);
          mix(a[t], a[i], s, u, -q / g, p / g, m, t);
          std::vector<i64> bt{b[t]}, bi{b[i]};
          mix(bt, bi, s, u, -q / g, p / g, m, 0);
          b[t] = bt[0];
          b[i] = bi[0];
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const i64 p = a[t][t], q = a[t][j];
        if (q % p == 0) {
          const i64 f = q / p;
          col_mix(t, j, 1, 0, -f, 1, t);
        } else {
          i64 s, u;
          const i64 g = ext_gcd(p, q, s, u);
          col_mix(t, j, s, u, -q / g, p / g, t);
          dirty = true;
        }
      }
      // A column step can refill the pivot column below the diagonal.
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = a[i][t] != 0;
    }
  }

  std::vector<i64> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i >= rank) {
      if (b[i] != 0) return std::nullopt;
      continue;
    }
    const i64 d = a[i][i];
    i64 s, u;
    const i64 g = ext_gcd(d, m, s, u);
    if (b[i] % g != 0) return std::nullopt;
    const i64 mg = m / g;
    y[i] = reduce(static_cast<i128>(b[i] / g) * reduce(s, mg), mg);
  }
  std::vector<i64> x(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < cols; ++i) x[i] = reduce(x[i] + static_cast<i128>(v_cols[j][i]) * y[j], m);
  }
  return x;
}

}  // namespace fusionlab
