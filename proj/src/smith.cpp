#include "toric/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

Mat identity_mat(std::size_t n) {
  Mat m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& a) {
  const std::size_t r = row_count(a), c = col_count(a);
  Mat t(c, zero_vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t r = row_count(a), k = col_count(a), c = col_count(b);
  if (k != row_count(b)) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat m(r, zero_vec(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
    }
  return m;
}

Vec mat_apply(const Mat& a, const Vec& x) {
  const std::size_t r = row_count(a), c = col_count(a);
  if (c != x.size()) throw std::invalid_argument("mat_apply: shape mismatch");
  Vec y = zero_vec(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) y[i] += a[i][j] * x[j];
  return y;
}

namespace {

void swap_rows(Mat& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(Mat& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row[j] += c * row[i]
void add_row(Mat& a, std::size_t j, std::size_t i, const Int& c) {
  for (std::size_t t = 0; t < a[j].size(); ++t) a[j][t] += c * a[i][t];
}

// col[j] += c * col[i]
void add_col(Mat& a, std::size_t j, std::size_t i, const Int& c) {
  for (auto& row : a) row[j] += c * row[i];
}

void negate_row(Mat& a, std::size_t i) {
  for (auto& x : a[i]) x = -x;
}

}  // namespace

Smith smith_form(const Mat& a) {
  const std::size_t r = row_count(a), c = col_count(a);
  Smith s;
  s.d = a;
  s.left = identity_mat(r);
  s.right = identity_mat(c);

  std::size_t t = 0;
  while (t < r && t < c) {
    // Smallest nonzero |entry| in the remaining block, first by rows then cols.
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        const Int v = boost::multiprecision::abs(s.d[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;

    if (pi != t) {
      swap_rows(s.d, pi, t);
      swap_rows(s.left, pi, t);
    }
    if (pj != t) {
      swap_cols(s.d, pj, t);
      swap_cols(s.right, pj, t);
    }

    bool clean = true;
    for (std::size_t i = t + 1; i < r; ++i) {
      const Int q = s.d[i][t] / s.d[t][t];
      if (q != 0) {
        add_row(s.d, i, t, -q);
        add_row(s.left, i, t, -q);
      }
      if (s.d[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < c; ++j) {
      const Int q = s.d[t][j] / s.d[t][t];
      if (q != 0) {
        add_col(s.d, j, t, -q);
        add_col(s.right, j, t, -q);
      }
      if (s.d[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; pick a smaller pivot next round

    // Divisibility: pivot must divide the rest of the block.
    bool divides = true;
    for (std::size_t i = t + 1; i < r && divides; ++i)
      for (std::size_t j = t + 1; j < c && divides; ++j)
        if (s.d[i][j] % s.d[t][t] != 0) {
          add_row(s.d, t, i, 1);
          add_row(s.left, t, i, 1);
          divides = false;
        }
    if (!divides) continue;

    if (s.d[t][t] < 0) {
      negate_row(s.d, t);
      negate_row(s.left, t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::size_t mat_rank(const Mat& a) {
  if (a.empty() || col_count(a) == 0) return 0;
  return smith_form(a).rank;
}

std::optional<Vec> solve_integer(const Smith& s, std::size_t cols, const Vec& b) {
  // a x = b  <=>  d (right^{-1} x) = left b
  const Vec lb = mat_apply(s.left, b);
  Vec z = zero_vec(cols);
  for (std::size_t i = 0; i < lb.size(); ++i) {
    if (i < s.rank && i < cols) {
      if (lb[i] % s.d[i][i] != 0) return std::nullopt;
      z[i] = lb[i] / s.d[i][i];
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_apply(s.right, z);
}

std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
  if (row_count(a) != b.size()) throw std::invalid_argument("solve_integer: shape mismatch");
  const std::size_t c = col_count(a);
  if (c == 0) return is_zero(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_integer(smith_form(a), c, b);
}

std::vector<Vec> integer_kernel(const Mat& a, std::size_t cols) {
  const std::size_t c = a.empty() ? cols : col_count(a);
  if (c != cols) throw std::invalid_argument("integer_kernel: column mismatch");
  if (a.empty() || c == 0) {
    // No constraints: kernel is the whole space.
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < c; ++j) {
      Vec e = zero_vec(c);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  const Smith s = smith_form(a);
  std::vector<Vec> basis;
  for (std::size_t j = s.rank; j < c; ++j) {
    Vec col = zero_vec(c);
    for (std::size_t i = 0; i < c; ++i) col[i] = s.right[i][j];
    basis.push_back(primitive_signed(col));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b) {
  const std::size_t r = row_count(a), c = col_count(a);
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m[i][j] = Rat(a[i][j]);
    m[i][c] = Rat(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && m[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(m[p], m[row]);
    const Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j <= c; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (m[i][c] != 0) return std::nullopt;
  std::vector<Rat> x(c, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][c];
  return x;
}

Int determinant(const Mat& a) {
  const std::size_t n = row_count(a);
  if (n != col_count(a)) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  // Bareiss.
  Mat m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace toric
