#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/vec.hpp"

namespace toric {

/// Row-major integer matrix.
using Mat = std::vector<Vec>;

inline std::size_t row_count(const Mat& a) { return a.size(); }
inline std::size_t col_count(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

Mat identity_mat(std::size_t n);
Mat transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);

/// Smith normal form: left * a * right = d with d diagonal, nonnegative,
/// d_i | d_{i+1}, and left/right unimodular.
struct Smith {
  Mat d;
  Mat left;
  Mat right;
  std::size_t rank = 0;
};

Smith smith_form(const Mat& a);

std::size_t mat_rank(const Mat& a);

/// Integer solution of a * x = b, if one exists.
std::optional<Vec> solve_integer(const Mat& a, const Vec& b);
std::optional<Vec> solve_integer(const Smith& s, std::size_t cols, const Vec& b);

/// Basis of the integer kernel {x : a * x = 0}. The basis spans the full
/// kernel lattice (it is saturated by construction). `cols` fixes the ambient
/// dimension when `a` has no rows.
std::vector<Vec> integer_kernel(const Mat& a, std::size_t cols);

/// Rational solution of a * x = b (Gaussian elimination); empty if the system
/// is inconsistent.
std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b);

/// Determinant of a square matrix (fraction-free Gaussian elimination).
Int determinant(const Mat& a);

}  // namespace toric
