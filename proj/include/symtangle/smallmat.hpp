#pragma once

// Dense real kernels for matrices of dimension 2 to 4. Every density matrix
// in this library is real, so complex numbers only appear as eigenvalues.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace symtangle {

/// Default relative tolerance for the symmetry precondition.
inline constexpr double kSymmetryTolerance = 1e-12;

class SmallMatrix {
 public:
  static constexpr int kMaxDim = 4;

  /// Zero matrix. Throws WrongDimension unless 2 <= dim <= 4.
  explicit SmallMatrix(int dim);
  /// Row-major entries; the list must hold exactly dim*dim values.
  SmallMatrix(int dim, std::initializer_list<double> row_major);
  SmallMatrix(int dim, std::span<const double> row_major);

  static SmallMatrix identity(int dim);
  static SmallMatrix diagonal(std::span<const double> diag);
  static SmallMatrix diagonal(std::initializer_list<double> diag);

  int dim() const noexcept { return dim_; }

  double operator()(int row, int col) const noexcept { return data_[row * dim_ + col]; }
  double& operator()(int row, int col) noexcept { return data_[row * dim_ + col]; }

  std::span<const double> entries() const noexcept {
    return {data_.data(), static_cast<std::size_t>(dim_ * dim_)};
  }

  double trace() const noexcept;
  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;
  /// Largest |m(i,j) - m(j,i)|.
  double asymmetry() const noexcept;

  SmallMatrix transposed() const;

  friend SmallMatrix operator*(const SmallMatrix& lhs, const SmallMatrix& rhs);
  friend SmallMatrix operator+(const SmallMatrix& lhs, const SmallMatrix& rhs);
  friend SmallMatrix operator-(const SmallMatrix& lhs, const SmallMatrix& rhs);
  friend SmallMatrix operator*(double s, const SmallMatrix& m);
  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;

 private:
  int dim_;
  std::array<double, kMaxDim * kMaxDim> data_{};
};

/// Largest entrywise |a - b|; throws WrongDimension on mismatch.
double max_abs_diff(const SmallMatrix& a, const SmallMatrix& b);

struct SymmetricEigen {
  std::vector<double> values;  ///< descending
  SmallMatrix vectors;         ///< column i is the eigenvector of values[i]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// `tol` bounds the allowed asymmetry relative to max|entry|. Iteration stops
/// once the off-diagonal Frobenius norm drops below 1e-14 * ||m||_F.
SymmetricEigen sym_eigen(const SmallMatrix& m, double tol = kSymmetryTolerance);

/// Eigenvalues of a symmetric matrix, sorted descending.
std::vector<double> sym_eigenvalues(const SmallMatrix& m, double tol = kSymmetryTolerance);

/// Eigenvalues of an arbitrary real matrix. Conjugate pairs are kept;
/// imaginary parts below 1e-10 * max|entry| are clamped to zero.
/// Ordered by descending real part, then descending imaginary part.
std::vector<std::complex<double>> general_eigenvalues(const SmallMatrix& m);

/// Sum of |eigenvalue| of a symmetric matrix.
double trace_norm_symmetric(const SmallMatrix& m, double tol = kSymmetryTolerance);

double det2(const SmallMatrix& m);

/// Principal square root of a symmetric PSD matrix; eigenvalues below zero
/// (roundoff) are clamped to zero first.
SmallMatrix sqrt_psd(const SmallMatrix& m, double tol = kSymmetryTolerance);

}  // namespace symtangle
