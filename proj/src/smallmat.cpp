#include "symtangle/smallmat.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "symtangle/error.hpp"

namespace symtangle {

namespace {

void require_dim(int dim) {
  if (dim < 2 || dim > SmallMatrix::kMaxDim) {
    throw Error(ErrorCode::WrongDimension, "matrix dimension must be 2, 3 or 4, got " +
                                               std::to_string(dim));
  }
}

void require_finite(const SmallMatrix& m) {
  if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "matrix has non-finite entries");
}

void require_symmetric(const SmallMatrix& m, double tol) {
  require_finite(m);
  if (m.asymmetry() > tol * m.max_abs()) {
    throw Error(ErrorCode::NotSymmetric,
                "asymmetry " + std::to_string(m.asymmetry()) + " exceeds tolerance");
  }
}

using Dense = std::array<std::array<double, SmallMatrix::kMaxDim>, SmallMatrix::kMaxDim>;

// Reduction to upper Hessenberg form by stabilized elementary similarity
// transforms (Gaussian elimination with partial pivoting).
void to_hessenberg(Dense& a, int n) {
  for (int m = 1; m < n - 1; ++m) {
    double pivot = 0.0;
    int p = m;
    for (int j = m; j < n; ++j) {
      if (std::abs(a[j][m - 1]) > std::abs(pivot)) {
        pivot = a[j][m - 1];
        p = j;
      }
    }
    if (p != m) {
      for (int j = m - 1; j < n; ++j) std::swap(a[p][j], a[m][j]);
      for (int j = 0; j < n; ++j) std::swap(a[j][p], a[j][m]);
    }
    if (pivot == 0.0) continue;
    for (int i = m + 1; i < n; ++i) {
      double y = a[i][m - 1];
      if (y == 0.0) continue;
      y /= pivot;
      a[i][m - 1] = 0.0;
      for (int j = m; j < n; ++j) a[i][j] -= y * a[m][j];
      for (int j = 0; j < n; ++j) a[j][m] += y * a[j][i];
    }
  }
}

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude); }

// Francis double-shift QR on an upper Hessenberg matrix.
void hessenberg_qr(Dense& a, int n, std::vector<std::complex<double>>& out) {
  std::vector<double> wr(n), wi(n);
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a[i][j]);

  int nn = n - 1;
  double t = 0.0;
  double p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        s = std::abs(a[l - 1][l - 1]) + std::abs(a[l][l]);
        if (s == 0.0) s = anorm;
        if (std::abs(a[l][l - 1]) <= DBL_EPSILON * s) {
          a[l][l - 1] = 0.0;
          break;
        }
      }
      x = a[nn][nn];
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        y = a[nn - 1][nn - 1];
        w = a[nn][nn - 1] * a[nn - 1][nn];
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (its == 30) throw Error(ErrorCode::NoConvergence, "QR iteration did not converge");
          if (its == 10 || its == 20) {
            // exceptional shift
            t += x;
            for (int i = 0; i <= nn; ++i) a[i][i] -= x;
            s = std::abs(a[nn][nn - 1]) + std::abs(a[nn - 1][nn - 2]);
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a[m][m];
            r = x - z;
            s = y - z;
            p = (r * s - w) / a[m + 1][m] + a[m][m + 1];
            q = a[m + 1][m + 1] - z - r - s;
            r = a[m + 2][m + 1];
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a[m][m - 1]) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a[m - 1][m - 1]) + std::abs(z) +
                                            std::abs(a[m + 1][m + 1]));
            if (u <= DBL_EPSILON * v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a[i][i - 2] = 0.0;
            if (i != m + 2) a[i][i - 3] = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a[k][k - 1];
              q = a[k + 1][k - 1];
              r = 0.0;
              if (k != nn - 1) r = a[k + 2][k - 1];
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a[k][k - 1] = -a[k][k - 1];
              } else {
                a[k][k - 1] = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a[k][j] + q * a[k + 1][j];
                if (k != nn - 1) {
                  p += r * a[k + 2][j];
                  a[k + 2][j] -= p * z;
                }
                a[k + 1][j] -= p * y;
                a[k][j] -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a[i][k] + y * a[i][k + 1];
                if (k != nn - 1) {
                  p += z * a[i][k + 2];
                  a[i][k + 2] -= p * r;
                }
                a[i][k + 1] -= p * q;
                a[i][k] -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
}

}  // namespace

SmallMatrix::SmallMatrix(int dim) : dim_(dim) { require_dim(dim); }

SmallMatrix::SmallMatrix(int dim, std::initializer_list<double> row_major)
    : SmallMatrix(dim, std::span<const double>(row_major.begin(), row_major.size())) {}

SmallMatrix::SmallMatrix(int dim, std::span<const double> row_major) : dim_(dim) {
  require_dim(dim);
  if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error(ErrorCode::WrongDimension, "expected " + std::to_string(dim * dim) +
                                               " entries, got " +
                                               std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

SmallMatrix SmallMatrix::identity(int dim) {
  SmallMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SmallMatrix SmallMatrix::diagonal(std::span<const double> diag) {
  SmallMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
  return m;
}

SmallMatrix SmallMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

double SmallMatrix::trace() const noexcept {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SmallMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : entries()) best = std::max(best, std::abs(v));
  return best;
}

double SmallMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double v : entries()) s += v * v;
  return std::sqrt(s);
}

bool SmallMatrix::all_finite() const noexcept {
  return std::all_of(entries().begin(), entries().end(), [](double v) { return std::isfinite(v); });
}

double SmallMatrix::asymmetry() const noexcept {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SmallMatrix SmallMatrix::transposed() const {
  SmallMatrix t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SmallMatrix operator*(const SmallMatrix& lhs, const SmallMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw Error(ErrorCode::WrongDimension, "product of mismatched matrices");
  SmallMatrix out(lhs.dim());
  for (int i = 0; i < lhs.dim(); ++i)
    for (int j = 0; j < lhs.dim(); ++j) {
      double s = 0.0;
      for (int k = 0; k < lhs.dim(); ++k) s += lhs(i, k) * rhs(k, j);
      out(i, j) = s;
    }
  return out;
}

SmallMatrix operator+(const SmallMatrix& lhs, const SmallMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw Error(ErrorCode::WrongDimension, "sum of mismatched matrices");
  SmallMatrix out(lhs.dim());
  for (int i = 0; i < lhs.dim(); ++i)
    for (int j = 0; j < lhs.dim(); ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  return out;
}

SmallMatrix operator-(const SmallMatrix& lhs, const SmallMatrix& rhs) { return lhs + (-1.0) * rhs; }

SmallMatrix operator*(double s, const SmallMatrix& m) {
  SmallMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = s * m(i, j);
  return out;
}

double max_abs_diff(const SmallMatrix& a, const SmallMatrix& b) { return (a - b).max_abs(); }

SymmetricEigen sym_eigen(const SmallMatrix& m, double tol) {
  require_symmetric(m, tol);
  const int n = m.dim();
  SmallMatrix a = m;
  // Work on the exactly symmetric part.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  SmallMatrix v = SmallMatrix::identity(n);

  const double threshold = 1e-14 * a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 60;
  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > kMaxSweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  SymmetricEigen out{std::vector<double>(n), SmallMatrix(n)};
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    for (int k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

std::vector<double> sym_eigenvalues(const SmallMatrix& m, double tol) {
  return sym_eigen(m, tol).values;
}

std::vector<std::complex<double>> general_eigenvalues(const SmallMatrix& m) {
  require_finite(m);
  const int n = m.dim();
  std::vector<std::complex<double>> out;

  if (n == 2) {
    const double half_tr = 0.5 * (m(0, 0) + m(1, 1));
    const double half_diff = 0.5 * (m(0, 0) - m(1, 1));
    const double disc = half_diff * half_diff + m(0, 1) * m(1, 0);
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      // larger-magnitude root first, the other from the determinant
      const double big = half_tr + (half_tr >= 0.0 ? root : -root);
      const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      const double small = big != 0.0 ? det / big : half_tr - (half_tr >= 0.0 ? root : -root);
      out = {{big, 0.0}, {small, 0.0}};
    } else {
      const double root = std::sqrt(-disc);
      out = {{half_tr, root}, {half_tr, -root}};
    }
  } else {
    Dense a{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    to_hessenberg(a, n);
    hessenberg_qr(a, n, out);
  }

  const double clamp = 1e-10 * m.max_abs();
  for (auto& ev : out)
    if (std::abs(ev.imag()) < clamp) ev = {ev.real(), 0.0};
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return out;
}

double trace_norm_symmetric(const SmallMatrix& m, double tol) {
  double s = 0.0;
  for (double ev : sym_eigenvalues(m, tol)) s += std::abs(ev);
  return s;
}

double det2(const SmallMatrix& m) {
  if (m.dim() != 2) {
    throw Error(ErrorCode::WrongDimension, "det2 requires a 2x2 matrix, got dim " + std::to_string(m.dim()));
  }
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

SmallMatrix sqrt_psd(const SmallMatrix& m, double tol) {
  const auto eig = sym_eigen(m, tol);
  const int n = m.dim();
  SmallMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(eig.values[k], 0.0));
    if (root == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += root * eig.vectors(i, k) * eig.vectors(j, k);
  }
  return out;
}

}  // namespace symtangle
