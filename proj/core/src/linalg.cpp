#include "buffon/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "buffon/errors.hpp"

namespace buffon {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec3 Matrix::row3(std::size_t i) const {
  assert(cols_ == 3);
  return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)};
}

void Matrix::set_row3(std::size_t i, const Vec3& v) {
  assert(cols_ == 3);
  (*this)(i, 0) = v.x;
  (*this)(i, 1) = v.y;
  (*this)(i, 2) = v.z;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(double s) const {
  Matrix r = *this;
  for (double& v : r.data_) v *= s;
  return r;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigh(const Matrix& symmetric, double off_tol_scale) {
  const std::size_t n = symmetric.rows();
  assert(symmetric.cols() == n);
  Matrix a = symmetric;
  Matrix v = Matrix::identity(n);
  const double stop = off_tol_scale * static_cast<double>(std::max<std::size_t>(n, 1));

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) < stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J on rows/cols p, q
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == max_sweeps && off_diagonal_norm(a) >= stop) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi eigensolver did not reach the off-diagonal target");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const Matrix& m) {
  const bool tall = m.rows() >= m.cols();
  const Matrix g = tall ? m.transposed() * m : m * m.transposed();
  SymmetricEigen eig = jacobi_eigh(g);
  std::vector<double> sv;
  sv.reserve(eig.values.size());
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
    sv.push_back(std::sqrt(std::max(0.0, *it)));
  return sv;
}

int numerical_rank(const Matrix& m, double rel_tol) {
  if (m.empty()) return 0;
  const std::vector<double> sv = singular_values(m);
  if (sv.empty() || sv[0] == 0.0) return 0;
  int rank = 0;
  for (double s : sv)
    if (s > rel_tol * sv[0]) ++rank;
  return rank;
}

Matrix orthonormal_columns(const Matrix& m, double drop_tol) {
  const std::size_t n = m.rows(), k = m.cols();
  std::vector<std::vector<double>> basis;
  double scale = m.max_abs() * std::sqrt(static_cast<double>(n));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m(i, j);
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (const auto& b : basis) {
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += b[i] * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= d * b[i];
      }
    }
    double nrm = 0.0;
    for (double x : col) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm <= drop_tol * scale) continue;
    for (double& x : col) x /= nrm;
    basis.push_back(std::move(col));
  }
  Matrix q(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) q(i, j) = basis[j][i];
  return q;
}

std::vector<double> principal_angles(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  const Matrix qa = orthonormal_columns(a);
  const Matrix qb = orthonormal_columns(b);
  // sin(theta_k) are the singular values of Qb - Qa (Qa^T Qb); accurate for
  // small angles where acos of a near-1 cosine loses half the digits.
  const Matrix proj = qa * (qa.transposed() * qb);
  const Matrix residual = qb - proj;
  std::vector<double> sines = singular_values(residual);
  std::vector<double> angles;
  angles.reserve(sines.size());
  for (auto it = sines.rbegin(); it != sines.rend(); ++it)
    angles.push_back(std::asin(std::clamp(*it, 0.0, 1.0)));
  return angles;
}

namespace {

// U, V, sigma of a small d x d matrix via the Gram eigendecomposition, with
// orthonormal completion of U along rank-deficient directions.
struct SmallSvd {
  Matrix u, v;
  std::vector<double> sigma;  // descending
};

SmallSvd small_svd(const Matrix& m) {
  const std::size_t d = m.rows();
  assert(m.cols() == d);
  const SymmetricEigen eig = jacobi_eigh(m.transposed() * m);
  SmallSvd out;
  out.v = Matrix(d, d);
  out.u = Matrix(d, d);
  out.sigma.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t src = d - 1 - k;  // descending
    out.sigma[k] = std::sqrt(std::max(0.0, eig.values[src]));
    for (std::size_t i = 0; i < d; ++i) out.v(i, k) = eig.vectors(i, src);
  }
  const double top = out.sigma.empty() ? 0.0 : out.sigma[0];
  std::vector<std::vector<double>> ucols;
  for (std::size_t k = 0; k < d; ++k) {
    if (out.sigma[k] <= 1e-12 * std::max(top, 1e-300)) break;
    std::vector<double> col(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) col[i] += m(i, j) * out.v(j, k);
    // orthonormalize against the previous columns instead of dividing by the
    // Gram-derived sigma: a small singular value only carries half precision
    // and would leave Q = U V^T visibly non-orthogonal
    for (const auto& u : ucols) {
      double ip = 0.0;
      for (std::size_t i = 0; i < d; ++i) ip += u[i] * col[i];
      for (std::size_t i = 0; i < d; ++i) col[i] -= ip * u[i];
    }
    double nrm = 0.0;
    for (double x : col) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm <= 1e-14 * std::max(top * top, 1e-300)) break;
    for (double& x : col) x /= nrm;
    ucols.push_back(std::move(col));
  }
  // complete with coordinate directions orthogonalized against the found ones
  while (ucols.size() < d) {
    std::vector<double> best;
    double best_norm = -1.0;
    for (std::size_t axis = 0; axis < d; ++axis) {
      std::vector<double> cand(d, 0.0);
      cand[axis] = 1.0;
      for (const auto& u : ucols) {
        double ip = 0.0;
        for (std::size_t i = 0; i < d; ++i) ip += u[i] * cand[i];
        for (std::size_t i = 0; i < d; ++i) cand[i] -= ip * u[i];
      }
      double nrm = 0.0;
      for (double x : cand) nrm += x * x;
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(cand);
      }
    }
    const double nrm = std::sqrt(best_norm);
    for (double& x : best) x /= nrm;
    ucols.push_back(std::move(best));
  }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) out.u(i, k) = ucols[k][i];
  return out;
}

}  // namespace

double aligned_distance(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  // explicit optimal Q = U V^T from the Procrustes SVD of a^T b; the naive
  // nuclear-norm identity cancels catastrophically below sqrt(eps)
  const SmallSvd svd = small_svd(a.transposed() * b);
  const Matrix q = svd.u * svd.v.transposed();
  return (a * q - b).frobenius_norm();
}

bool solve_linear(Matrix m, std::vector<double> rhs, std::vector<double>& x,
                  double pivot_tol) {
  const std::size_t n = m.rows();
  assert(m.cols() == n && rhs.size() == n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(perm[r], col)) > std::abs(m(perm[piv], col))) piv = r;
    std::swap(perm[col], perm[piv]);
    const double p = m(perm[col], col);
    if (std::abs(p) < pivot_tol) return false;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(perm[r], col) / p;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m(perm[r], c) -= f * m(perm[col], c);
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = rhs[perm[ri]];
    for (std::size_t c = ri + 1; c < n; ++c) s -= m(perm[ri], c) * x[c];
    x[ri] = s / m(perm[ri], ri);
  }
  return true;
}

}  // namespace buffon
