#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace buffon {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

// Dense row-major matrix. Sized for desk-scale spectral work (n up to a few
// hundred); no view machinery, just values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Vec3 row3(std::size_t i) const;
  void set_row3(std::size_t i, const Vec3& v);

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(double s) const;

  double frobenius_norm() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;  // column k is the eigenvector of values[k], orthonormal
};

// Cyclic Jacobi rotations; sweeps until the off-diagonal Frobenius norm drops
// below off_tol_scale * n. Deterministic for a given input.
SymmetricEigen jacobi_eigh(const Matrix& symmetric, double off_tol_scale = 1e-13);

// Singular values of a (possibly rectangular) matrix, descending, computed
// from the Gram matrix of the smaller side.
std::vector<double> singular_values(const Matrix& m);

// Number of singular values above rel_tol times the largest one.
int numerical_rank(const Matrix& m, double rel_tol);

// Euclidean-orthonormal basis of the column span (modified Gram-Schmidt,
// rank-deficient columns dropped at drop_tol relative to the column scale).
Matrix orthonormal_columns(const Matrix& m, double drop_tol = 1e-12);

// Principal angles (radians, ascending) between the column spans of a and b.
// Uses the sine-based formula so angles near zero keep full precision.
std::vector<double> principal_angles(const Matrix& a, const Matrix& b);

// min over orthogonal d x d Q of ||a Q - b||_F for n x d inputs, via the
// Procrustes nuclear-norm identity; no explicit Q is formed.
double aligned_distance(const Matrix& a, const Matrix& b);

// Solves the square system m x = rhs by Gaussian elimination with partial
// pivoting. Returns false when the pivot collapses below pivot_tol.
bool solve_linear(Matrix m, std::vector<double> rhs, std::vector<double>& x,
                  double pivot_tol = 1e-14);

}  // namespace buffon
