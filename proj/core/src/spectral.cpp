#include "buffon/spectral.hpp"

#include <cmath>
#include <string>

#include "buffon/errors.hpp"

namespace buffon {

BuffonOperator buffon_matrix(const Graph& graph) {
  const int n = graph.vertex_count();
  BuffonOperator op;
  op.size = n;
  op.matrix = Matrix(n, n);
  op.degrees.resize(n);
  for (int i = 0; i < n; ++i) {
    op.degrees[i] = graph.degree(i);
    op.matrix(i, i) = 0.5;
    for (int j : graph.neighbors(i)) op.matrix(i, j) = 0.5 / graph.degree(i);
  }
  return op;
}

BuffonOperator face_buffon_matrix(const BuffonOperator& op,
                                  const PolyhedralComplex& complex) {
  if (op.variant != BuffonVariant::EdgeBased)
    throw Error(ErrorKind::ValidationError, "face operator is derived from the edge one");
  if (complex.vertex_count() != op.size)
    throw Error(ErrorKind::ValidationError, "complex size does not match operator");
  if (!complex.simplicial())
    throw Error(ErrorKind::NotSimplicial,
                "face-based transformation needs all-triangle faces");
  BuffonOperator out;
  out.size = op.size;
  out.degrees = op.degrees;
  out.variant = BuffonVariant::FaceBased;
  out.matrix = op.matrix * (4.0 / 3.0);
  for (int i = 0; i < op.size; ++i) out.matrix(i, i) -= 1.0 / 3.0;
  return out;
}

SpectralDecomposition spectrum(const BuffonOperator& op, double group_tol) {
  if (group_tol <= 0.0)
    throw Error(ErrorKind::ValidationError, "group tolerance must be positive");
  const int n = op.size;

  // conjugate to symmetric form: S = D^{1/2} B D^{-1/2}
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s(i, j) = std::sqrt(static_cast<double>(op.degrees[i]) / op.degrees[j]) *
                op.matrix(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = s(j, i) = avg;
    }

  const SymmetricEigen eig = jacobi_eigh(s);

  SpectralDecomposition decomp;
  decomp.tolerance_used = group_tol;
  // descending; a group is anchored at its first (largest) member
  int k = n - 1;
  while (k >= 0) {
    const double anchor = eig.values[k];
    int lo = k;
    while (lo - 1 >= 0 && anchor - eig.values[lo - 1] < group_tol) --lo;
    EigenGroup group;
    group.multiplicity = k - lo + 1;
    double sum = 0.0;
    for (int t = lo; t <= k; ++t) sum += eig.values[t];
    group.eigenvalue = sum / group.multiplicity;
    group.basis = Matrix(n, group.multiplicity);
    for (int t = 0; t < group.multiplicity; ++t)
      for (int i = 0; i < n; ++i)
        group.basis(i, t) = eig.vectors(i, k - t) / std::sqrt(static_cast<double>(op.degrees[i]));
    decomp.groups.push_back(std::move(group));
    k = lo - 1;
  }

  for (std::size_t g = 0; g + 1 < decomp.groups.size(); ++g) {
    const double gap = decomp.groups[g].eigenvalue - decomp.groups[g + 1].eigenvalue;
    if (gap < 10.0 * group_tol)
      throw Error(ErrorKind::ToleranceAmbiguity,
                  "eigenvalue groups " + std::to_string(g) + " and " +
                      std::to_string(g + 1) + " are separated by only " +
                      std::to_string(gap));
  }

  // residual guard on every basis vector: ||B v - lambda v||_inf <= 1e-9 n
  for (const EigenGroup& group : decomp.groups) {
    const Matrix bv = op.matrix * group.basis;
    for (int t = 0; t < group.multiplicity; ++t) {
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        worst = std::max(worst,
                         std::abs(bv(i, t) - group.eigenvalue * group.basis(i, t)));
      if (worst > 1e-9 * n)
        throw Error(ErrorKind::ValidationError,
                    "eigenvector residual " + std::to_string(worst) +
                        " exceeds the contract bound");
    }
  }
  return decomp;
}

const EigenGroup& subdominant_space(const SpectralDecomposition& decomp) {
  if (decomp.groups.size() < 2)
    throw Error(ErrorKind::ValidationError,
                "decomposition has no subdominant group");
  return decomp.groups[1];
}

std::vector<int> multiplicities(const SpectralDecomposition& decomp) {
  std::vector<int> out;
  out.reserve(decomp.groups.size());
  for (const auto& g : decomp.groups) out.push_back(g.multiplicity);
  return out;
}

}  // namespace buffon
