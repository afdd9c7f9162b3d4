// Copyright 2026 The qbcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small Hermitian matrices (dim <= 8)
// that describe two- and three-qubit batteries.
//
// Basis convention: the first tensor factor is qubit A and basis states are
// ordered |0..0>, |0..1>, ..., |1..1>. For two qubits rows 0..3 are
// |00>, |01>, |10>, |11>.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qbcap/error.hpp"

namespace qbcap {

using cplx = std::complex<double>;

/// Input validation tolerance for Hermiticity, trace and positivity.
inline constexpr double kValidationTol = 1e-10;
/// Default tolerance used to call two eigenvalues degenerate.
inline constexpr double kDegeneracyTol = 1e-9;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  /// Row-major entries; throws DimensionMismatch unless entries.size() == dim*dim.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }
  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Commutator [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m) noexcept;
bool is_hermitian(const ComplexMatrix& m, double tol = kValidationTol);
/// max |U^dagger U - I| <= tol.
bool is_unitary(const ComplexMatrix& u, double tol = kValidationTol);
/// LU with partial pivoting.
cplx determinant(const ComplexMatrix& m);

/// Real eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;
  double degeneracy_tol = kDegeneracyTol;

  /// Sorts `values` ascending.
  static Spectrum from_values(std::vector<double> values, double degeneracy_tol = kDegeneracyTol);

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t k) const noexcept { return values[k]; }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double sum() const noexcept;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Column k is the eigenvector for spectrum.values[k].
  ComplexMatrix vectors;
};

/// Cyclic Jacobi: at most 100 sweeps, stops once the off-diagonal Frobenius
/// norm drops below 1e-12 (relative to the matrix norm when that exceeds 1).
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol = kValidationTol);
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol = kValidationTol);

/// Validated quantum state: Hermitian, unit trace, positive semidefinite,
/// dimension 2^qubits with qubits in {1, 2, 3}.
class DensityMatrix {
 public:
  /// Throws InvalidState naming the violated invariant.
  explicit DensityMatrix(ComplexMatrix m, double tol = kValidationTol);

  static DensityMatrix maximally_mixed(int qubits);
  /// |psi><psi| for a normalised (or normalisable) state vector.
  static DensityMatrix pure(std::span<const cplx> amplitudes);
  static DensityMatrix computational_basis(int qubits, std::size_t index);

  /// Builds a state without validation. Used by operations whose outputs are
  /// states by construction (conjugation, reduction, dephasing).
  static DensityMatrix unchecked(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  cplx operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }
  /// Real diagonal (populations).
  std::vector<double> diagonal() const;
  Spectrum spectrum() const;

 private:
  struct Trusted {};
  DensityMatrix(Trusted, ComplexMatrix m);

  ComplexMatrix m_;
  int qubits_ = 0;
};

/// Reduced state on the `keep` qubits (0 = A, 1 = B, 2 = C), kept in
/// ascending qubit order. Throws BadSubsystem unless keep is a nonempty strict
/// subset of the state's qubits.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);
/// Single-qubit marginal.
DensityMatrix reduce(const DensityMatrix& rho, int qubit);

/// U rho U^dagger; throws NotUnitary.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

/// Erases all coherence in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// True iff p majorises q: every descending partial sum of p is at least the
/// matching partial sum of q (slack 1e-10). Throws LengthMismatch for
/// different lengths and InvalidArgument when the totals differ by > 1e-9.
bool majorizes(const Spectrum& p, const Spectrum& q);

}  // namespace qbcap
