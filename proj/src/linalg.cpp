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

#include "qbcap/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qbcap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadSubsystem: return "BadSubsystem";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedGate: return "UnsupportedGate";
    case ErrorKind::NonPositiveCoupling: return "NonPositiveCoupling";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = values[k];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx ComplexMatrix::trace() const noexcept {
  cplx t = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& x : m.entries()) s += std::norm(x);
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) <= tol;
}

cplx determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  cplx det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == cplx{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Spectrum and eigensolver

Spectrum Spectrum::from_values(std::vector<double> values, double degeneracy_tol) {
  std::stable_sort(values.begin(), values.end());
  return Spectrum{std::move(values), degeneracy_tol};
}

double Spectrum::sum() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace {

constexpr int kSweepBudget = 100;
constexpr double kOffDiagonalTarget = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary G = diag(1, e^{-i phi}) R acting on
// columns p, q, where R is the real Jacobi rotation for the phase-stripped
// 2x2 block.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = std::conj(apq) / mag;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double cs = 1.0 / std::sqrt(t * t + 1.0);
  const double sn = t * cs;

  const cplx gpp = cs, gpq = sn, gqp = -sn * phase, gqq = cs * phase;
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) throw Error(ErrorKind::NotHermitian, "eigensolver input");
  const std::size_t n = m.dim();
  // Symmetrise so the rotations act on an exactly Hermitian matrix.
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagonalTarget * std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kSweepBudget)
      throw Error(ErrorKind::NoConvergence, "Jacobi exceeded " + std::to_string(kSweepBudget) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{Spectrum{std::vector<double>(n), kDegeneracyTol}, ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.spectrum.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  return hermitian_eigen(m, tol).spectrum;
}

// ---------------------------------------------------------------------------
// DensityMatrix

namespace {

int qubits_for_dim(std::size_t dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: return 0;
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)), qubits_(qubits_for_dim(m_.dim())) {}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)), qubits_(qubits_for_dim(m_.dim())) {
  if (qubits_ == 0)
    throw Error(ErrorKind::InvalidState, "dimension " + std::to_string(m_.dim()) + " is not 2, 4 or 8");
  if (!is_hermitian(m_, tol)) throw Error(ErrorKind::InvalidState, "matrix is not Hermitian");
  const cplx tr = m_.trace();
  if (std::abs(tr - 1.0) > tol)
    throw Error(ErrorKind::InvalidState, "trace is " + std::to_string(tr.real()) + ", expected 1");
  if (hermitian_eigenvalues(m_, tol).min() < -tol)
    throw Error(ErrorKind::InvalidState, "matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) { return DensityMatrix(Trusted{}, std::move(m)); }

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  return DensityMatrix(ComplexMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 == 0.0) throw Error(ErrorKind::InvalidState, "zero state vector");
  const std::size_t n = amplitudes.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::computational_basis(int qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << qubits;
  if (index >= dim) throw Error(ErrorKind::IndexOutOfRange, "basis index");
  ComplexMatrix m(dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim());
  for (std::size_t k = 0; k < dim(); ++k) d[k] = m_(k, k).real();
  return d;
}

Spectrum DensityMatrix::spectrum() const { return hermitian_eigenvalues(m_); }

// ---------------------------------------------------------------------------
// State operations

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.qubits();
  if (n < 2) throw Error(ErrorKind::BadSubsystem, "need at least two qubits to reduce");
  unsigned keep_mask = 0;
  for (int q : keep) {
    if (q < 0 || q >= n) throw Error(ErrorKind::BadSubsystem, "qubit " + std::to_string(q) + " out of range");
    if (keep_mask & (1u << q)) throw Error(ErrorKind::BadSubsystem, "duplicate qubit " + std::to_string(q));
    keep_mask |= 1u << q;
  }
  const unsigned all = (1u << n) - 1u;
  if (keep_mask == 0 || keep_mask == all)
    throw Error(ErrorKind::BadSubsystem, "keep must be a nonempty strict subset");

  // Qubit q corresponds to bit (n-1-q) of the basis index.
  std::vector<int> kept, traced;
  for (int q = 0; q < n; ++q) ((keep_mask >> q) & 1u ? kept : traced).push_back(q);
  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();

  auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if ((kept_bits >> (kept.size() - 1 - k)) & 1u) idx |= std::size_t{1} << (n - 1 - kept[k]);
    for (std::size_t k = 0; k < traced.size(); ++k)
      if ((traced_bits >> (traced.size() - 1 - k)) & 1u) idx |= std::size_t{1} << (n - 1 - traced[k]);
    return idx;
  };

  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < dt; ++t) s += rho(compose(r, t), compose(c, t));
      out(r, c) = s;
    }
  return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix reduce(const DensityMatrix& rho, int qubit) { return partial_trace(rho, {qubit}); }

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "unitary and state dimensions differ");
  if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "conjugate");
  ComplexMatrix out = u * rho.matrix() * u.adjoint();
  // Restore exact Hermiticity lost to rounding.
  for (std::size_t r = 0; r < out.dim(); ++r) {
    out(r, r) = out(r, r).real();
    for (std::size_t c = r + 1; c < out.dim(); ++c) {
      const cplx avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  const auto d = rho.diagonal();
  return DensityMatrix::unchecked(ComplexMatrix::diagonal(d));
}

bool majorizes(const Spectrum& p, const Spectrum& q) {
  if (p.size() != q.size())
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + " values");
  if (std::abs(p.sum() - q.sum()) > 1e-9) throw Error(ErrorKind::InvalidArgument, "spectra have different totals");
  std::vector<double> a = p.values, b = q.values;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sa = 0.0, sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb - 1e-10) return false;
  }
  return true;
}

}  // namespace qbcap
