// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oml/lattice.hpp"
#include "oml/states.hpp"

namespace oml::hilbert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numerical thresholds. Defaults follow the library contract; the CLI
/// `--tol` flag scales the ones that decide validity.
struct Tolerances {
  double idempotence = 1e-9;     // Hermitian/idempotent, orthonormality
  double trace = 1e-12;          // density trace
  double eigenvalue = 1e-9;      // density eigenvalues >= -eigenvalue
  double born_clamp = 1e-9;      // tr(rho P) clamped if this far outside [0,1]
  double born_imaginary = 1e-12;
  double subspace_equal = 1e-8;  // projector distance deciding "distinct"
  double ambiguous_floor = 1e-10;  // below: equal; [floor, equal): ill-conditioned
  double unit_norm = 1e-9;
  double rank = 1e-9;            // singular values below count as zero
};

/// Entrywise max-abs distance.
double max_abs(const Matrix& m);

/// Orthonormal columns spanning a subspace of C^d (possibly none).
class SubspaceBasis {
 public:
  /// Throws InvalidMatrix unless the columns are orthonormal.
  SubspaceBasis(Matrix columns, const Tolerances& tol = {});
  static SubspaceBasis zero(std::size_t dimension);
  static SubspaceBasis full(std::size_t dimension);
  /// Normalizes a single nonzero vector.
  static SubspaceBasis line(const Vector& v);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(columns_.rows()); }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(columns_.cols()); }
  const Matrix& columns() const noexcept { return columns_; }

 private:
  SubspaceBasis(Matrix columns, bool);
  Matrix columns_;
};

class Projection {
 public:
  /// Throws InvalidMatrix unless Hermitian and idempotent within tolerance.
  explicit Projection(Matrix m, const Tolerances& tol = {});
  static Projection zero(std::size_t dimension);
  static Projection identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  /// I - P.
  Projection complement() const;

 private:
  Matrix m_;
};

class DensityMatrix {
 public:
  /// Throws InvalidMatrix unless Hermitian, unit trace, and PSD within
  /// tolerance.
  explicit DensityMatrix(Matrix m, const Tolerances& tol = {});
  /// |psi><psi| for a unit vector.
  static DensityMatrix pure(const Vector& psi, const Tolerances& tol = {});

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

Projection projector_from_basis(const SubspaceBasis& basis, const Tolerances& tol = {});

/// tr(rho P), real part; throws DimensionMismatch or InvalidMatrix.
double born(const DensityMatrix& rho, const Projection& p, const Tolerances& tol = {});

/// |<psi, phi>|^2 for unit vectors.
double transition_probability(const Vector& psi, const Vector& phi, const Tolerances& tol = {});

SubspaceBasis subspace_meet(const SubspaceBasis& a, const SubspaceBasis& b, const Tolerances& tol = {});
SubspaceBasis subspace_join(const SubspaceBasis& a, const SubspaceBasis& b, const Tolerances& tol = {});
SubspaceBasis subspace_ortho(const SubspaceBasis& a, const Tolerances& tol = {});

struct ProjectionLattice {
  OrthoLattice lattice;
  std::vector<SubspaceBasis> embedding;  // element -> subspace
  std::vector<Projection> projectors;    // element -> projector
};

inline constexpr std::size_t kDefaultClosureCap = 512;

/// Closes {0, C^d} and the seeds under meet, join and ortho. Elements are
/// ordered by rank, then discovery order. Throws ClosureOverflow past `cap`,
/// IllConditioned when two subspaces are neither clearly equal nor clearly
/// distinct.
ProjectionLattice generate_projection_lattice(const std::vector<SubspaceBasis>& seeds,
                                              std::size_t cap = kDefaultClosureCap,
                                              const Tolerances& tol = {});

/// s(x) = tr(rho P_x) for each element, rounded to 12 decimals and flagged
/// approximate.
State born_state_on_lattice(const DensityMatrix& rho, const ProjectionLattice& closure,
                            const Tolerances& tol = {});

/// Deterministic in `seed`: G G^dagger / tr for a complex Gaussian G.
DensityMatrix random_density(std::size_t dimension, std::uint64_t seed);
/// Orthonormalized Gaussian vectors; rank 0 gives the zero projection.
Projection random_projection(std::size_t dimension, std::size_t rank, std::uint64_t seed);
/// Haar-like unitary from the QR of a complex Gaussian matrix.
Matrix random_unitary(std::size_t dimension, std::uint64_t seed);

/// `mat <rows> <cols>` followed by row-major `a+bi` entries.
std::string format_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

}  // namespace oml::hilbert
