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

#include "oml/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>

#include "detail/text.hpp"
#include "oml/error.hpp"
#include "oml/rational.hpp"

namespace oml::hilbert {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorKind::InvalidMatrix, std::string(what) + " must be a non-empty square matrix");
  }
}

// Columns of `m` orthonormalized; directions with singular value below `tol`
// are dropped.
Matrix orthonormal_span(const Matrix& m, double tol) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Portable Gaussian stream: mt19937_64 bits through Box-Muller, so a seed
// gives the same matrices with any standard library.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (spare_) {
      spare_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        const double re = next();
        const double im = next();
        g(i, j) = Complex(re, im);
      }
    }
    return g;
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  bool spare_ = false;
  double cached_ = 0.0;
};

}  // namespace

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

SubspaceBasis::SubspaceBasis(Matrix columns, bool) : columns_(std::move(columns)) {}

SubspaceBasis::SubspaceBasis(Matrix columns, const Tolerances& tol) : columns_(std::move(columns)) {
  if (columns_.rows() == 0) fail(ErrorKind::InvalidMatrix, "ambient dimension must be positive");
  const Matrix gram = columns_.adjoint() * columns_;
  const Matrix identity = Matrix::Identity(gram.rows(), gram.cols());
  if (max_abs(gram - identity) > tol.idempotence) {
    fail(ErrorKind::InvalidMatrix, "basis vectors are not orthonormal");
  }
}

SubspaceBasis SubspaceBasis::zero(std::size_t dimension) {
  if (dimension == 0) fail(ErrorKind::InvalidMatrix, "ambient dimension must be positive");
  return SubspaceBasis(Matrix(static_cast<Eigen::Index>(dimension), 0), true);
}

SubspaceBasis SubspaceBasis::full(std::size_t dimension) {
  if (dimension == 0) fail(ErrorKind::InvalidMatrix, "ambient dimension must be positive");
  const auto d = static_cast<Eigen::Index>(dimension);
  return SubspaceBasis(Matrix::Identity(d, d), true);
}

SubspaceBasis SubspaceBasis::line(const Vector& v) {
  const double norm = v.norm();
  if (v.size() == 0 || norm == 0.0) fail(ErrorKind::InvalidMatrix, "a line needs a nonzero vector");
  Matrix column = v / norm;
  return SubspaceBasis(std::move(column), true);
}

Projection::Projection(Matrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_, "projection");
  if (max_abs(m_ - m_.adjoint()) > tol.idempotence) {
    fail(ErrorKind::InvalidMatrix, "projection is not Hermitian");
  }
  if (max_abs(m_ * m_ - m_) > tol.idempotence) {
    fail(ErrorKind::InvalidMatrix, "projection is not idempotent");
  }
}

Projection Projection::zero(std::size_t dimension) {
  const auto d = static_cast<Eigen::Index>(dimension);
  return Projection(Matrix::Zero(d, d));
}

Projection Projection::identity(std::size_t dimension) {
  const auto d = static_cast<Eigen::Index>(dimension);
  return Projection(Matrix::Identity(d, d));
}

Projection Projection::complement() const {
  return Projection(Matrix::Identity(m_.rows(), m_.cols()) - m_);
}

DensityMatrix::DensityMatrix(Matrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_, "density matrix");
  if (max_abs(m_ - m_.adjoint()) > tol.idempotence) {
    fail(ErrorKind::InvalidMatrix, "density matrix is not Hermitian");
  }
  const Complex trace = m_.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > tol.trace) {
    fail(ErrorKind::InvalidMatrix, "density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol.eigenvalue) {
    fail(ErrorKind::InvalidMatrix, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi, const Tolerances& tol) {
  if (std::abs(psi.norm() - 1.0) > tol.unit_norm) {
    fail(ErrorKind::Normalization, "state vector is not unit norm");
  }
  return DensityMatrix(psi * psi.adjoint(), tol);
}

Projection projector_from_basis(const SubspaceBasis& basis, const Tolerances& tol) {
  const Matrix& v = basis.columns();
  return Projection(v * v.adjoint(), tol);
}

double born(const DensityMatrix& rho, const Projection& p, const Tolerances& tol) {
  if (rho.dimension() != p.dimension()) {
    fail(ErrorKind::DimensionMismatch, "density matrix is " + std::to_string(rho.dimension()) +
                                           "-dimensional, projection " +
                                           std::to_string(p.dimension()) + "-dimensional");
  }
  const Complex value = (rho.matrix() * p.matrix()).trace();
  if (std::abs(value.imag()) >= tol.born_imaginary) {
    fail(ErrorKind::InvalidMatrix, "tr(rho P) has a non-negligible imaginary part");
  }
  double real = value.real();
  if (real < -tol.born_clamp || real > 1.0 + tol.born_clamp) {
    fail(ErrorKind::InvalidMatrix, "tr(rho P) outside [0, 1]");
  }
  return std::clamp(real, 0.0, 1.0);
}

double transition_probability(const Vector& psi, const Vector& phi, const Tolerances& tol) {
  if (psi.size() != phi.size()) fail(ErrorKind::DimensionMismatch, "vectors differ in dimension");
  if (std::abs(psi.norm() - 1.0) > tol.unit_norm || std::abs(phi.norm() - 1.0) > tol.unit_norm) {
    fail(ErrorKind::Normalization, "transition probability needs unit vectors");
  }
  return std::norm(psi.dot(phi));
}

SubspaceBasis subspace_join(const SubspaceBasis& a, const SubspaceBasis& b, const Tolerances& tol) {
  if (a.dimension() != b.dimension()) fail(ErrorKind::DimensionMismatch, "subspaces differ in dimension");
  Matrix stacked(static_cast<Eigen::Index>(a.dimension()), static_cast<Eigen::Index>(a.rank() + b.rank()));
  stacked << a.columns(), b.columns();
  return SubspaceBasis(orthonormal_span(stacked, tol.rank), tol);
}

SubspaceBasis subspace_meet(const SubspaceBasis& a, const SubspaceBasis& b, const Tolerances& tol) {
  if (a.dimension() != b.dimension()) fail(ErrorKind::DimensionMismatch, "subspaces differ in dimension");
  const auto d = static_cast<Eigen::Index>(a.dimension());
  const auto ra = static_cast<Eigen::Index>(a.rank());
  const auto rb = static_cast<Eigen::Index>(b.rank());
  if (ra == 0 || rb == 0) return SubspaceBasis::zero(a.dimension());
  // x in A ^ B  <=>  x = A u = B w  <=>  (u, w) in ker [A, -B].
  Matrix stacked(d, ra + rb);
  stacked << a.columns(), -b.columns();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index j = 0; j < ra + rb; ++j) {
    if (j >= sv.size() || sv(j) <= tol.rank) kernel.push_back(j);
  }
  Matrix vectors(d, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    vectors.col(static_cast<Eigen::Index>(k)) = a.columns() * svd.matrixV().col(kernel[k]).head(ra);
  }
  return SubspaceBasis(orthonormal_span(vectors, tol.rank), tol);
}

SubspaceBasis subspace_ortho(const SubspaceBasis& a, const Tolerances& tol) {
  const auto d = static_cast<Eigen::Index>(a.dimension());
  if (a.rank() == 0) return SubspaceBasis::full(a.dimension());
  Eigen::JacobiSVD<Matrix> svd(a.columns(), Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.rank) ++rank;
  return SubspaceBasis(svd.matrixU().rightCols(d - rank), tol);
}

namespace {

class ClosureBuilder {
 public:
  ClosureBuilder(std::size_t cap, const Tolerances& tol) : cap_(cap), tol_(tol) {}

  // Index of `basis` among the elements found so far, adding it if new.
  std::size_t intern(SubspaceBasis basis) {
    const Matrix p = basis.columns() * basis.columns().adjoint();
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      if (bases_[i].rank() != basis.rank()) continue;
      const double distance = max_abs(p - projectors_[i]);
      if (distance < tol_.ambiguous_floor) return i;
      if (distance < tol_.subspace_equal) {
        fail(ErrorKind::IllConditioned,
             "subspaces at projector distance " + std::to_string(distance) +
                 " are neither clearly equal nor clearly distinct");
      }
    }
    if (bases_.size() >= cap_) {
      fail(ErrorKind::ClosureOverflow,
           "projection closure exceeds " + std::to_string(cap_) + " elements");
    }
    bases_.push_back(std::move(basis));
    projectors_.push_back(p);
    return bases_.size() - 1;
  }

  std::vector<SubspaceBasis>& bases() { return bases_; }
  std::vector<Matrix>& projectors() { return projectors_; }

 private:
  std::size_t cap_;
  Tolerances tol_;
  std::vector<SubspaceBasis> bases_;
  std::vector<Matrix> projectors_;
};

}  // namespace

ProjectionLattice generate_projection_lattice(const std::vector<SubspaceBasis>& seeds,
                                              std::size_t cap, const Tolerances& tol) {
  if (seeds.empty()) fail(ErrorKind::InvalidArgument, "closure needs at least one seed subspace");
  const std::size_t d = seeds.front().dimension();
  for (const auto& seed : seeds) {
    if (seed.dimension() != d) fail(ErrorKind::DimensionMismatch, "seed subspaces differ in dimension");
  }
  if (cap < 2) fail(ErrorKind::InvalidArgument, "closure cap must be at least 2");

  ClosureBuilder builder(cap, tol);
  builder.intern(SubspaceBasis::zero(d));
  builder.intern(SubspaceBasis::full(d));
  std::vector<std::size_t> seed_index;
  for (const auto& seed : seeds) seed_index.push_back(builder.intern(seed));

  std::vector<std::size_t> ortho_of;
  for (std::size_t i = 0; i < builder.bases().size(); ++i) {
    const SubspaceBasis x = builder.bases()[i];
    const std::size_t complement = builder.intern(subspace_ortho(x, tol));
    if (ortho_of.size() <= i) ortho_of.resize(i + 1);
    ortho_of[i] = complement;
    for (std::size_t j = 0; j < i; ++j) {
      const SubspaceBasis y = builder.bases()[j];
      builder.intern(subspace_meet(x, y, tol));
      builder.intern(subspace_join(x, y, tol));
    }
  }

  auto& bases = builder.bases();
  auto& projectors = builder.projectors();
  const std::size_t n = bases.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return bases[a].rank() < bases[b].rank(); });
  std::vector<Element> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = static_cast<Element>(k);

  OrderData data;
  data.size = n;
  data.leq.assign(n * n, 0);
  data.ortho.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element pa = position[a];
    data.ortho[pa] = position[ortho_of[a]];
    for (std::size_t b = 0; b < n; ++b) {
      if (bases[a].rank() > bases[b].rank()) continue;
      const double residual = max_abs(projectors[b] * projectors[a] - projectors[a]);
      if (residual < tol.subspace_equal) data.leq[std::size_t(pa) * n + position[b]] = 1;
    }
  }
  data.bottom = position[0];
  data.top = position[1];

  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = "x" + std::to_string(k);
  labels[data.bottom] = "0";
  labels[data.top] = "1";
  std::vector<bool> named(n, false);
  named[data.bottom] = named[data.top] = true;
  for (std::size_t s = 0; s < seed_index.size(); ++s) {
    const Element e = position[seed_index[s]];
    if (!named[e]) {
      labels[e] = "s" + std::to_string(s);
      named[e] = true;
    }
  }
  for (std::size_t s = 0; s < seed_index.size(); ++s) {
    const Element e = data.ortho[position[seed_index[s]]];
    if (!named[e]) {
      labels[e] = "~s" + std::to_string(s);
      named[e] = true;
    }
  }

  OrthoLattice lattice = [&] {
    try {
      return OrthoLattice::from_order(data, labels);
    } catch (const Error& e) {
      fail(ErrorKind::IllConditioned, std::string("closure is not a lattice numerically: ") + e.what());
    }
  }();
  for (const auto& report : validate_ortholattice(lattice)) {
    if (!report.holds) fail(ErrorKind::IllConditioned, "closure violates " + report.detail);
  }

  ProjectionLattice out{std::move(lattice), {}, {}};
  out.embedding.reserve(n);
  out.projectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t source = order[k];
    Matrix p = projectors[source];
    p = (0.5 * (p + p.adjoint())).eval();
    out.projectors.emplace_back(std::move(p), tol);
    out.embedding.push_back(bases[source]);
  }
  return out;
}

State born_state_on_lattice(const DensityMatrix& rho, const ProjectionLattice& closure,
                            const Tolerances& tol) {
  State state;
  state.approximate = true;
  state.values.reserve(closure.projectors.size());
  for (const auto& p : closure.projectors) {
    state.values.push_back(round_to_decimal(born(rho, p, tol), 12));
  }
  return state;
}

DensityMatrix random_density(std::size_t dimension, std::uint64_t seed) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  Gaussian gauss(seed);
  const Matrix g = gauss.matrix(dimension, dimension);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

Projection random_projection(std::size_t dimension, std::size_t rank, std::uint64_t seed) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  if (rank > dimension) fail(ErrorKind::InvalidArgument, "rank exceeds dimension");
  const auto d = static_cast<Eigen::Index>(dimension);
  if (rank == 0) return Projection::zero(dimension);
  Gaussian gauss(seed);
  const Matrix g = gauss.matrix(dimension, rank);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, static_cast<Eigen::Index>(rank));
  Matrix p = q * q.adjoint();
  p = (0.5 * (p + p.adjoint())).eval();
  return Projection(std::move(p));
}

Matrix random_unitary(std::size_t dimension, std::uint64_t seed) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  const auto d = static_cast<Eigen::Index>(dimension);
  Gaussian gauss(seed);
  const Matrix g = gauss.matrix(dimension, dimension);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "mat " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", m(i, j).real(), m(i, j).imag());
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

Complex parse_complex(const detail::Line& line, const detail::Token& token) {
  const std::string text(token.text);
  const char* begin = text.c_str();
  char* end = nullptr;
  const double first = std::strtod(begin, &end);
  auto bad = [&]() -> Complex {
    throw ParseError(line.number, token.column, "malformed complex entry '" + text + "'");
  };
  if (end == begin) return bad();
  if (*end == '\0') return {first, 0.0};
  if (*end == 'i' && end[1] == '\0') return {0.0, first};
  if (*end != '+' && *end != '-') return bad();
  const char* imag_begin = end;
  const double second = std::strtod(imag_begin, &end);
  if (end == imag_begin || *end != 'i' || end[1] != '\0') return bad();
  return {first, second};
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document; expected 'mat <rows> <cols>'");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0].text != "mat") {
    throw ParseError(header.number, header.tokens[0].column, "expected 'mat <rows> <cols>'");
  }
  const auto rows = detail::parse_index(header, 1);
  const auto cols = detail::parse_index(header, 2);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::size_t k = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (const auto& token : lines[li].tokens) {
      if (k >= rows * cols) throw ParseError(lines[li].number, token.column, "too many entries");
      m(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) =
          parse_complex(lines[li], token);
      ++k;
    }
  }
  if (k != rows * cols) {
    throw ParseError(lines.back().number, 1, "expected " + std::to_string(rows * cols) +
                                                 " entries, found " + std::to_string(k));
  }
  return m;
}

}  // namespace oml::hilbert
