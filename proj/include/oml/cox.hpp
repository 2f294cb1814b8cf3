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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "oml/lattice.hpp"
#include "oml/states.hpp"

namespace oml::cox {

inline constexpr std::size_t kDefaultGridPoints = 1025;

/// Two-argument combination function sampled on the square grid
/// x_i = i * x_max / (n - 1). Values may leave [0, x_max]; such samples only
/// mark the edge of the admissible domain.
class GridFunction {
 public:
  /// Throws Validation unless f is strictly increasing in each argument and
  /// f(x, 0) = x on the grid (within 1e-9).
  GridFunction(std::size_t points, double x_max, std::vector<double> values);

  /// Samples `f` on the grid.
  static GridFunction sample(const std::function<double(double, double)>& f,
                             std::size_t points = kDefaultGridPoints, double x_max = 1.0);
  /// Built-ins: "sum" x+y, "sumprod" x+y+xy, "sumsq" x+y^2.
  static GridFunction builtin(std::string_view name, std::size_t points = kDefaultGridPoints,
                              double x_max = 1.0);

  std::size_t points() const noexcept { return points_; }
  double x_max() const noexcept { return x_max_; }
  double step() const noexcept { return x_max_ / static_cast<double>(points_ - 1); }
  double x(std::size_t i) const noexcept { return static_cast<double>(i) * step(); }
  double at(std::size_t i, std::size_t j) const noexcept { return values_[i * points_ + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Bilinear interpolation; arguments must lie in [0, x_max]. Coordinates
  /// within 1e-9 grid steps of a grid line snap onto it.
  double operator()(double x, double y) const;

 private:
  std::size_t points_;
  double x_max_;
  std::vector<double> values_;
};

const std::vector<std::string>& builtin_names();

/// `grid <n> <x_max>` then n rows of n values.
std::string format_grid(const GridFunction& f);
GridFunction parse_grid(std::string_view text);

struct ResidualReport {
  double residual = 0.0;
  std::size_t admissible = 0;
  std::size_t skipped = 0;
  /// Grid indices of the worst admissible triple.
  std::array<std::size_t, 3> worst{0, 0, 0};
};

/// max |f(f(x,y),z) - f(x,f(y,z))| over grid triples whose intermediate
/// values stay in the domain. Throws Domain when no triple is admissible.
ResidualReport associativity_residual(const GridFunction& f);

struct Knot {
  double x;
  double h;
};

struct Representation {
  std::vector<double> h;      // h(x_i) on the grid of the input
  std::vector<Knot> knots;    // points constructed by iteration and bisection
  double residual = 0.0;      // max |h(f(x,y)) - h(x) - h(y)| over grid pairs
  std::size_t pairs = 0;      // grid pairs with f(x,y) in the domain
};

inline constexpr double kAssociativityThreshold = 1e-4;
inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr int kDyadicLevels = 10;

/// Builds h with h(0) = 0, h(unit) = 1 and h(f(x,y)) = h(x) + h(y).
/// Throws Precondition when f is not associative to within
/// kAssociativityThreshold or the knots fail to increase, Domain when a
/// bisection cannot bracket its target, InvalidArgument for a unit outside
/// (0, x_max].
Representation extract_additive_representation(const GridFunction& f, double unit);

/// Strictly increasing map with g(0) = 0, given by forward and inverse.
class MonotoneMap {
 public:
  MonotoneMap(std::string name, std::function<double(double)> forward,
              std::function<double(double)> inverse);

  static MonotoneMap identity();
  /// t -> c t, c > 0.
  static MonotoneMap scale(double c);
  /// t -> t^p, p > 0.
  static MonotoneMap power(double p);
  /// Piecewise linear through (xs[i], ys[i]); xs[0] = ys[0] = 0, both
  /// strictly increasing. Extends linearly past the last sample.
  static MonotoneMap from_samples(std::vector<double> xs, std::vector<double> ys);

  const std::string& name() const noexcept { return name_; }
  double operator()(double t) const { return forward_(t); }
  double inverse(double t) const { return inverse_(t); }

 private:
  std::string name_;
  std::function<double(double)> forward_;
  std::function<double(double)> inverse_;
};

/// f_g(x, y) = g(f(g^-1(x), g^-1(y))) on the same grid. Throws
/// InvalidArgument unless g(0) = 0, g is strictly increasing on the grid and
/// g(x_max) >= x_max.
GridFunction rescaling_transport(const GridFunction& f, const MonotoneMap& g);

/// Deduced rules on every element and every pairwise orthogonal family of
/// nonzero elements: s >= 0, order preservation, s(0) = 0,
/// s(~a) = 1 - s(a), and s(V F) = sum over F. Reports the first failure in
/// that order of rules, or a pass tagged CoxFamilyAdditivity. Approximate
/// states are compared with approximate_tolerance(). Throws MissingElement
/// when `s` does not cover the lattice, Size past 10^6 families.
LawReport cox_rules_check(const OrthoLattice& lattice, const State& s);

}  // namespace oml::cox
