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


#include "oml/cox.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <thread>

// Makes isnan visible to pchip.hpp.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "detail/text.hpp"
#include "oml/error.hpp"

namespace oml::cox {

namespace {

constexpr double kSnap = 1e-9;

// Grid cell containing `t` (in units of the step) and the offset inside it.
struct Cell {
  std::size_t index;
  double frac;
};

Cell locate(double t, std::size_t points) {
  if (t <= 0.0) return {0, 0.0};
  const double last = static_cast<double>(points - 1);
  if (t >= last) return {points - 1, 0.0};
  double base = std::floor(t);
  double frac = t - base;
  if (frac < kSnap) {
    frac = 0.0;
  } else if (frac > 1.0 - kSnap) {
    base += 1.0;
    frac = 0.0;
  }
  return {static_cast<std::size_t>(base), frac};
}

double domain_slack(double x_max) { return 1e-12 * std::max(1.0, x_max); }

}  // namespace

GridFunction::GridFunction(std::size_t points, double x_max, std::vector<double> values)
    : points_(points), x_max_(x_max), values_(std::move(values)) {
  if (points_ < 2) fail(ErrorKind::Validation, "a grid needs at least 2 points per axis");
  if (!(x_max_ > 0.0) || !std::isfinite(x_max_)) fail(ErrorKind::Validation, "x_max must be positive");
  if (values_.size() != points_ * points_) {
    fail(ErrorKind::Validation, "expected " + std::to_string(points_ * points_) + " samples, got " +
                                    std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) fail(ErrorKind::Validation, "grid samples must be finite");
  }
  const double identity_tol = 1e-9 * std::max(1.0, x_max_);
  for (std::size_t i = 0; i < points_; ++i) {
    if (std::abs(at(i, 0) - x(i)) > identity_tol) {
      fail(ErrorKind::Validation, "f(x, 0) != x at grid index " + std::to_string(i));
    }
    for (std::size_t j = 0; j + 1 < points_; ++j) {
      if (!(at(i, j + 1) > at(i, j)) || !(at(j + 1, i) > at(j, i))) {
        fail(ErrorKind::Validation,
             "f is not strictly increasing near grid point (" + std::to_string(i) + ", " +
                 std::to_string(j) + ")");
      }
    }
  }
}

GridFunction GridFunction::sample(const std::function<double(double, double)>& f, std::size_t points,
                                  double x_max) {
  if (points < 2) fail(ErrorKind::InvalidArgument, "a grid needs at least 2 points per axis");
  if (!(x_max > 0.0)) fail(ErrorKind::InvalidArgument, "x_max must be positive");
  const double h = x_max / static_cast<double>(points - 1);
  std::vector<double> values(points * points);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = 0; j < points; ++j) {
      values[i * points + j] = f(static_cast<double>(i) * h, static_cast<double>(j) * h);
    }
  }
  return GridFunction(points, x_max, std::move(values));
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"sum", "sumprod", "sumsq"};
  return names;
}

GridFunction GridFunction::builtin(std::string_view name, std::size_t points, double x_max) {
  if (name == "sum") return sample([](double x, double y) { return x + y; }, points, x_max);
  if (name == "sumprod") return sample([](double x, double y) { return x + y + x * y; }, points, x_max);
  if (name == "sumsq") return sample([](double x, double y) { return x + y * y; }, points, x_max);
  fail(ErrorKind::InvalidArgument, "unknown built-in function '" + std::string(name) + "'");
}

double GridFunction::operator()(double x, double y) const {
  const double slack = domain_slack(x_max_);
  if (x < -slack || y < -slack || x > x_max_ + slack || y > x_max_ + slack) {
    fail(ErrorKind::Domain, "argument outside [0, x_max]");
  }
  const double h = step();
  const Cell cx = locate(x / h, points_);
  const Cell cy = locate(y / h, points_);
  const std::size_t i1 = std::min(cx.index + 1, points_ - 1);
  const std::size_t j1 = std::min(cy.index + 1, points_ - 1);
  const double low = (1.0 - cy.frac) * at(cx.index, cy.index) + cy.frac * at(cx.index, j1);
  if (cx.frac == 0.0) return low;
  const double high = (1.0 - cy.frac) * at(i1, cy.index) + cy.frac * at(i1, j1);
  return (1.0 - cx.frac) * low + cx.frac * high;
}

std::string format_grid(const GridFunction& f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "grid %zu %.17g\n", f.points(), f.x_max());
  std::string out = buf;
  for (std::size_t i = 0; i < f.points(); ++i) {
    for (std::size_t j = 0; j < f.points(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", f.at(i, j));
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

GridFunction parse_grid(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document; expected 'grid <n> <x_max>'");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0].text != "grid") {
    throw ParseError(header.number, header.tokens[0].column, "expected 'grid <n> <x_max>'");
  }
  const std::size_t n = detail::parse_index(header, 1);
  const double x_max = detail::parse_double(header, 2);
  if (n < 2 || n > 4097) throw ParseError(header.number, header.tokens[1].column, "grid size must be in [2, 4097]");
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (std::size_t t = 0; t < lines[li].tokens.size(); ++t) {
      if (values.size() == n * n) {
        throw ParseError(lines[li].number, lines[li].tokens[t].column, "too many samples");
      }
      values.push_back(detail::parse_double(lines[li], t));
    }
  }
  if (values.size() != n * n) {
    throw ParseError(lines.back().number, 1, "expected " + std::to_string(n * n) + " samples, found " +
                                                 std::to_string(values.size()));
  }
  return GridFunction(n, x_max, std::move(values));
}

namespace {

// Residual over the triples whose first index lies in [first, last).
ResidualReport residual_rows(const GridFunction& f, std::size_t first, std::size_t last) {
  const std::size_t n = f.points();
  const double h = f.step();
  const double limit = f.x_max() + domain_slack(f.x_max());
  ResidualReport report;
  for (std::size_t i = first; i < last; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = f.at(i, j);
      if (u > limit) {
        report.skipped += (n - j) * n;
        break;
      }
      const Cell cu = locate(u / h, n);
      const std::size_t u1 = std::min(cu.index + 1, n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        const double v = f.at(j, k);
        if (v > limit) {
          report.skipped += n - k;
          break;
        }
        const Cell cv = locate(v / h, n);
        const std::size_t v1 = std::min(cv.index + 1, n - 1);
        const double lhs = (1.0 - cu.frac) * f.at(cu.index, k) + cu.frac * f.at(u1, k);
        const double rhs = (1.0 - cv.frac) * f.at(i, cv.index) + cv.frac * f.at(i, v1);
        const double diff = std::abs(lhs - rhs);
        ++report.admissible;
        if (diff > report.residual) {
          report.residual = diff;
          report.worst = {i, j, k};
        }
      }
    }
  }
  return report;
}

}  // namespace

ResidualReport associativity_residual(const GridFunction& f) {
  const std::size_t n = f.points();
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(n, 16));
  std::vector<ResidualReport> parts(workers);
  std::vector<std::thread> threads;
  // Interleaved row chunks balance the triangular admissible region.
  const std::size_t chunk = 8;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t first = w * chunk; first < n; first += workers * chunk) {
        const auto part = residual_rows(f, first, std::min(n, first + chunk));
        auto& acc = parts[w];
        acc.admissible += part.admissible;
        acc.skipped += part.skipped;
        if (part.residual > acc.residual) {
          acc.residual = part.residual;
          acc.worst = part.worst;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  // Ties resolve to the lexicographically first triple, as a serial scan would.
  ResidualReport report;
  bool any = false;
  for (const auto& part : parts) {
    report.admissible += part.admissible;
    report.skipped += part.skipped;
    if (part.admissible == 0) continue;
    if (!any || part.residual > report.residual ||
        (part.residual == report.residual && part.worst < report.worst)) {
      report.residual = part.residual;
      report.worst = part.worst;
      any = true;
    }
  }
  if (report.admissible == 0) fail(ErrorKind::Domain, "no grid triple stays inside the domain");
  return report;
}

namespace {

double bisect_square_root(const GridFunction& f, double target) {
  double lo = 0.0;
  double hi = target;
  if (!(f(hi, hi) - target > 0.0)) {
    fail(ErrorKind::Domain, "bisection cannot bracket f(x, x) = " + std::to_string(target));
  }
  for (int iter = 0; iter < 200 && hi - lo > kBisectionTolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g = f(mid, mid) - target;
    if (g == 0.0) return mid;
    if (g < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Monotone cubic through the knots, extended linearly with the last secant.
class KnotInterpolant {
 public:
  explicit KnotInterpolant(const std::vector<Knot>& knots)
      : last_(knots.back()), slope_(secant(knots[knots.size() - 2], knots.back())) {
    std::vector<double> xs, hs;
    xs.reserve(knots.size());
    hs.reserve(knots.size());
    for (const auto& k : knots) {
      xs.push_back(k.x);
      hs.push_back(k.h);
    }
    spline_.emplace(std::move(xs), std::move(hs));
  }

  double operator()(double x) const {
    if (x >= last_.x) return last_.h + slope_ * (x - last_.x);
    return (*spline_)(std::max(x, 0.0));
  }

 private:
  static double secant(const Knot& a, const Knot& b) { return (b.h - a.h) / (b.x - a.x); }

  Knot last_;
  double slope_;
  std::optional<boost::math::interpolators::pchip<std::vector<double>>> spline_;
};

}  // namespace

Representation extract_additive_representation(const GridFunction& f, double unit) {
  const double limit = f.x_max() + domain_slack(f.x_max());
  if (!(unit > 0.0) || unit > limit) fail(ErrorKind::InvalidArgument, "unit must lie in (0, x_max]");
  const auto assoc = associativity_residual(f);
  if (assoc.residual >= kAssociativityThreshold) {
    fail(ErrorKind::Precondition,
         "f is not associative on the grid (residual " + std::to_string(assoc.residual) + ")");
  }

  // xs[m] is the point with h = m / 2^level.
  std::vector<double> xs{0.0, std::min(unit, f.x_max())};
  for (;;) {
    const double next = f(xs.back(), xs[1]);
    if (next > limit) break;
    if (!(next > xs.back())) fail(ErrorKind::Precondition, "iterates of the unit do not increase");
    xs.push_back(std::min(next, f.x_max()));
  }

  for (int level = 1; level <= kDyadicLevels; ++level) {
    const std::vector<double> prev = std::move(xs);
    xs = {0.0};
    for (std::size_t m = 1;; ++m) {
      double x;
      if (m % 2 == 0) {
        if (m / 2 >= prev.size()) break;
        x = prev[m / 2];
      } else if (m < prev.size()) {
        x = bisect_square_root(f, prev[m]);
      } else {
        const std::size_t a = std::max<std::size_t>(1, m / 4);
        x = f(prev[a], xs[m - 2 * a]);
        if (x > limit) break;
        x = std::min(x, f.x_max());
      }
      if (!(x > xs.back())) fail(ErrorKind::Precondition, "constructed knots are not strictly increasing");
      xs.push_back(x);
    }
  }
  const double weight = std::ldexp(1.0, -kDyadicLevels);
  std::vector<Knot> knots{{0.0, 0.0}};
  // Halve the bottom interval until it spans at most one grid step.
  std::vector<Knot> bottom;
  Knot first{xs[1], weight};
  while (first.x > f.step() && bottom.size() < 64) {
    first = {bisect_square_root(f, first.x), 0.5 * first.h};
    if (!(first.x > 0.0)) break;
    bottom.push_back(first);
  }
  knots.insert(knots.end(), bottom.rbegin(), bottom.rend());
  for (std::size_t m = 1; m < xs.size(); ++m) knots.push_back({xs[m], static_cast<double>(m) * weight});
  // Knots clamped onto x_max may collide; keep the first.
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [](const Knot& a, const Knot& b) { return a.x == b.x; }),
              knots.end());

  Representation rep;
  rep.knots = std::move(knots);
  if (rep.knots.size() < 4) fail(ErrorKind::Precondition, "too few knots inside the domain");
  const KnotInterpolant h(rep.knots);
  const std::size_t n = f.points();
  rep.h.resize(n);
  for (std::size_t i = 0; i < n; ++i) rep.h[i] = i == 0 ? 0.0 : h(f.x(i));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(rep.h[i + 1] > rep.h[i])) fail(ErrorKind::Precondition, "extracted h is not strictly increasing");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = f.at(i, j);
      if (u > limit) break;
      ++rep.pairs;
      rep.residual = std::max(rep.residual, std::abs(h(u) - rep.h[i] - rep.h[j]));
    }
  }
  return rep;
}

MonotoneMap::MonotoneMap(std::string name, std::function<double(double)> forward,
                         std::function<double(double)> inverse)
    : name_(std::move(name)), forward_(std::move(forward)), inverse_(std::move(inverse)) {}

MonotoneMap MonotoneMap::identity() {
  return MonotoneMap("identity", [](double t) { return t; }, [](double t) { return t; });
}

MonotoneMap MonotoneMap::scale(double c) {
  if (!(c > 0.0)) fail(ErrorKind::InvalidArgument, "scale factor must be positive");
  return MonotoneMap("scale", [c](double t) { return c * t; }, [c](double t) { return t / c; });
}

MonotoneMap MonotoneMap::power(double p) {
  if (!(p > 0.0)) fail(ErrorKind::InvalidArgument, "exponent must be positive");
  return MonotoneMap(
      "power", [p](double t) { return t <= 0.0 ? 0.0 : std::pow(t, p); },
      [p](double t) { return t <= 0.0 ? 0.0 : std::pow(t, 1.0 / p); });
}

namespace {

double piecewise(const std::vector<double>& xs, const std::vector<double>& ys, double t) {
  auto it = std::upper_bound(xs.begin(), xs.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  if (hi == 0) hi = 1;
  if (hi >= xs.size()) hi = xs.size() - 1;
  return ys[hi - 1] + (ys[hi] - ys[hi - 1]) * (t - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
}

}  // namespace

MonotoneMap MonotoneMap::from_samples(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    fail(ErrorKind::InvalidArgument, "need at least two (x, g(x)) samples");
  }
  if (xs.front() != 0.0 || ys.front() != 0.0) fail(ErrorKind::InvalidArgument, "samples must start at (0, 0)");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i + 1] > xs[i]) || !(ys[i + 1] > ys[i])) {
      fail(ErrorKind::InvalidArgument, "samples must be strictly increasing");
    }
  }
  return MonotoneMap(
      "samples", [xs, ys](double t) { return piecewise(xs, ys, t); },
      [xs, ys](double t) { return piecewise(ys, xs, t); });
}

GridFunction rescaling_transport(const GridFunction& f, const MonotoneMap& g) {
  const std::size_t n = f.points();
  const double slack = domain_slack(f.x_max());
  if (std::abs(g(0.0)) > slack) fail(ErrorKind::InvalidArgument, "g(0) must be 0");
  std::vector<double> inverse(n);
  double previous = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double gx = g(f.x(i));
    if (!(gx > previous)) fail(ErrorKind::InvalidArgument, "g is not strictly increasing on the grid");
    previous = gx;
  }
  if (previous < f.x_max() - slack) {
    fail(ErrorKind::InvalidArgument, "g(x_max) must be at least x_max so g^-1 stays in the domain");
  }
  for (std::size_t i = 0; i < n; ++i) inverse[i] = std::clamp(g.inverse(f.x(i)), 0.0, f.x_max());
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = g(f(inverse[i], inverse[j]));
  }
  return GridFunction(n, f.x_max(), std::move(values));
}

namespace {

constexpr std::size_t kMaxFamilies = 1000000;

class FamilyChecker {
 public:
  FamilyChecker(const OrthoLattice& lattice, const State& s, const Rational& tol)
      : lattice_(lattice), s_(s), tol_(tol) {
    for (Element e = 0; e < lattice.size(); ++e) {
      if (e != lattice.bottom()) nonzero_.push_back(e);
    }
  }

  std::optional<LawReport> run() {
    std::vector<Element> family;
    return extend(family, 0, lattice_.bottom(), Rational(0));
  }

 private:
  std::optional<LawReport> extend(std::vector<Element>& family, std::size_t from, Element join,
                                  const Rational& sum) {
    for (std::size_t idx = from; idx < nonzero_.size(); ++idx) {
      const Element e = nonzero_[idx];
      bool orthogonal = true;
      for (Element f : family) {
        if (!lattice_.is_orthogonal(e, f)) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      family.push_back(e);
      const Element next_join = lattice_.join(join, e);
      const Rational next_sum = sum + s_[e];
      if (family.size() >= 2) {
        if (++families_ > kMaxFamilies) {
          fail(ErrorKind::Size, "more than " + std::to_string(kMaxFamilies) + " orthogonal families");
        }
        if (abs(s_[next_join] - next_sum) > tol_) {
          return LawReport::violation(Law::CoxFamilyAdditivity, family,
                                      "s(" + lattice_.label(next_join) + ") = " +
                                          format_rational(s_[next_join]) + " but the family sums to " +
                                          format_rational(next_sum));
        }
      }
      if (auto report = extend(family, idx + 1, next_join, next_sum)) return report;
      family.pop_back();
    }
    return std::nullopt;
  }

  const OrthoLattice& lattice_;
  const State& s_;
  Rational tol_;
  std::vector<Element> nonzero_;
  std::size_t families_ = 0;
};

}  // namespace

LawReport cox_rules_check(const OrthoLattice& lattice, const State& s) {
  if (s.values.size() != lattice.size()) {
    fail(ErrorKind::MissingElement, "state has " + std::to_string(s.values.size()) +
                                        " values for a lattice of " + std::to_string(lattice.size()));
  }
  if (lattice.size() > kMaxExplicitElements) {
    fail(ErrorKind::Size, "cox_rules_check is limited to lattices of at most " +
                              std::to_string(kMaxExplicitElements) + " elements");
  }
  const Rational tol = s.approximate ? approximate_tolerance() : Rational(0);
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    if (s[a] < -tol) {
      return LawReport::violation(Law::CoxNonnegative, {a},
                                  "s(" + lattice.label(a) + ") = " + format_rational(s[a]) + " < 0");
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a != b && lattice.leq(a, b) && s[a] > s[b] + tol) {
        return LawReport::violation(Law::CoxOrderPreserving, {a, b},
                                    lattice.label(a) + " <= " + lattice.label(b) + " but s(" +
                                        lattice.label(a) + ") > s(" + lattice.label(b) + ")");
      }
    }
  }
  if (abs(s[lattice.bottom()]) > tol) {
    return LawReport::violation(Law::CoxNullity, {lattice.bottom()},
                                "s(0) = " + format_rational(s[lattice.bottom()]));
  }
  for (Element a = 0; a < n; ++a) {
    const Rational expected = Rational(1) - s[a];
    if (abs(s[lattice.ortho(a)] - expected) > tol) {
      return LawReport::violation(Law::CoxComplement, {a},
                                  "s(~" + lattice.label(a) + ") = " +
                                      format_rational(s[lattice.ortho(a)]) + ", expected " +
                                      format_rational(expected));
    }
  }
  if (auto report = FamilyChecker(lattice, s, tol).run()) return *report;
  return LawReport::pass(Law::CoxFamilyAdditivity);
}

}  // namespace oml::cox
