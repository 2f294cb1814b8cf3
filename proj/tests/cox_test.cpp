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


#include <gtest/gtest.h>

#include <cmath>

#include "oml/cox.hpp"
#include "oml/error.hpp"
#include "oml/formats.hpp"
#include "oml/states.hpp"
#include "oracles.hpp"

namespace oml::cox {
namespace {

ErrorKind kind_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Internal;
}

TEST(Grid, Validation) {
  EXPECT_EQ(kind_of([] { GridFunction g(3, 1.0, std::vector<double>(8, 0.0)); }), ErrorKind::Validation);
  // f(x, 0) != x.
  EXPECT_EQ(kind_of([] { GridFunction::sample([](double x, double y) { return x + y + 0.1; }, 9); }),
            ErrorKind::Validation);
  // Not strictly increasing in y.
  EXPECT_EQ(kind_of([] { GridFunction::sample([](double x, double y) { return x + y * (y - 0.5); }, 9); }),
            ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { GridFunction::builtin("product"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(builtin_names(), (std::vector<std::string>{"sum", "sumprod", "sumsq"}));
}

TEST(Grid, BilinearInterpolation) {
  const auto f = GridFunction::builtin("sumprod", 5);
  EXPECT_DOUBLE_EQ(f(0.25, 0.5), 0.25 + 0.5 + 0.125);
  // Between grid lines xy is interpolated, not evaluated.
  const double x = 0.1, y = 0.3;
  const double lx = 0.0, hx = 0.25, ly = 0.25, hy = 0.5;
  const auto g = [](double a, double b) { return a + b + a * b; };
  const double tx = (x - lx) / (hx - lx), ty = (y - ly) / (hy - ly);
  const double expected = (1 - tx) * (1 - ty) * g(lx, ly) + tx * (1 - ty) * g(hx, ly) +
                          (1 - tx) * ty * g(lx, hy) + tx * ty * g(hx, hy);
  EXPECT_NEAR(f(x, y), expected, 1e-15);
  EXPECT_EQ(kind_of([&] { f(1.5, 0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { f(-0.1, 0.0); }), ErrorKind::Domain);
}

TEST(Grid, FormatRoundTrip) {
  const auto f = GridFunction::builtin("sumsq", 9, 2.0);
  const auto g = parse_grid(format_grid(f));
  EXPECT_EQ(g.points(), 9u);
  EXPECT_EQ(g.x_max(), 2.0);
  EXPECT_EQ(g.values(), f.values());
  EXPECT_EQ(kind_of([] { parse_grid("grid 1 1\n0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_grid("grid 2 1\n0 1\n1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(parse_grid(testing::read_fixture("sum5.grid")).values(), GridFunction::builtin("sum", 5).values());
}

TEST(Residual, SumIsExactlyAssociative) {
  for (std::size_t n : {65u, 1025u}) {
    const auto r = associativity_residual(GridFunction::builtin("sum", n));
    EXPECT_EQ(r.residual, 0.0) << n;
    EXPECT_GT(r.admissible, 0u);
    EXPECT_GT(r.skipped, 0u);
    EXPECT_EQ(r.admissible + r.skipped, n * n * n);
  }
}

TEST(Residual, SumprodWithinInterpolationError) {
  EXPECT_LT(associativity_residual(GridFunction::builtin("sumprod", 257)).residual, 1e-6);
}

TEST(Residual, SumsqWitnessIsReal) {
  const auto f = GridFunction::builtin("sumsq", 129);
  const auto r = associativity_residual(f);
  EXPECT_GT(r.residual, 0.01);
  const double x = f.x(r.worst[0]), y = f.x(r.worst[1]), z = f.x(r.worst[2]);
  const double direct = std::abs(f(f(x, y), z) - f(x, f(y, z)));
  EXPECT_DOUBLE_EQ(direct, r.residual);
  // Closed-form sumsq on the same triple agrees up to interpolation error.
  const auto g = [](double a, double b) { return a + b * b; };
  EXPECT_NEAR(std::abs(g(g(x, y), z) - g(x, g(y, z))), r.residual, 1e-3);
}

TEST(Residual, ExhaustiveOracleOnSmallGrid) {
  const auto f = GridFunction::builtin("sumsq", 17);
  double worst = 0.0;
  std::size_t admissible = 0;
  for (std::size_t i = 0; i < 17; ++i) {
    for (std::size_t j = 0; j < 17; ++j) {
      for (std::size_t k = 0; k < 17; ++k) {
        const double x = f.x(i), y = f.x(j), z = f.x(k);
        const double xy = f.at(i, j), yz = f.at(j, k);
        if (xy > 1.0 || yz > 1.0) continue;
        ++admissible;
        worst = std::max(worst, std::abs(f(xy, z) - f(x, yz)));
      }
    }
  }
  const auto r = associativity_residual(f);
  EXPECT_EQ(r.admissible, admissible);
  EXPECT_DOUBLE_EQ(r.residual, worst);
}

TEST(Extraction, SumIsLinear) {
  const auto f = GridFunction::builtin("sum", 257, 4.0);
  const auto rep = extract_additive_representation(f, 1.0);
  EXPECT_LT(rep.residual, 1e-9);
  for (std::size_t i = 1; i < f.points(); ++i) {
    EXPECT_NEAR(rep.h[i] / f.x(i), 1.0, 1e-6) << i;
  }
  EXPECT_EQ(rep.h[0], 0.0);
}

TEST(Extraction, SumprodIsLogarithmic) {
  const auto f = GridFunction::builtin("sumprod", 1025);
  const auto rep = extract_additive_representation(f, 1.0);
  EXPECT_LT(rep.residual, 1e-4);
  for (std::size_t i = 256; i < f.points(); ++i) {
    EXPECT_NEAR(rep.h[i] * std::log(2.0) / std::log1p(f.x(i)), 1.0, 1e-4) << i;
  }
}

TEST(Extraction, HIsMonotoneAndKnotsConsistent) {
  for (const char* name : {"sum", "sumprod"}) {
    const auto rep = extract_additive_representation(GridFunction::builtin(name, 513), 0.5);
    for (std::size_t i = 1; i < rep.h.size(); ++i) EXPECT_LT(rep.h[i - 1], rep.h[i]) << name;
    for (std::size_t i = 1; i < rep.knots.size(); ++i) {
      EXPECT_LT(rep.knots[i - 1].x, rep.knots[i].x);
      EXPECT_LT(rep.knots[i - 1].h, rep.knots[i].h);
    }
    EXPECT_GT(rep.pairs, 0u);
  }
}

TEST(Extraction, Preconditions) {
  EXPECT_EQ(kind_of([] { extract_additive_representation(GridFunction::builtin("sumsq", 129), 1.0); }),
            ErrorKind::Precondition);
  const auto f = GridFunction::builtin("sum", 129);
  EXPECT_EQ(kind_of([&] { extract_additive_representation(f, 0.0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { extract_additive_representation(f, 2.0); }), ErrorKind::InvalidArgument);
}

TEST(Transport, IdentityAndScale) {
  const auto f = GridFunction::builtin("sumprod", 65);
  EXPECT_EQ(rescaling_transport(f, MonotoneMap::identity()).values(), f.values());
  const auto doubled = rescaling_transport(GridFunction::builtin("sum", 65), MonotoneMap::scale(2.0));
  for (std::size_t i = 0; i < 65; ++i) {
    for (std::size_t j = 0; j < 65; ++j) EXPECT_NEAR(doubled.at(i, j), doubled.x(i) + doubled.x(j), 1e-12);
  }
}

TEST(Transport, SquareMatchesClosedForm) {
  const auto g = rescaling_transport(GridFunction::builtin("sum"), MonotoneMap::power(2.0));
  for (std::size_t i = 0; i < g.points(); i += 32) {
    for (std::size_t j = 0; j < g.points(); j += 32) {
      const double root = std::sqrt(g.x(i)) + std::sqrt(g.x(j));
      EXPECT_NEAR(g.at(i, j), root * root, 1e-12);
    }
  }
  const auto rep = extract_additive_representation(g, 1.0);
  EXPECT_LT(rep.residual, 1e-4);
  for (std::size_t i = 256; i < g.points(); ++i) EXPECT_NEAR(rep.h[i], std::sqrt(g.x(i)), 1e-3);
}

TEST(Transport, ExtractionSurvivesRescaling) {
  const std::vector<MonotoneMap> maps{MonotoneMap::power(2.0), MonotoneMap::power(0.5), MonotoneMap::scale(2.0),
                                      MonotoneMap::from_samples({0, 0.5, 1}, {0, 0.8, 1.2})};
  std::size_t checked = 0;
  for (const char* name : {"sum", "sumprod"}) {
    const auto f = GridFunction::builtin(name);
    EXPECT_LT(extract_additive_representation(f, 0.25).residual, 1e-4) << name;
    for (const auto& g : maps) {
      const auto moved = rescaling_transport(f, g);
      if (associativity_residual(moved).residual >= kAssociativityThreshold) continue;
      ++checked;
      EXPECT_LT(extract_additive_representation(moved, 0.25).residual, 1e-4) << name << " " << g.name();
    }
  }
  EXPECT_GE(checked, 6u);
}

TEST(Transport, Preconditions) {
  const auto f = GridFunction::builtin("sum", 33);
  EXPECT_EQ(kind_of([&] { rescaling_transport(f, MonotoneMap::scale(0.5)); }), ErrorKind::InvalidArgument);
  const MonotoneMap shifted("shift", [](double t) { return t + 1; }, [](double t) { return t - 1; });
  EXPECT_EQ(kind_of([&] { rescaling_transport(f, shifted); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { MonotoneMap::scale(-1.0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { MonotoneMap::power(0.0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { MonotoneMap::from_samples({0, 1, 0.5}, {0, 1, 2}); }), ErrorKind::InvalidArgument);
}

TEST(MonotoneMapTest, FromSamplesInverts) {
  const auto m = MonotoneMap::from_samples({0, 0.5, 1}, {0, 1, 1.5});
  EXPECT_DOUBLE_EQ(m(0.25), 0.5);
  EXPECT_DOUBLE_EQ(m(2.0), 2.5);
  for (double t = 0; t <= 2.0; t += 0.125) EXPECT_NEAR(m.inverse(m(t)), t, 1e-12);
}

TEST(CoxRules, HoldOnEveryVertex) {
  for (const auto& l : {gen_boolean(3), gen_mo(2), gen_mo(3)}) {
    const StatePolytope p(l);
    for (const auto& v : p.vertices()) {
      const auto r = cox_rules_check(l, v);
      EXPECT_TRUE(r.holds) << r.detail;
      EXPECT_EQ(r.law, Law::CoxFamilyAdditivity);
    }
  }
}

TEST(CoxRules, ComplementViolation) {
  const auto l = gen_mo(2);
  State s;
  s.values = {Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1)};
  const auto r = cox_rules_check(l, s);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.law, Law::CoxComplement);
  ASSERT_FALSE(r.witness.empty());
  EXPECT_EQ(r.witness[0], *l.find("a2"));
}

TEST(CoxRules, OrderAndNonnegativity) {
  const auto l = gen_boolean(2);
  State s;
  s.values = {Rational(0), Rational(-1, 2), Rational(1, 2), Rational(1)};
  EXPECT_EQ(cox_rules_check(l, s).law, Law::CoxNonnegative);
  s.values = {Rational(0), Rational(3, 4), Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(cox_rules_check(l, s).law, Law::CoxOrderPreserving);
  s.values = {Rational(0), Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(kind_of([&] { cox_rules_check(l, s); }), ErrorKind::MissingElement);
}

TEST(CoxRules, AgreesWithStateValidation) {
  const auto l = gen_mo(2);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      State s;
      s.values = {Rational(0), Rational(a, 4), Rational(4 - a, 4), Rational(b, 4), Rational(4 - b, 4), Rational(1)};
      EXPECT_EQ(cox_rules_check(l, s).holds, validate_state(l, s).holds);
    }
  }
}

}  // namespace
}  // namespace oml::cox
