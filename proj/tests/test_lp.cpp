// Copyright 2026 The qcskit developers
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

#include "qcskit/lp.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace qcskit;
using namespace qcskit::testing;

namespace {

RealVector vec(std::initializer_list<double> vals) {
  RealVector v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

/// Random feasible bounded slab problem: two-sided slabs around a known
/// interior point, with enough independent directions to bound the space.
LpProblem random_bounded_problem(std::mt19937_64& rng, Index n, Index slabs) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> width(0.2, 2.0);
  LpProblem p;
  p.objective = RealVector::NullaryExpr(n, [&](Index) { return gauss(rng); });
  RealVector x0 = RealVector::NullaryExpr(n, [&](Index) { return gauss(rng); });
  for (Index s = 0; s < slabs; ++s) {
    RealVector a;
    if (s < n) {  // coordinate slabs guarantee boundedness
      a = RealVector::Zero(n);
      a(s) = 1.0;
    } else {
      a = RealVector::NullaryExpr(n, [&](Index) { return gauss(rng); });
    }
    const double mid = a.dot(x0);
    p.slabs.push_back({a, mid - width(rng), mid + width(rng)});
  }
  return p;
}

bool point_feasible(const LpProblem& p, const RealVector& x, double tol) {
  for (const auto& s : p.slabs) {
    const double v = s.a.dot(x);
    if (std::isfinite(s.lo) && v < s.lo - tol) return false;
    if (std::isfinite(s.hi) && v > s.hi + tol) return false;
  }
  for (const auto& e : p.equalities)
    if (std::abs(e.a.dot(x) - e.value) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("simplex basics") {
  SUBCASE("minimize x over 0 <= x <= 1") {
    LpProblem p;
    p.objective = vec({1.0});
    p.slabs.push_back({vec({1.0}), 0.0, 1.0});
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == doctest::Approx(0.0));
    CHECK(out.point(0) == doctest::Approx(0.0));
  }
  SUBCASE("minimize x over 0 <= -x <= 1") {
    LpProblem p;
    p.objective = vec({1.0});
    p.slabs.push_back({vec({-1.0}), 0.0, 1.0});
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == doctest::Approx(-1.0));
  }
  SUBCASE("minimize x with no constraints is unbounded with ray -1") {
    LpProblem p;
    p.objective = vec({1.0});
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Unbounded);
    CHECK(out.ray(0) < 0.0);
    CHECK(p.objective.dot(out.ray) < -1e-10);
  }
  SUBCASE("equalities participate") {
    LpProblem p;
    p.objective = vec({1.0, 0.0});
    p.equalities.push_back({vec({1.0, 1.0}), 2.0});
    p.slabs.push_back({vec({0.0, 1.0}), 0.0, 1.0});
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == doctest::Approx(1.0));  // x = 2 - y, y <= 1
  }
  SUBCASE("one-sided slabs") {
    LpProblem p;
    p.objective = vec({1.0});
    p.slabs.push_back({vec({1.0}), 3.0, kInf});
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == doctest::Approx(3.0));
  }
}

TEST_CASE("input validation") {
  LpProblem p;
  p.objective = vec({1.0});
  SUBCASE("NaN objective") {
    p.objective(0) = std::nan("");
    CHECK_THROWS_AS(solve_lp(p), ValidationError);
  }
  SUBCASE("infinite slab vector") {
    p.slabs.push_back({vec({kInf}), 0.0, 1.0});
    CHECK_THROWS_AS(solve_lp(p), ValidationError);
  }
  SUBCASE("lo > hi") {
    p.slabs.push_back({vec({1.0}), 2.0, 1.0});
    CHECK_THROWS_AS(solve_lp(p), ValidationError);
  }
  SUBCASE("wrong-signed infinite bound") {
    p.slabs.push_back({vec({1.0}), kInf, kInf});
    CHECK_THROWS_AS(solve_lp(p), ValidationError);
  }
}

TEST_CASE("handcrafted unbounded and infeasible corpus") {
  struct Case {
    LpProblem p;
    LpStatus expect;
  };
  std::vector<Case> corpus;

  // Unbounded: free coordinate not touched by constraints.
  {
    LpProblem p;
    p.objective = vec({0.0, 1.0});
    p.slabs.push_back({vec({1.0, 0.0}), 0.0, 1.0});
    corpus.push_back({p, LpStatus::Unbounded});
  }
  // Unbounded: one-sided slab leaves a direction open.
  {
    LpProblem p;
    p.objective = vec({-1.0});
    p.slabs.push_back({vec({1.0}), 0.0, kInf});
    corpus.push_back({p, LpStatus::Unbounded});
  }
  // Unbounded: objective along the lineality of two parallel slabs.
  {
    LpProblem p;
    p.objective = vec({1.0, 1.0});
    p.slabs.push_back({vec({1.0, -1.0}), -1.0, 1.0});
    corpus.push_back({p, LpStatus::Unbounded});
  }
  // Infeasible: contradictory equalities.
  {
    LpProblem p;
    p.objective = vec({1.0, 1.0});
    p.equalities.push_back({vec({1.0, 1.0}), 1.0});
    p.equalities.push_back({vec({1.0, 1.0}), 2.0});
    corpus.push_back({p, LpStatus::Infeasible});
  }
  // Infeasible: disjoint slabs on the same direction.
  {
    LpProblem p;
    p.objective = vec({1.0});
    p.slabs.push_back({vec({1.0}), 0.0, 1.0});
    p.slabs.push_back({vec({1.0}), 2.0, 3.0});
    corpus.push_back({p, LpStatus::Infeasible});
  }
  // Infeasible: equality off the slab.
  {
    LpProblem p;
    p.objective = vec({1.0, 0.0});
    p.slabs.push_back({vec({1.0, 0.0}), 0.0, 1.0});
    p.equalities.push_back({vec({1.0, 0.0}), 5.0});
    corpus.push_back({p, LpStatus::Infeasible});
  }
  // Scaled and permuted variants fill the twenty-case corpus.
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> scale(0.5, 4.0);
  while (corpus.size() < 20) {
    Case base = corpus[corpus.size() % 6];
    const double s = scale(rng);
    for (auto& slab : base.p.slabs) {
      slab.a *= s;
      if (std::isfinite(slab.lo)) slab.lo *= s;
      if (std::isfinite(slab.hi)) slab.hi *= s;
    }
    corpus.push_back(base);
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    const LpOutcome out = solve_lp(corpus[i].p);
    CHECK(out.status == corpus[i].expect);
    if (out.status == LpStatus::Unbounded) {
      CHECK(corpus[i].p.objective.dot(out.ray) < -1e-10);
      CHECK(point_feasible(corpus[i].p, out.point, 1e-8));
      // The ray respects every recession condition.
      for (const auto& s : corpus[i].p.slabs) {
        const double d = s.a.dot(out.ray);
        if (std::isfinite(s.lo) && std::isfinite(s.hi)) CHECK(std::abs(d) <= 1e-8);
        else if (std::isfinite(s.lo)) CHECK(d >= -1e-8);
        else if (std::isfinite(s.hi)) CHECK(d <= 1e-8);
      }
    }
  }
}

TEST_CASE("strong duality spot check against vertex enumeration") {
  std::mt19937_64 rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 2 + static_cast<Index>(trial % 3);  // 2..4 variables
    const Index slabs = n + 2 + static_cast<Index>(trial % 3);
    const LpProblem p = random_bounded_problem(rng, n, slabs);
    const LpOutcome out = solve_lp(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(point_feasible(p, out.point, 1e-8));
    const auto oracle = vertex_enumeration_minimum(p);
    REQUIRE(oracle.has_value());
    CHECK(out.value == doctest::Approx(*oracle).epsilon(1e-6));
    ++solved;
  }
  CHECK(solved == 200);
}

TEST_CASE("constraint permutation does not change the optimum") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    LpProblem p = random_bounded_problem(rng, 3, 7);
    const LpOutcome a = solve_lp(p);
    std::reverse(p.slabs.begin(), p.slabs.end());
    const LpOutcome b = solve_lp(p);
    REQUIRE(a.status == LpStatus::Optimal);
    REQUIRE(b.status == LpStatus::Optimal);
    CHECK(std::abs(a.value - b.value) <= 1e-8 * std::max(1.0, std::abs(a.value)));
  }
}

TEST_CASE("determinism: identical input gives identical output") {
  std::mt19937_64 rng(55);
  const LpProblem p = random_bounded_problem(rng, 4, 9);
  const LpOutcome a = solve_lp(p);
  const LpOutcome b = solve_lp(p);
  CHECK(a.value == b.value);
  CHECK((a.point - b.point).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.iterations == b.iterations);
}
