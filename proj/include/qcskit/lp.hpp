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

#pragma once

#include "qcskit/common.hpp"

#include <vector>

namespace qcskit {

/// lo <= a.x <= hi over free variables x. Either bound may be infinite;
/// lo <= hi is required.
struct LpSlab {
  RealVector a;
  double lo = -kInf;
  double hi = kInf;
};

struct LpEquality {
  RealVector a;
  double value = 0.0;
};

/// Dense LP: minimize objective.x subject to slabs and equalities.
struct LpProblem {
  RealVector objective;
  std::vector<LpSlab> slabs;
  std::vector<LpEquality> equalities;

  Index variables() const { return objective.size(); }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

/// Optimal carries value and point. Unbounded carries a feasible base point
/// and an improving recession ray (objective.ray < 0, ray respects every
/// constraint's recession condition).
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  RealVector point;
  RealVector ray;
  long iterations = 0;
};

/// Simplex exceeded its pivot cap. An engine bug, not a math answer.
struct LpCapExceeded : Error {
  using Error::Error;
};

inline constexpr Index kMaxLpVariables = 4096;
inline constexpr Index kMaxLpSlabs = 16384;
inline constexpr long kLpIterationCap = 1000000;

/// Two-phase dense simplex with Bland's anti-cycling rule. Deterministic for
/// identical input. Slabs with two finite bounds expand to two one-sided rows
/// internally.
LpOutcome solve_lp(const LpProblem& problem);

}  // namespace qcskit
