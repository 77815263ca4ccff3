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

#include <cmath>
#include <sstream>
#include <vector>

namespace qcskit {

namespace {

constexpr double kEpsCost = 1e-9;   // reduced-cost threshold for entering
constexpr double kEpsPivot = 1e-9;  // smallest usable pivot element
constexpr double kFeasTol = 1e-8;   // phase-1 residual above which: infeasible

enum class Sense { Le, Ge, Eq };

struct Row {
  RealVector a;
  double rhs;
  Sense sense;
};

bool finite(double x) { return std::isfinite(x); }

void validate(const LpProblem& p) {
  const Index n = p.variables();
  if (n < 1) throw ValidationError("solve_lp: empty objective");
  if (n > kMaxLpVariables) throw ValidationError("solve_lp: variable count exceeds limit");
  if (static_cast<Index>(p.slabs.size()) > kMaxLpSlabs)
    throw ValidationError("solve_lp: slab count exceeds limit");
  for (Index k = 0; k < n; ++k)
    if (!finite(p.objective(k))) throw ValidationError("solve_lp: objective has NaN or infinity");
  for (const auto& s : p.slabs) {
    if (s.a.size() != n) throw DimensionError("solve_lp: slab vector length mismatch");
    for (Index k = 0; k < n; ++k)
      if (!finite(s.a(k))) throw ValidationError("solve_lp: slab vector has NaN or infinity");
    if (std::isnan(s.lo) || std::isnan(s.hi)) throw ValidationError("solve_lp: NaN slab bound");
    if (s.lo == kInf || s.hi == -kInf)
      throw ValidationError("solve_lp: slab bound has wrong-signed infinity");
    if (s.lo > s.hi) throw ValidationError("solve_lp: slab has lo > hi");
  }
  for (const auto& e : p.equalities) {
    if (e.a.size() != n) throw DimensionError("solve_lp: equality vector length mismatch");
    for (Index k = 0; k < n; ++k)
      if (!finite(e.a(k))) throw ValidationError("solve_lp: equality vector has NaN or infinity");
    if (!finite(e.value)) throw ValidationError("solve_lp: equality value not finite");
  }
}

/// Full-tableau two-phase simplex over the split nonnegative variables.
class Simplex {
 public:
  Simplex(const LpProblem& p, const std::vector<Row>& rows) : n_(p.variables()) {
    const Index m = static_cast<Index>(rows.size());
    Index slacks = 0;
    for (const auto& r : rows)
      if (r.sense != Sense::Eq) ++slacks;
    slack_start_ = 2 * n_;
    art_start_ = slack_start_ + slacks;
    Index arts = 0;
    for (const auto& r : rows)
      if (!(r.sense == Sense::Le)) ++arts;  // Ge and Eq rows need artificials
    ncols_ = art_start_ + arts;
    T_ = RealMatrix::Zero(m, ncols_ + 1);
    basis_.assign(static_cast<std::size_t>(m), -1);
    banned_.assign(static_cast<std::size_t>(ncols_), false);

    Index slack_col = slack_start_;
    Index art_col = art_start_;
    for (Index r = 0; r < m; ++r) {
      RealVector a = rows[static_cast<std::size_t>(r)].a;
      double rhs = rows[static_cast<std::size_t>(r)].rhs;
      Sense sense = rows[static_cast<std::size_t>(r)].sense;
      if (rhs < 0 || (rhs == 0.0 && sense == Sense::Ge)) {
        // Normalize to nonnegative right-hand side; zero-rhs >= rows flip to
        // <= rows so they take a slack instead of an artificial.
        a = -a;
        rhs = -rhs;
        if (sense == Sense::Le)
          sense = Sense::Ge;
        else if (sense == Sense::Ge)
          sense = Sense::Le;
      }
      for (Index k = 0; k < n_; ++k) {
        T_(r, k) = a(k);
        T_(r, n_ + k) = -a(k);
      }
      T_(r, ncols_) = rhs;
      switch (sense) {
        case Sense::Le:
          T_(r, slack_col) = 1.0;
          basis_[static_cast<std::size_t>(r)] = slack_col++;
          break;
        case Sense::Ge:
          T_(r, slack_col++) = -1.0;
          T_(r, art_col) = 1.0;
          basis_[static_cast<std::size_t>(r)] = art_col++;
          break;
        case Sense::Eq:
          T_(r, art_col) = 1.0;
          basis_[static_cast<std::size_t>(r)] = art_col++;
          break;
      }
    }
  }

  /// Runs both phases. Returns the outcome in split coordinates; the caller
  /// maps back to the original free variables.
  LpOutcome run(const RealVector& objective) {
    if (ncols_ > art_start_) {
      // Phase 1: minimize the sum of artificials. Skipped entirely when every
      // row started with a slack basis.
      RealVector c1 = RealVector::Zero(ncols_);
      for (Index j = art_start_; j < ncols_; ++j) c1(j) = 1.0;
      set_cost(c1);
      if (!iterate(/*phase1=*/true)) throw Error("solve_lp: internal: phase 1 reported unbounded");
      if (-cost_(ncols_) > kFeasTol) {
        LpOutcome out;
        out.status = LpStatus::Infeasible;
        out.iterations = iterations_;
        return out;
      }
      purge_artificials();
    }

    // Phase 2: the real objective over the split variables.
    RealVector c2 = RealVector::Zero(ncols_);
    for (Index k = 0; k < n_; ++k) {
      c2(k) = objective(k);
      c2(n_ + k) = -objective(k);
    }
    for (Index j = art_start_; j < ncols_; ++j) banned_[static_cast<std::size_t>(j)] = true;
    set_cost(c2);
    LpOutcome out;
    if (iterate(/*phase1=*/false)) {
      out.status = LpStatus::Optimal;
      out.point = extract_point();
      out.value = objective.dot(out.point);
    } else {
      out.status = LpStatus::Unbounded;
      out.point = extract_point();
      out.ray = extract_ray();
    }
    out.iterations = iterations_;
    return out;
  }

 private:
  void set_cost(const RealVector& c) {
    cost_ = RealVector::Zero(ncols_ + 1);
    cost_.head(ncols_) = c;
    for (Index r = 0; r < T_.rows(); ++r) {
      const double cb = c(basis_[static_cast<std::size_t>(r)]);
      if (cb != 0.0) cost_ -= cb * T_.row(r).transpose();
    }
  }

  void pivot(Index r, Index c) {
    T_.row(r) /= T_(r, c);
    T_(r, c) = 1.0;
    for (Index r2 = 0; r2 < T_.rows(); ++r2) {
      if (r2 == r) continue;
      const double factor = T_(r2, c);
      if (factor != 0.0) {
        T_.row(r2) -= factor * T_.row(r);
        T_(r2, c) = 0.0;
      }
    }
    const double cf = cost_(c);
    if (cf != 0.0) {
      cost_ -= cf * T_.row(r).transpose();
      cost_(c) = 0.0;
    }
    const Index leaving = basis_[static_cast<std::size_t>(r)];
    if (leaving >= art_start_) banned_[static_cast<std::size_t>(leaving)] = true;
    basis_[static_cast<std::size_t>(r)] = c;
  }

  /// Bland's rule: entering = lowest-index improving column, leaving = lowest
  /// basic index among ratio ties. Returns true on optimal, false on
  /// unbounded (entering column recorded in entering_).
  bool iterate(bool phase1) {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < ncols_; ++j) {
        if (banned_[static_cast<std::size_t>(j)]) continue;
        if (cost_(j) < -kEpsCost) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      // Ratio test, two passes. Roundoff can leave slightly negative basic
      // values; treating their ratio as zero pivots them back to exact zero
      // instead of letting infeasibility accumulate. Ties at the (exact
      // floating) minimum break by smallest basic index, Bland's rule:
      // mathematically degenerate ties stay exact here because zero rows
      // pivot to exact zeros.
      const auto ratio_of = [&](Index r, double piv) {
        return std::max(T_(r, ncols_), 0.0) / piv;
      };
      double min_ratio = kInf;
      for (Index r = 0; r < T_.rows(); ++r) {
        const double piv = T_(r, enter);
        if (piv > kEpsPivot) min_ratio = std::min(min_ratio, ratio_of(r, piv));
      }
      Index leave = -1;
      if (min_ratio < kInf) {
        for (Index r = 0; r < T_.rows(); ++r) {
          const double piv = T_(r, enter);
          if (piv > kEpsPivot && ratio_of(r, piv) == min_ratio &&
              (leave < 0 ||
               basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)]))
            leave = r;
        }
      }
      if (leave < 0) {
        if (phase1) return false;
        entering_ = enter;
        return false;
      }
      if (++iterations_ > kLpIterationCap)
        throw LpCapExceeded("solve_lp: iteration cap exceeded (engine bug)");
      pivot(leave, enter);
    }
  }

  /// After phase 1, pivot artificials out of the basis; rows where no
  /// structural pivot exists are redundant and dropped.
  void purge_artificials() {
    std::vector<Index> keep;
    for (Index r = 0; r < T_.rows(); ++r) {
      if (basis_[static_cast<std::size_t>(r)] < art_start_) {
        keep.push_back(r);
        continue;
      }
      Index j = -1;
      for (Index c = 0; c < art_start_; ++c)
        if (std::abs(T_(r, c)) > kEpsPivot) {
          j = c;
          break;
        }
      if (j >= 0) {
        pivot(r, j);
        keep.push_back(r);
      }
      // else: redundant row, dropped below
    }
    if (keep.size() == static_cast<std::size_t>(T_.rows())) return;
    RealMatrix t2(static_cast<Index>(keep.size()), ncols_ + 1);
    std::vector<Index> b2;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      t2.row(static_cast<Index>(i)) = T_.row(keep[i]);
      b2.push_back(basis_[static_cast<std::size_t>(keep[i])]);
    }
    T_ = std::move(t2);
    basis_ = std::move(b2);
  }

  RealVector extract_point() const {
    RealVector split = RealVector::Zero(ncols_);
    for (Index r = 0; r < T_.rows(); ++r)
      split(basis_[static_cast<std::size_t>(r)]) = T_(r, ncols_);
    RealVector x(n_);
    for (Index k = 0; k < n_; ++k) x(k) = split(k) - split(n_ + k);
    return x;
  }

  RealVector extract_ray() const {
    RealVector split = RealVector::Zero(ncols_);
    split(entering_) = 1.0;
    for (Index r = 0; r < T_.rows(); ++r) {
      const double v = -T_(r, entering_);
      split(basis_[static_cast<std::size_t>(r)]) = (v > 0.0) ? v : 0.0;
    }
    RealVector x(n_);
    for (Index k = 0; k < n_; ++k) x(k) = split(k) - split(n_ + k);
    return x;
  }

  Index n_ = 0;
  Index slack_start_ = 0;
  Index art_start_ = 0;
  Index ncols_ = 0;
  Index entering_ = -1;
  long iterations_ = 0;
  RealMatrix T_;
  RealVector cost_;
  std::vector<Index> basis_;
  std::vector<bool> banned_;
};

}  // namespace

LpOutcome solve_lp(const LpProblem& problem) {
  validate(problem);
  std::vector<Row> rows;
  for (const auto& s : problem.slabs) {
    if (finite(s.lo)) rows.push_back({s.a, s.lo, Sense::Ge});
    if (finite(s.hi)) rows.push_back({s.a, s.hi, Sense::Le});
  }
  for (const auto& e : problem.equalities) rows.push_back({e.a, e.value, Sense::Eq});
  Simplex simplex(problem, rows);
  return simplex.run(problem.objective);
}

}  // namespace qcskit
