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

#include "qcskit/ms.hpp"

#include <cmath>
#include <sstream>

namespace qcskit {

namespace {

const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> gens = {Generator::Cap, Generator::Cup,  Generator::Mul,
                                              Generator::Comul, Generator::Id, Generator::Swap};
  return gens;
}

double operator_norm(const Matrix& z) {
  Eigen::JacobiSVD<Matrix> svd(z);
  return svd.singularValues().size() > 0 ? svd.singularValues().maxCoeff() : 0.0;
}

}  // namespace

QcsDesc ms_object(Index algebra_dim, int circles, ObjectPolicy policy) {
  if (circles < 0) throw ValidationError("ms_object: negative circle count");
  if (circles == 0) return QcsDesc::unit();
  if (circles == 1) return QcsDesc::canonical_d(algebra_dim);
  if (policy == ObjectPolicy::CanonicalDOfProduct) {
    Index dim = 1;
    for (int i = 0; i < circles; ++i) dim *= algebra_dim;
    return QcsDesc::canonical_d(dim);
  }
  QcsDesc obj = QcsDesc::canonical_d(algebra_dim);
  for (int i = 1; i < circles; ++i) obj = QcsDesc::tensor_of(obj, QcsDesc::canonical_d(algebra_dim));
  return obj;
}

MsTqft build_ms(const FrobeniusAlgebra& algebra, double lambda, ObjectPolicy policy) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ValidationError("build_ms: lambda must be positive and finite");
  if (!algebra.validated()) throw ValidationError("build_ms: algebra has not passed validation");
  MsTqft ms;
  ms.algebra = algebra;
  ms.lambda = lambda;
  ms.policy = policy;
  for (Generator g : all_generators()) {
    const GeneratorMap zmap = generator_matrix(algebra, g);
    const BoundaryType type = typecheck(*BordTerm::make_atom(g));
    const Matrix scaled = std::pow(lambda, zmap.euler) * zmap.matrix;
    ms.generator_chois.emplace(
        g, choi_of_conjugation(scaled, ms_object(algebra.dim(), type.in, policy),
                               ms_object(algebra.dim(), type.out, policy)));
  }
  return ms;
}

ChoiMorphism ms_image(const MsTqft& ms, const BordTerm& term) {
  const BoundaryType type = typecheck(term);
  const Matrix z = evaluate(term, ms.algebra);
  const Matrix scaled = std::pow(ms.lambda, euler_char(term)) * z;
  return choi_of_conjugation(scaled, ms_object(ms.algebra.dim(), type.in, ms.policy),
                             ms_object(ms.algebra.dim(), type.out, ms.policy));
}

ScaleAudit scale_audit(const FrobeniusAlgebra& algebra) {
  if (!algebra.validated())
    throw ValidationError("scale_audit: algebra has not passed validation");
  ScaleAudit audit;
  double lo = -kInf, hi = kInf;
  Generator lo_gen = Generator::Id, hi_gen = Generator::Id;
  bool flat_ok = true;
  Generator flat_bad = Generator::Id;
  for (Generator g : all_generators()) {
    const GeneratorMap zmap = generator_matrix(algebra, g);
    const double nrm = operator_norm(zmap.matrix);
    audit.op_norms[g] = nrm;
    const double lognrm = std::log(nrm);
    if (zmap.euler > 0 && -lognrm < hi) {
      hi = -lognrm;
      hi_gen = g;
    } else if (zmap.euler < 0 && lognrm > lo) {
      lo = lognrm;
      lo_gen = g;
    } else if (zmap.euler == 0 && nrm > 1.0 + 1e-12) {
      flat_ok = false;
      flat_bad = g;
    }
  }
  if (!flat_ok) {
    audit.feasible = false;
    audit.clash = std::string(generator_name(flat_bad)) +
                  " has Euler characteristic 0 and operator norm above 1: no rescaling helps";
    return audit;
  }
  if (lo <= hi + 1e-12) {
    audit.feasible = true;
    audit.log_lo = lo;
    audit.log_hi = hi;
    return audit;
  }
  audit.feasible = false;
  std::ostringstream os;
  os << generator_name(lo_gen) << " forces log lambda >= " << lo << " while "
     << generator_name(hi_gen) << " forces log lambda <= " << hi;
  audit.clash = os.str();
  return audit;
}

AuditReport functor_axiom_check(const MsTqft& ms, double tol) {
  AuditReport report{"functor-axiom-check", {}};
  const auto image = [&](const std::string& text) { return ms_image(ms, *parse_bord(text)); };
  const auto residual = [](const ChoiMorphism& a, const ChoiMorphism& b) {
    return (a.choi.mat() - b.choi.mat()).cwiseAbs().maxCoeff();
  };
  // A term's Choi matrix lives on a k^(in+out) carrier; corpus entries that
  // would overflow the supported size for this algebra are skipped.
  const auto fits = [&](const std::string& text) {
    const BordTermPtr t = parse_bord(text);
    const BoundaryType type = typecheck(*t);
    double dim = 1.0;
    for (int i = 0; i < type.in + type.out; ++i) dim *= static_cast<double>(ms.algebra.dim());
    return dim <= static_cast<double>(kMaxCarrierDim);
  };

  Check composition{"composition"};
  {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"cap", "cup"},
        {"cap", "comul"},
        {"comul", "mul"},
        {"comul", "swap"},
        {"id", "id"},
        {"mul", "comul"},
        {"swap", "mul"},
        {"cap * cap", "mul"},
        {"comul * id", "id * mul"},
        {"cap ; comul", "mul ; cup"},
        {"comul ; (id * comul)", "(mul * id) ; mul"},
    };
    int used = 0;
    for (const auto& [t1, t2] : pairs) {
      const std::string whole_text = t1 + " ; (" + t2 + ")";
      if (!fits(t1) || !fits(t2) || !fits(whole_text)) continue;
      const ChoiMorphism whole = image(whole_text);
      const ChoiMorphism composed = compose_choi(image(t2), image(t1));
      const double r = residual(whole, composed);
      composition.residual = std::max(composition.residual, r);
      if (r > tol && composition.pass) {
        composition.fail(r);
        composition.note("composition fails on '" + t1 + "' then '" + t2 + "'");
      }
      ++used;
    }
    composition.note("checked " + std::to_string(used) + " composable term pairs");
  }
  report.add(composition);

  Check monoidality{"monoidality"};
  {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"cap", "cup"}, {"id", "mul"}, {"comul", "id"}, {"swap", "cap"}, {"mul", "comul"}};
    int used = 0;
    for (const auto& [t1, t2] : pairs) {
      const std::string whole_text = "(" + t1 + ") * (" + t2 + ")";
      if (!fits(whole_text)) continue;
      const ChoiMorphism whole = image(whole_text);
      const ChoiMorphism tensored = tensor_choi(image(t1), image(t2));
      // Interleaved objects come out as nested tensors in a different
      // association; compare the matrices and carriers only.
      const double r = residual(whole, tensored);
      monoidality.residual = std::max(monoidality.residual, r);
      if (r > tol && monoidality.pass) {
        monoidality.fail(r);
        monoidality.note("monoidality fails on '" + t1 + "' with '" + t2 + "'");
      }
      ++used;
    }
    monoidality.note("checked " + std::to_string(used) + " disjoint-union pairs");
  }
  report.add(monoidality);

  Check identity{"identity"};
  {
    const ChoiMorphism id_image = ms.generator_chois.at(Generator::Id);
    identity.residual = residual(id_image, identity_choi(ms.algebra.dim()));
    if (identity.residual > tol) identity.fail(identity.residual);
  }
  report.add(identity);

  Check relations{"relation-preservation"};
  {
    for (const auto& rel : frobenius_relations()) {
      const BordTermPtr lhs = parse_bord(rel.lhs);
      const BordTermPtr rhs = parse_bord(rel.rhs);
      if (euler_char(*lhs) != euler_char(*rhs))
        throw Error("relation '" + rel.name + "' has mismatched Euler characteristics");
      if (!fits(rel.lhs) || !fits(rel.rhs)) continue;
      const double r = residual(ms_image(ms, *lhs), ms_image(ms, *rhs));
      relations.residual = std::max(relations.residual, r);
      if (r > tol && relations.pass) {
        relations.fail(r);
        relations.note("relation '" + rel.name + "' not preserved");
      }
    }
    relations.note("Euler characteristics agree across every relation pair");
  }
  report.add(relations);
  return report;
}

namespace {

/// Rank-one probe states from the top right-singular vector: for a
/// conjugation Choi with |Z| > 1 the state v v^dagger maps to norm |Z v|^2,
/// so the probe witnesses every single-circle norm violation outright.
std::vector<HermMat> singular_probes(const Matrix& scaled_z, const QcsDesc& domain) {
  std::vector<HermMat> probes;
  if (scaled_z.cols() < 1) return probes;
  Eigen::JacobiSVD<Matrix> svd(scaled_z, Eigen::ComputeFullV);
  const Vector v = svd.matrixV().col(0);
  const HermMat state = HermMat::projector(v);
  if (domain.variant() == QcsDesc::Variant::TensorOf) {
    // Only product states are certified members of the tensor domain; keep
    // the probe only when it is one (within roundoff).
    const Index na = domain.left().carrier_dim();
    const Index nb = domain.right().carrier_dim();
    const HermMat a = partial_trace(state, na, nb, 2);
    const HermMat b = partial_trace(state, na, nb, 1);
    if (state.approx_equal(kron(a, b), 1e-9)) probes.push_back(state);
  } else {
    probes.push_back(state);
  }
  return probes;
}

}  // namespace

AuditReport qcs_morphism_audit(const MsTqft& ms, int samples, std::uint64_t seed) {
  AuditReport report{"qcs-morphism-audit", {}};
  std::uint64_t salt = 0;
  for (Generator g : all_generators()) {
    const ChoiMorphism& choi = ms.generator_chois.at(g);
    HomAuditOptions opts;
    const GeneratorMap zmap = generator_matrix(ms.algebra, g);
    const Matrix scaled = std::pow(ms.lambda, zmap.euler) * zmap.matrix;
    opts.probes = singular_probes(scaled, choi.domain);
    const AuditReport sub = hom_membership_audit(choi, samples, seed + salt, opts);
    report.merge(sub, std::string(generator_name(g)) + ":");
    ++salt;
  }
  return report;
}

TraceOutResult trace_out_build(const FrobeniusAlgebra& a1, Complex mu, ObjectPolicy policy,
                               int samples, std::uint64_t seed) {
  if (std::abs(mu) == 0.0) throw ValidationError("trace_out_build: mu must be nonzero");
  if (!a1.validated()) throw ValidationError("trace_out_build: algebra has not passed validation");

  TraceOutResult result{build_ms(a1, std::abs(mu), policy), {"trace-out-build", {}}};
  MsTqft traced;
  traced.algebra = a1;
  traced.lambda = std::abs(mu);
  traced.policy = policy;

  Check equal{"chois-match-euler-rescaling"};
  Check ptrace{"partial-trace-consistency"};
  Rng rng(seed);
  for (Generator g : all_generators()) {
    const GeneratorMap zmap = generator_matrix(a1, g);
    // The product theory's generator: Z1 (x) mu^chi on V (x) C.
    Matrix factor2(1, 1);
    factor2(0, 0) = std::pow(mu, zmap.euler);
    const Matrix zprod = kron(zmap.matrix, factor2);
    const BoundaryType type = typecheck(*BordTerm::make_atom(g));
    ChoiMorphism traced_choi =
        choi_of_conjugation(zprod, ms_object(a1.dim(), type.in, policy),
                            ms_object(a1.dim(), type.out, policy));
    const ChoiMorphism& rescaled = result.theory.generator_chois.at(g);
    const double r =
        (traced_choi.choi.mat() - rescaled.choi.mat()).cwiseAbs().maxCoeff();
    equal.residual = std::max(equal.residual, r);
    if (r > 1e-12 && equal.pass) {
      equal.fail(r);
      equal.note(std::string("generator ") + generator_name(g));
    }

    // Explicit two-factor route: conjugate sigma (x) 1 by Z1 (x) mu^chi and
    // trace the one-dimensional second output factor.
    const Index in_rows = zmap.matrix.cols();
    const Index out_rows = zmap.matrix.rows();
    const HermMat sigma = sample_gaussian_herm(in_rows, rng);
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    const Matrix big = zprod * kron(sigma.mat(), one) * zprod.adjoint();
    const Matrix traced_out = partial_trace(big, out_rows, 1, 2);
    const double scale = std::pow(std::abs(mu), 2 * zmap.euler);
    const Matrix direct = scale * (zmap.matrix * sigma.mat() * zmap.matrix.adjoint());
    const double pr = (traced_out - direct).cwiseAbs().maxCoeff();
    ptrace.residual = std::max(ptrace.residual, pr);
    if (pr > 1e-12 && ptrace.pass) {
      ptrace.fail(pr);
      ptrace.note(std::string("generator ") + generator_name(g));
    }
    traced.generator_chois.emplace(g, std::move(traced_choi));
  }
  equal.note("tracing out an invertible one-dimensional factor = Euler rescaling by |mu|");
  result.report.add(equal);
  result.report.add(ptrace);

  result.theory = std::move(traced);
  result.report.merge(functor_axiom_check(result.theory), "axioms:");
  result.report.merge(qcs_morphism_audit(result.theory, samples, seed), "hom:");
  return result;
}

AuditReport tensor_gap_demo(Index n, int samples, std::uint64_t seed) {
  if (n != 2) throw ValidationError("tensor_gap_demo: only the n = 2 demonstration is supported");
  AuditReport report{"tensor-gap-demo", {}};
  Rng rng(seed);

  // Singlet projector and half the swap operator on C^2 (x) C^2.
  Vector singlet_vec = Vector::Zero(4);
  singlet_vec(1) = 1.0 / std::sqrt(2.0);
  singlet_vec(2) = -1.0 / std::sqrt(2.0);
  const HermMat singlet = HermMat::projector(singlet_vec);
  Matrix swap = Matrix::Zero(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) swap(j * 2 + i, i * 2 + j) = 1.0;
  const HermMat half_swap = HermMat::symmetrized(swap) * 0.5;

  Check pairings{"swap-pairs-into-unit-interval"};
  for (int i = 0; i < samples; ++i) {
    const HermMat c = sample_canonical_member(2, Canonical::D, rng);
    const HermMat d = sample_canonical_member(2, Canonical::D, rng);
    const double lhs = inner(half_swap, kron(c, d));
    const double rhs = 0.5 * (c.mat() * d.mat()).trace().real();
    const double r = std::abs(lhs - rhs);
    pairings.residual = std::max(pairings.residual, r);
    if (r > 1e-9 || lhs < -1e-9 || lhs > 1.0 + 1e-9) {
      pairings.fail(std::max(r, std::abs(lhs)));
      pairings.witness = kron(c, d);
      break;
    }
  }
  pairings.note("tr(SWAP (c x d)) = tr(cd), within [0,1] on every sampled product");
  report.add(pairings);

  Check negative{"swap-pairs-negative-with-singlet"};
  negative.residual = std::abs(inner(half_swap, singlet) + 0.5);
  if (negative.residual > 1e-12) negative.fail(negative.residual);
  negative.note("tr(SWAP singlet) = -1");
  report.add(negative);

  Check in_d4{"singlet-in-canonical-d4"};
  if (!canonical_membership(singlet, Canonical::D).in()) {
    in_d4.fail(1.0);
    in_d4.witness = singlet;
  }
  in_d4.note("rank-one projector: eigenvalues {1,0,0,0}");
  report.add(in_d4);

  Check conclusion{"gap"};
  conclusion.note("singlet lies in D(4) yet SWAP/2 separates it from D(2) (x) D(2)");
  conclusion.note("object policy TensorOfComponents and CanonicalDOfProduct genuinely differ");
  report.add(conclusion);
  return report;
}

}  // namespace qcskit
