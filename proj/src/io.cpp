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

#include "qcskit/io.hpp"

#include <fstream>
#include <sstream>

namespace qcskit {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(std::string(what) + ": complex values are [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

[[noreturn]] void bad(const std::string& msg) { throw ValidationError(msg); }

}  // namespace

Json herm_to_json(const HermMat& f) {
  Json entries = Json::array();
  for (Index i = 0; i < f.dim(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < f.dim(); ++j) row.push_back(complex_to_json(f(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"n", f.dim()}, {"entries", std::move(entries)}};
}

HermMat herm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    bad("matrix: expected an object with \"n\" and \"entries\"");
  const Index n = j.at("n").get<Index>();
  if (n < 1) bad("matrix: n must be >= 1");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != n)
    bad("matrix: entries must be an n x n array");
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      bad("matrix: entries must be an n x n array");
    for (Index c = 0; c < n; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], "matrix entry");
  }
  return HermMat(std::move(m));  // validates Hermiticity to 1e-12
}

Json desc_to_json(const QcsDesc& d) {
  using V = QcsDesc::Variant;
  switch (d.variant()) {
    case V::CanonicalD:
      return Json{{"variant", "D"}, {"n", d.carrier_dim()}};
    case V::CanonicalP:
      return Json{{"variant", "P"}, {"n", d.carrier_dim()}};
    case V::Unit:
      return Json{{"variant", "unit"}};
    case V::Generated:
    case V::PolarOf: {
      Json gens = Json::array();
      for (const auto& g : d.generators()) gens.push_back(herm_to_json(g));
      return Json{{"variant", d.variant() == V::Generated ? "generated" : "polar"},
                  {"generators", std::move(gens)}};
    }
    case V::TensorOf:
      return Json{{"variant", "tensor"},
                  {"factors", Json::array({desc_to_json(d.left()), desc_to_json(d.right())})}};
  }
  bad("desc: unreachable");
}

QcsDesc desc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant")) bad("desc: expected an object with \"variant\"");
  const std::string v = j.at("variant").get<std::string>();
  if (v == "D" || v == "P") {
    if (!j.contains("n")) bad("desc: canonical sets need \"n\"");
    const Index n = j.at("n").get<Index>();
    return v == "D" ? QcsDesc::canonical_d(n) : QcsDesc::canonical_p(n);
  }
  if (v == "unit") return QcsDesc::unit();
  if (v == "generated" || v == "polar") {
    if (!j.contains("generators") || !j.at("generators").is_array())
      bad("desc: " + v + " needs a \"generators\" array");
    std::vector<HermMat> gens;
    for (const auto& g : j.at("generators")) gens.push_back(herm_from_json(g));
    return v == "generated" ? QcsDesc::generated(std::move(gens))
                            : QcsDesc::polar_of(std::move(gens));
  }
  if (v == "tensor") {
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").size() != 2)
      bad("desc: tensor needs a two-element \"factors\" array");
    return QcsDesc::tensor_of(desc_from_json(j.at("factors")[0]), desc_from_json(j.at("factors")[1]));
  }
  bad("desc: unknown variant '" + v + "'");
}

Json choi_to_json(const ChoiMorphism& f) {
  return Json{{"in_dim", f.in_dim},
              {"out_dim", f.out_dim},
              {"choi", herm_to_json(f.choi)},
              {"domain", desc_to_json(f.domain)},
              {"codomain", desc_to_json(f.codomain)}};
}

ChoiMorphism choi_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("in_dim") || !j.contains("out_dim") || !j.contains("choi"))
    bad("morphism: expected \"in_dim\", \"out_dim\", and \"choi\"");
  const Index n = j.at("in_dim").get<Index>();
  const Index m = j.at("out_dim").get<Index>();
  HermMat choi = herm_from_json(j.at("choi"));
  QcsDesc domain = j.contains("domain") ? desc_from_json(j.at("domain")) : QcsDesc::canonical_d(n);
  QcsDesc codomain =
      j.contains("codomain") ? desc_from_json(j.at("codomain")) : QcsDesc::canonical_d(m);
  if (choi.dim() != n * m) bad("morphism: choi matrix is not on the in*out carrier");
  if (domain.carrier_dim() != n || codomain.carrier_dim() != m)
    bad("morphism: domain or codomain carrier mismatch");
  return ChoiMorphism{std::move(choi), n, m, std::move(domain), std::move(codomain)};
}

Json algebra_to_json(const FrobeniusAlgebra& a) {
  const Index k = a.dim();
  if (a.theta()) {
    Json theta = Json::array();
    for (Index i = 0; i < k; ++i) theta.push_back((*a.theta())(i));
    return Json{{"dim", k}, {"kind", "semisimple"}, {"theta", std::move(theta)}};
  }
  Json mu = Json::array();
  for (Index x = 0; x < k; ++x) {
    Json plane = Json::array();
    for (Index y = 0; y < k; ++y) {
      Json row = Json::array();
      for (Index z = 0; z < k; ++z) row.push_back(complex_to_json(a.mu(x, y, z)));
      plane.push_back(std::move(row));
    }
    mu.push_back(std::move(plane));
  }
  Json counit = Json::array();
  for (Index i = 0; i < k; ++i) counit.push_back(complex_to_json(a.counit()(i)));
  return Json{{"dim", k}, {"kind", "structure"}, {"mu", std::move(mu)}, {"counit", std::move(counit)}};
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("kind"))
    bad("algebra: expected \"dim\" and \"kind\"");
  const Index k = j.at("dim").get<Index>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "semisimple") {
    if (!j.contains("theta") || !j.at("theta").is_array() ||
        static_cast<Index>(j.at("theta").size()) != k)
      bad("algebra: semisimple kind needs \"theta\" of length dim");
    RealVector theta(k);
    for (Index i = 0; i < k; ++i) {
      const Json& t = j.at("theta")[static_cast<std::size_t>(i)];
      if (!t.is_number()) bad("algebra: theta entries are real numbers");
      theta(i) = t.get<double>();
    }
    return FrobeniusAlgebra::semisimple(theta);
  }
  if (kind != "structure") bad("algebra: unknown kind '" + kind + "'");
  if (!j.contains("mu") || !j.contains("counit")) bad("algebra: structure kind needs \"mu\" and \"counit\"");
  const Json& mu = j.at("mu");
  if (!mu.is_array() || static_cast<Index>(mu.size()) != k) bad("algebra: mu must be dim^3 nested");
  std::vector<Complex> flat(static_cast<std::size_t>(k * k * k));
  for (Index x = 0; x < k; ++x) {
    const Json& plane = mu[static_cast<std::size_t>(x)];
    if (!plane.is_array() || static_cast<Index>(plane.size()) != k)
      bad("algebra: mu must be dim^3 nested");
    for (Index y = 0; y < k; ++y) {
      const Json& row = plane[static_cast<std::size_t>(y)];
      if (!row.is_array() || static_cast<Index>(row.size()) != k)
        bad("algebra: mu must be dim^3 nested");
      for (Index z = 0; z < k; ++z)
        flat[static_cast<std::size_t>((x * k + y) * k + z)] =
            complex_from_json(row[static_cast<std::size_t>(z)], "mu entry");
    }
  }
  const Json& counit = j.at("counit");
  if (!counit.is_array() || static_cast<Index>(counit.size()) != k)
    bad("algebra: counit must have dim entries");
  Vector eps(k);
  for (Index i = 0; i < k; ++i)
    eps(i) = complex_from_json(counit[static_cast<std::size_t>(i)], "counit entry");
  return FrobeniusAlgebra::from_structure(k, std::move(flat), std::move(eps));
}

Json check_to_json(const Check& c) {
  Json j{{"check", c.name}, {"pass", c.pass}, {"residual", c.residual}};
  if (c.witness) j["witness"] = herm_to_json(*c.witness);
  j["notes"] = c.notes;
  return j;
}

Json report_to_json(const AuditReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return Json{{"report", r.name}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

std::vector<HermMat> herm_list_from_json(const Json& j) {
  const Json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.is_object() && j.contains("generators") && j.at("generators").is_array())
    arr = &j.at("generators");
  else
    bad("matrix list: expected a JSON array or an object with \"generators\"");
  std::vector<HermMat> out;
  for (const auto& item : *arr) out.push_back(herm_from_json(item));
  if (out.empty()) bad("matrix list: empty");
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return j;
}

}  // namespace qcskit
