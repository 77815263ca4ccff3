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

#include "qcskit/choi.hpp"
#include "qcskit/frobenius.hpp"
#include "qcskit/qcs.hpp"
#include "qcskit/report.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace qcskit {

using Json = nlohmann::ordered_json;

/// {"n": int, "entries": [[[re,im], ...], ...]}; Hermiticity to 1e-12.
Json herm_to_json(const HermMat& f);
HermMat herm_from_json(const Json& j);

/// {"variant": "D"|"P"|"generated"|"polar"|"tensor"|"unit", "n": int,
///  "generators": [matrix...], "factors": [desc, desc]}.
Json desc_to_json(const QcsDesc& d);
QcsDesc desc_from_json(const Json& j);

/// {"in_dim": n, "out_dim": m, "choi": matrix, "domain": desc,
///  "codomain": desc}.
Json choi_to_json(const ChoiMorphism& f);
ChoiMorphism choi_from_json(const Json& j);

/// {"dim": k, "kind": "structure"|"semisimple", "mu": k x k x k of [re,im],
///  "counit": [[re,im], ...], "theta": [real, ...]}.
Json algebra_to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra algebra_from_json(const Json& j);

Json check_to_json(const Check& c);
Json report_to_json(const AuditReport& r);

/// A matrix list for polar and bipolar commands: either a bare JSON array of
/// matrix objects or {"generators": [...]}.
std::vector<HermMat> herm_list_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace qcskit
