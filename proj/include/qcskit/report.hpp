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

#include "qcskit/herm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcskit {

/// One named check inside an audit: pass flag, worst residual seen, an
/// optional witness matrix for failures, and free-form notes.
struct Check {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::optional<HermMat> witness;
  std::vector<std::string> notes;

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  Check& fail(double r) {
    pass = false;
    residual = std::max(residual, r);
    return *this;
  }
  Check& note(std::string s) {
    notes.push_back(std::move(s));
    return *this;
  }
};

struct AuditReport {
  std::string name;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const AuditReport& other, const std::string& prefix);

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace qcskit
