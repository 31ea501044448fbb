// Copyright 2026 The Attain Authors. All rights reserved.
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

#include <optional>
#include <string>

#include "attain/game.hpp"
#include "json.hpp"

namespace attain {

// Outcome of a condition check.  Holds carries a certificate (what sweep or
// exact computation established it), Fails carries a re-checkable witness,
// Undecided carries whatever evidence was gathered.
struct Verdict {
  enum class Status { Holds, Fails, Undecided };

  // Parameters of the certified computation backing a Holds (or the best
  // effort behind an Undecided).  resolution == 0 marks an exact decision.
  struct Certificate {
    double resolution = 0.0;  // sweep grid spacing h
    double min_value = 0.0;   // minimal sampled value
    double lipschitz = 0.0;   // Lipschitz constant L used in the margin
    std::string note;
  };

  // Concrete object reproducing a violation.
  struct Witness {
    std::optional<Direction> direction;  // lambda with v_lambda below threshold
    std::optional<double> value;         // the offending value
    std::optional<MixedAction> q;        // offending column mixture (B3)
    std::optional<std::pair<double, double>> delta_range;  // failing delta span (B4)
    std::string note;
  };

  Status status = Status::Undecided;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  double margin = 0.0;  // slack: positive for comfortable Holds, negative depth for Fails

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
};

inline const char* to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return "Holds";
    case Verdict::Status::Fails: return "Fails";
    case Verdict::Status::Undecided: return "Undecided";
  }
  return "Undecided";
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["margin"] = v.margin;
  if (v.certificate) {
    j["certificate"] = {{"resolution", v.certificate->resolution},
                        {"min_value", v.certificate->min_value},
                        {"lipschitz", v.certificate->lipschitz}};
    if (!v.certificate->note.empty()) j["certificate"]["note"] = v.certificate->note;
  }
  if (v.witness) {
    nlohmann::json w;
    if (v.witness->direction) w["direction"] = v.witness->direction->lambda;
    if (v.witness->value) w["value"] = *v.witness->value;
    if (v.witness->q) w["q"] = v.witness->q->weights();
    if (v.witness->delta_range)
      w["delta_range"] = {v.witness->delta_range->first, v.witness->delta_range->second};
    if (!v.witness->note.empty()) w["note"] = v.witness->note;
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace attain
