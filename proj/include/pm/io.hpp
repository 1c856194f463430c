// Copyright 2026 The Authors.
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

// The "pm1" JSON file format:
//
//   {"format_version": "pm1", "ground_set": ["x", "y"], "k": 2,
//    "ranks": {"": 0, "x": 2, "y": 2, "x,y": 3}}
//
// Subset keys are comma-joined sorted labels. "" may be omitted; every
// other subset is mandatory and unknown keys are rejected.

#ifndef PM_IO_HPP_
#define PM_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pm/polymatroid.hpp"
#include "pm/verify.hpp"

namespace pm {

inline constexpr const char* kFormatVersion = "pm1";

// Subset key of `s`: sorted labels joined by ','.
std::string subset_key(const Polymatroid& p, Mask s);

// Structural parse only; axioms are not checked. Throws StructureError on
// a malformed document, InputError on bad labels.
Polymatroid from_json(const nlohmann::json& doc);

// Keys ordered by cardinality, then lexicographically; "" included.
nlohmann::ordered_json to_json(const Polymatroid& p);

Polymatroid parse(const std::string& text);
std::string serialize(const Polymatroid& p);

Polymatroid load(const std::filesystem::path& path);
void save(const Polymatroid& p, const std::filesystem::path& path);

// load() followed by validate(); throws StructureError listing every
// violation.
Polymatroid load_valid(const std::filesystem::path& path);
void require_valid(const Polymatroid& p);

nlohmann::ordered_json to_json(const Counterexample& cx);
Counterexample counterexample_from_json(const nlohmann::json& doc);
void save_counterexample(const Counterexample& cx, const std::filesystem::path& path);
Counterexample load_counterexample(const std::filesystem::path& path);

}  // namespace pm

#endif  // PM_IO_HPP_
