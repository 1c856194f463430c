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

#include "pm/io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "pm/core.hpp"
#include "pm/errors.hpp"

namespace pm {

using nlohmann::json;
using nlohmann::ordered_json;

std::string subset_key(const Polymatroid& p, Mask s) {
  std::string out;
  for (const auto& l : p.labels_of(s)) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

Polymatroid from_json(const json& doc) {
  if (!doc.is_object()) throw StructureError("polymatroid file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "format_version" && key != "ground_set" && key != "k" && key != "ranks") {
      throw StructureError("unknown field '" + key + "'");
    }
  }
  for (const char* field : {"format_version", "ground_set", "k", "ranks"}) {
    if (!doc.contains(field)) throw StructureError(std::string("missing field '") + field + "'");
  }
  if (doc["format_version"] != kFormatVersion) {
    throw StructureError("unsupported format_version (expected \"pm1\")");
  }
  if (!doc["ground_set"].is_array()) throw StructureError("ground_set must be a list");
  std::vector<std::string> labels;
  for (const auto& l : doc["ground_set"]) {
    if (!l.is_string()) throw StructureError("ground_set entries must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (!doc["k"].is_number_integer()) throw StructureError("k must be an integer");
  if (!doc["ranks"].is_object()) throw StructureError("ranks must be an object");
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw InputError("ground set has more than " + std::to_string(kMaxElements) + " elements");
  }
  // Validates labels; the table is filled below.
  Polymatroid shape(labels, doc["k"].get<int>(),
                    std::vector<int>(std::size_t{1} << labels.size(), 0));

  std::map<std::string, Mask> by_key;
  std::vector<int> table(std::size_t{1} << labels.size(), 0);
  for (Mask s = 0; s < table.size(); ++s) by_key.emplace(subset_key(shape, s), s);
  std::vector<char> seen(table.size(), 0);
  for (const auto& [key, value] : doc["ranks"].items()) {
    auto it = by_key.find(key);
    if (it == by_key.end()) throw StructureError("unexpected subset key \"" + key + "\"");
    if (!value.is_number_integer()) {
      throw StructureError("rank of \"" + key + "\" must be an integer");
    }
    table[it->second] = value.get<int>();
    seen[it->second] = 1;
  }
  for (Mask s = 1; s < table.size(); ++s) {
    if (!seen[s]) throw StructureError("missing subset key \"" + subset_key(shape, s) + "\"");
  }
  return Polymatroid(std::move(labels), shape.k(), std::move(table));
}

ordered_json to_json(const Polymatroid& p) {
  std::vector<Mask> order(std::size_t{1} << p.size());
  for (Mask s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&p](Mask a, Mask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : p.lex_less(a, b);
  });
  ordered_json ranks = ordered_json::object();
  for (Mask s : order) ranks[subset_key(p, s)] = p.rank(s);
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["ground_set"] = p.labels();
  doc["k"] = p.k();
  doc["ranks"] = std::move(ranks);
  return doc;
}

Polymatroid parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("JSON parse error: ") + e.what());
  }
  return from_json(doc);
}

std::string serialize(const Polymatroid& p) { return to_json(p).dump(2) + "\n"; }

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

json parse_document(const std::string& text, const std::filesystem::path& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(path.string() + ": JSON parse error: " + e.what());
  }
}

}  // namespace

Polymatroid load(const std::filesystem::path& path) {
  const json doc = parse_document(read_file(path), path);
  try {
    return from_json(doc);
  } catch (const StructureError& e) {
    throw StructureError(path.string() + ": " + e.what());
  }
}

void save(const Polymatroid& p, const std::filesystem::path& path) {
  write_file(path, serialize(p));
}

void require_valid(const Polymatroid& p) {
  const auto violations = validate(p);
  if (violations.empty()) return;
  std::string msg = "axiom violations:";
  for (const auto& v : violations) msg += "\n  " + describe(p, v);
  throw StructureError(msg);
}

Polymatroid load_valid(const std::filesystem::path& path) {
  Polymatroid p = load(path);
  require_valid(p);
  return p;
}

ordered_json to_json(const Counterexample& cx) {
  ordered_json doc;
  doc["checker_id"] = cx.checker_id;
  doc["entry"] = cx.entry;
  doc["witness"] = cx.witness;
  doc["instance"] = to_json(cx.instance);
  if (cx.companion) doc["companion"] = to_json(*cx.companion);
  return doc;
}

Counterexample counterexample_from_json(const json& doc) {
  if (!doc.is_object()) throw StructureError("counterexample file must be a JSON object");
  for (const char* field : {"checker_id", "entry", "witness", "instance"}) {
    if (!doc.contains(field)) throw StructureError(std::string("missing field '") + field + "'");
  }
  Counterexample cx{doc["checker_id"].get<std::string>(), doc["entry"].get<std::string>(),
                    from_json(doc["instance"]), std::nullopt,
                    doc["witness"].get<std::string>()};
  if (doc.contains("companion")) cx.companion = from_json(doc["companion"]);
  return cx;
}

void save_counterexample(const Counterexample& cx, const std::filesystem::path& path) {
  write_file(path, to_json(cx).dump(2) + "\n");
}

Counterexample load_counterexample(const std::filesystem::path& path) {
  try {
    return counterexample_from_json(parse_document(read_file(path), path));
  } catch (const json::exception& e) {
    throw StructureError(path.string() + ": " + e.what());
  }
}

}  // namespace pm
