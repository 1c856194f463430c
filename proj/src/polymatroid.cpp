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

#include "pm/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "pm/errors.hpp"

namespace pm {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '#';
  });
}

Polymatroid::Polymatroid() : ranks_{0} {}

Polymatroid::Polymatroid(std::vector<std::string> labels, int k, std::vector<int> ranks)
    : labels_(std::move(labels)), k_(k), ranks_(std::move(ranks)) {
  if (k_ < 1) throw InputError("k must be positive, got " + std::to_string(k_));
  if (labels_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw InputError("ground set has " + std::to_string(labels_.size()) +
                     " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!is_valid_label(l)) throw InputError("invalid element label '" + l + "'");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
  const std::size_t expected = std::size_t{1} << labels_.size();
  if (ranks_.size() != expected) {
    throw StructureError("rank table has " + std::to_string(ranks_.size()) +
                         " entries, expected " + std::to_string(expected));
  }
  std::vector<int> order(labels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return labels_[a] < labels_[b]; });
  sorted_pos_.resize(labels_.size());
  for (std::size_t j = 0; j < order.size(); ++j) sorted_pos_[order[j]] = static_cast<int>(j);
}

std::optional<int> Polymatroid::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

int Polymatroid::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw InputError("unknown element '" + std::string(label) + "'");
}

Mask Polymatroid::mask_of(std::span<const std::string> labels) const {
  Mask s = 0;
  for (const auto& l : labels) s |= bit(require_index(l));
  return s;
}

LabelSet Polymatroid::labels_of(Mask s) const {
  LabelSet out;
  for (int i = 0; i < size(); ++i) {
    if (s & bit(i)) out.push_back(labels_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask Polymatroid::to_sorted_order(Mask s) const {
  Mask out = 0;
  for (; s; s &= s - 1) out |= bit(sorted_pos_[std::countr_zero(s)]);
  return out;
}

bool Polymatroid::lex_less(Mask a, Mask b) const {
  if (a == b) return false;
  const Mask sa = to_sorted_order(a);
  const Mask sb = to_sorted_order(b);
  // Both sequences agree below the lowest differing position d. The one
  // holding d continues with d; the other either stops (and is a proper
  // prefix, hence smaller) or continues with something larger than d.
  const int d = std::countr_zero(sa ^ sb);
  const Mask above = ~full_mask(d + 1);
  if (sa & bit(d)) return (sb & above) != 0;
  return (sa & above) == 0;
}

Polymatroid Polymatroid::sorted() const {
  std::vector<int> order(labels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return labels_[a] < labels_[b]; });
  std::vector<std::string> labels;
  for (int i : order) labels.push_back(labels_[i]);
  std::vector<int> table(ranks_.size());
  std::vector<Mask> lift(ranks_.size(), 0);
  table[0] = ranks_[0];
  for (Mask s = 1; s < table.size(); ++s) {
    lift[s] = lift[s & (s - 1)] | bit(order[std::countr_zero(s)]);
    table[s] = ranks_[lift[s]];
  }
  return Polymatroid(std::move(labels), k_, std::move(table));
}

Polymatroid Polymatroid::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) {
    throw InputError("relabel needs " + std::to_string(labels_.size()) + " labels");
  }
  return Polymatroid(std::move(labels), k_, ranks_);
}

Polymatroid Polymatroid::with_k(int k) const { return Polymatroid(labels_, k, ranks_); }

std::string format_labels(const LabelSet& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out + "}";
}

std::string format_subset(const Polymatroid& p, Mask s) {
  return format_labels(p.labels_of(s));
}

}  // namespace pm
