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

#ifndef PM_POLYMATROID_HPP_
#define PM_POLYMATROID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pm {

// A subset of a ground set, bit i standing for the i-th element in
// ground-set order.
using Mask = std::uint32_t;

// Labels naming a subset. Order is irrelevant on input; functions that
// return a LabelSet return it sorted.
using LabelSet = std::vector<std::string>;

inline constexpr int kMaxElements = 16;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

// True if `label` is usable as an element name: nonempty, drawn from
// [A-Za-z0-9_#]. '#' is reserved for derived elements (copies, basepoints).
bool is_valid_label(std::string_view label);

// An integer set function on a labeled ground set of at most kMaxElements
// elements, stored as a dense table indexed by Mask. The table is not
// required to satisfy the polymatroid axioms; see validate().
//
// Instances are immutable.
class Polymatroid {
 public:
  // The empty polymatroid with k = 1.
  Polymatroid();

  // Throws InputError on bad or duplicate labels, k < 1, or more than
  // kMaxElements elements; StructureError if ranks.size() != 2^n.
  Polymatroid(std::vector<std::string> labels, int k, std::vector<int> ranks);

  // Builds the table by evaluating `rank_of(mask)` for every subset.
  template <typename F>
  static Polymatroid from_function(std::vector<std::string> labels, int k, F&& rank_of) {
    std::vector<int> table(std::size_t{1} << labels.size());
    for (Mask s = 0; s < table.size(); ++s) table[s] = rank_of(s);
    return Polymatroid(std::move(labels), k, std::move(table));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  int k() const { return k_; }
  Mask ground() const { return full_mask(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  // Throws InputError naming the first unknown label.
  int require_index(std::string_view label) const;
  Mask mask_of(std::span<const std::string> labels) const;

  // Labels of `s`, lexicographically sorted.
  LabelSet labels_of(Mask s) const;

  int rank(Mask s) const { return ranks_[s]; }
  int rank() const { return ranks_[ground()]; }
  std::span<const int> table() const { return ranks_; }

  // Lexicographic comparison of the sorted label sequences of two subsets.
  // This is the canonical subset order used for every tie-break.
  bool lex_less(Mask a, Mask b) const;

  // Same polymatroid with ground set reordered by label. Keeps k.
  Polymatroid sorted() const;

  // Renames elements positionally. Throws InputError on bad labels.
  Polymatroid relabeled(std::vector<std::string> labels) const;

  // Same table, different k metadata.
  Polymatroid with_k(int k) const;

 private:
  Mask to_sorted_order(Mask s) const;

  std::vector<std::string> labels_;
  int k_ = 1;
  std::vector<int> ranks_;
  // sorted_pos_[i] is the position of element i in label order.
  std::vector<int> sorted_pos_;
};

// "{a,b}" style rendering of a subset, labels sorted.
std::string format_subset(const Polymatroid& p, Mask s);
std::string format_labels(const LabelSet& labels);

}  // namespace pm

#endif  // PM_POLYMATROID_HPP_
