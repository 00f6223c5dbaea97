// Copyright 2026 The phrfog Authors
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

// Monotone access structures: threshold-gate trees, the policy text grammar,
// satisfaction with minimal assignments, and Shamir secret sharing over the
// tree.
//
// Grammar (whitespace separates tokens):
//   expr    := or_expr
//   or_expr := and_expr { "or" and_expr }
//   and_expr:= primary { "and" primary }
//   primary := NUMBER "of" "(" expr { "," expr } ")"
//            | "(" expr ")"
//            | attribute
// "and" binds tighter than "or"; chains of one operator flatten into a single
// n-ary gate ("a and b and c" is one 3-of-3 gate).  An attribute is one or
// more words that are not keywords; interior whitespace normalizes to a
// single space ("doctorlevel  A" == "doctorlevel A").  Matching is
// case-sensitive.  Thresholds must satisfy 1 <= k <= #children; "k of" lists
// need at least two children.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phrfog/bytes.hpp"
#include "phrfog/group.hpp"
#include "phrfog/result.hpp"
#include "phrfog/rng.hpp"

namespace phrfog {

struct PolicyNode {
  enum class Kind : std::uint8_t { kGate = 0, kLeaf = 1 };

  Kind kind = Kind::kLeaf;
  std::uint32_t threshold = 0;      // gates only; 1 <= threshold <= children
  std::vector<PolicyNode> children; // gates only; always >= 2 entries
  std::string attribute;            // leaves only; normalized, non-empty

  bool is_leaf() const { return kind == Kind::kLeaf; }

  friend bool operator==(const PolicyNode&, const PolicyNode&) = default;
};

// Node ids are preorder positions (root = 0); "leaf order" means the order
// leaves appear in a preorder walk.  Child indices for secret sharing and
// Lagrange interpolation are 1-based positions within their gate.
struct AccessTree {
  PolicyNode root;

  std::uint32_t node_count() const;
  std::uint32_t leaf_count() const;
  // Leaf attributes in preorder (the ciphertext leaf-component order).
  std::vector<std::string> leaves() const;

  friend bool operator==(const AccessTree&, const AccessTree&) = default;
};

// Trims leading/trailing whitespace and collapses interior runs to one
// space.  Comparison everywhere is on normalized names, case-sensitively.
std::string normalize_attribute(std::string_view raw);

// Parse errors carry the byte offset in the message ("at offset N").
Result<AccessTree> parse_policy(std::string_view text);

// Canonical text form; parse_policy(policy_to_text(t)) == t.
std::string policy_to_text(const AccessTree& tree);

// The leaves and gate choices that witness satisfaction.
struct SatisfyingAssignment {
  // Preorder ids of the leaves actually used.
  std::vector<std::uint32_t> leaf_ids;
  // For each gate on the satisfied spine: the 1-based child indices chosen
  // (exactly `threshold` of them, ascending).
  std::map<std::uint32_t, std::vector<std::uint32_t>> gate_children;
};

// Minimal satisfying assignment: fewest leaves overall; ties broken toward
// the leftmost (lowest child index) alternative.  nullopt when the attribute
// set does not satisfy the tree.
std::optional<SatisfyingAssignment> satisfies(
    const AccessTree& tree, const std::vector<std::string>& attributes);

// Splits `secret` down the tree: each gate with threshold k gets a random
// polynomial q of degree k-1 with q(0) = its share, children receive q(i).
// Returns a share for every node id; the root's share is `secret`.
std::map<std::uint32_t, Scalar> share_secret(const AccessTree& tree,
                                             const Scalar& secret,
                                             RandomSource& rng);

// Lagrange coefficient at zero for index i within the index set `set`
// (all >= 1, no duplicates, i a member).
Result<Scalar> lagrange_coeff(std::uint32_t i,
                              const std::vector<std::uint32_t>& set);

// Canonical serialization (preorder, length-prefixed); used inside signed
// ciphertext bytes.  Reading validates structure: thresholds in range,
// >= 2 children per gate, normalized non-empty attributes, and caps on
// node count (65535) and depth (128).
void write_tree(ByteWriter& w, const AccessTree& tree);
bool read_tree(ByteReader& r, AccessTree& out);

}  // namespace phrfog
