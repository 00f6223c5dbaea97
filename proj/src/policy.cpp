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

#include "phrfog/policy.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace phrfog {

namespace {

constexpr std::uint32_t kMaxNodes = 65535;
constexpr std::uint32_t kMaxDepth = 128;
constexpr std::size_t kMaxAttributeLen = 1024;

void count_nodes(const PolicyNode& n, std::uint32_t& nodes,
                 std::uint32_t& leaves) {
  ++nodes;
  if (n.is_leaf()) {
    ++leaves;
    return;
  }
  for (const auto& c : n.children) count_nodes(c, nodes, leaves);
}

void collect_leaves(const PolicyNode& n, std::vector<std::string>& out) {
  if (n.is_leaf()) {
    out.push_back(n.attribute);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

}  // namespace

std::uint32_t AccessTree::node_count() const {
  std::uint32_t nodes = 0, leaves = 0;
  count_nodes(root, nodes, leaves);
  return nodes;
}

std::uint32_t AccessTree::leaf_count() const {
  std::uint32_t nodes = 0, leaves = 0;
  count_nodes(root, nodes, leaves);
  return leaves;
}

std::vector<std::string> AccessTree::leaves() const {
  std::vector<std::string> out;
  collect_leaves(root, out);
  return out;
}

std::string normalize_attribute(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { kWord, kLParen, kRParen, kComma, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  const Token& peek2() const { return next_; }
  Token take() {
    Token t = cur_;
    advance_one();
    return t;
  }

 private:
  void advance() {
    cur_ = lex();
    next_ = lex();
  }
  void advance_one() {
    cur_ = next_;
    next_ = lex();
  }
  Token lex() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::kEnd;
      return t;
    }
    char c = text_[pos_];
    if (c == '(') {
      t.kind = Token::Kind::kLParen;
      t.text = "(";
      ++pos_;
      return t;
    }
    if (c == ')') {
      t.kind = Token::Kind::kRParen;
      t.text = ")";
      ++pos_;
      return t;
    }
    if (c == ',') {
      t.kind = Token::Kind::kComma;
      t.text = ",";
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ',' ||
          std::isspace(static_cast<unsigned char>(d))) {
        break;
      }
      ++pos_;
    }
    t.kind = Token::Kind::kWord;
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_, next_;
};

bool is_keyword(const std::string& w) {
  return w == "and" || w == "or" || w == "of";
}

bool is_number(const std::string& w) {
  return !w.empty() &&
         std::all_of(w.begin(), w.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

struct Parser {
  Lexer lex;
  std::optional<Error> err;

  explicit Parser(std::string_view text) : lex(text) {}

  Error fail(const std::string& what, const Token& at) {
    Error e{Errc::kParseError,
            what + " at offset " + std::to_string(at.offset) +
                (at.kind == Token::Kind::kEnd
                     ? " (end of input)"
                     : " (near '" + at.text + "')")};
    if (!err) err = e;
    return e;
  }

  bool word_is(const Token& t, std::string_view w) const {
    return t.kind == Token::Kind::kWord && t.text == w;
  }

  std::optional<PolicyNode> parse_expr() {
    auto first = parse_and();
    if (!first) return std::nullopt;
    if (!word_is(lex.peek(), "or")) return first;
    PolicyNode gate;
    gate.kind = PolicyNode::Kind::kGate;
    gate.children.push_back(std::move(*first));
    while (word_is(lex.peek(), "or")) {
      lex.take();
      auto next = parse_and();
      if (!next) return std::nullopt;
      gate.children.push_back(std::move(*next));
    }
    gate.threshold = 1;
    return gate;
  }

  std::optional<PolicyNode> parse_and() {
    auto first = parse_primary();
    if (!first) return std::nullopt;
    if (!word_is(lex.peek(), "and")) return first;
    PolicyNode gate;
    gate.kind = PolicyNode::Kind::kGate;
    gate.children.push_back(std::move(*first));
    while (word_is(lex.peek(), "and")) {
      lex.take();
      auto next = parse_primary();
      if (!next) return std::nullopt;
      gate.children.push_back(std::move(*next));
    }
    gate.threshold = static_cast<std::uint32_t>(gate.children.size());
    return gate;
  }

  std::optional<PolicyNode> parse_primary() {
    const Token& t = lex.peek();
    if (t.kind == Token::Kind::kLParen) {
      lex.take();
      auto inner = parse_expr();
      if (!inner) return std::nullopt;
      if (lex.peek().kind != Token::Kind::kRParen) {
        fail("expected ')'", lex.peek());
        return std::nullopt;
      }
      lex.take();
      return inner;
    }
    if (t.kind == Token::Kind::kWord && is_number(t.text) &&
        word_is(lex.peek2(), "of")) {
      return parse_threshold();
    }
    if (t.kind == Token::Kind::kWord && !is_keyword(t.text)) {
      return parse_attribute();
    }
    fail("expected attribute, '(' or threshold expression", t);
    return std::nullopt;
  }

  std::optional<PolicyNode> parse_threshold() {
    Token num = lex.take();
    unsigned long k = 0;
    try {
      k = std::stoul(num.text);
    } catch (...) {
      fail("threshold out of range", num);
      return std::nullopt;
    }
    lex.take();  // "of"
    if (lex.peek().kind != Token::Kind::kLParen) {
      fail("expected '(' after 'of'", lex.peek());
      return std::nullopt;
    }
    lex.take();
    PolicyNode gate;
    gate.kind = PolicyNode::Kind::kGate;
    for (;;) {
      auto child = parse_expr();
      if (!child) return std::nullopt;
      gate.children.push_back(std::move(*child));
      if (lex.peek().kind == Token::Kind::kComma) {
        lex.take();
        continue;
      }
      break;
    }
    if (lex.peek().kind != Token::Kind::kRParen) {
      fail("expected ',' or ')' in threshold list", lex.peek());
      return std::nullopt;
    }
    Token close = lex.take();
    if (gate.children.size() < 2) {
      fail("threshold gate needs at least two children", close);
      return std::nullopt;
    }
    if (k == 0) {
      fail("threshold must be at least 1", num);
      return std::nullopt;
    }
    if (k > gate.children.size()) {
      fail("threshold exceeds child count", num);
      return std::nullopt;
    }
    gate.threshold = static_cast<std::uint32_t>(k);
    return gate;
  }

  std::optional<PolicyNode> parse_attribute() {
    Token first = lex.take();
    std::string name = first.text;
    // Attribute names may span several words ("doctorlevel A"): keep
    // consuming plain words that cannot start a new construct.
    while (lex.peek().kind == Token::Kind::kWord &&
           !is_keyword(lex.peek().text) &&
           !(is_number(lex.peek().text) && word_is(lex.peek2(), "of"))) {
      name += ' ';
      name += lex.take().text;
    }
    PolicyNode leaf;
    leaf.kind = PolicyNode::Kind::kLeaf;
    leaf.attribute = normalize_attribute(name);
    if (leaf.attribute.empty() || leaf.attribute.size() > kMaxAttributeLen) {
      fail("invalid attribute name", first);
      return std::nullopt;
    }
    return leaf;
  }
};

}  // namespace

Result<AccessTree> parse_policy(std::string_view text) {
  Parser p(text);
  auto root = p.parse_expr();
  if (!root) {
    return Result<AccessTree>(
        p.err.value_or(Error{Errc::kParseError, "empty policy"}));
  }
  if (p.lex.peek().kind != Token::Kind::kEnd) {
    p.fail("unexpected trailing input", p.lex.peek());
    return Result<AccessTree>(*p.err);
  }
  AccessTree tree{std::move(*root)};
  if (tree.node_count() > kMaxNodes) {
    return Result<AccessTree>::failure(Errc::kParseError, "policy too large");
  }
  return tree;
}

// ---- printing ---------------------------------------------------------------

namespace {

void print_node(const PolicyNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += n.attribute;
    return;
  }
  auto print_child = [&](const PolicyNode& c) {
    if (c.is_leaf()) {
      print_node(c, out);
    } else {
      out += '(';
      print_node(c, out);
      out += ')';
    }
  };
  std::size_t n_children = n.children.size();
  if (n.threshold == n_children || n.threshold == 1) {
    const char* op = (n.threshold == 1) ? " or " : " and ";
    for (std::size_t i = 0; i < n_children; ++i) {
      if (i) out += op;
      print_child(n.children[i]);
    }
    return;
  }
  out += std::to_string(n.threshold);
  out += " of (";
  for (std::size_t i = 0; i < n_children; ++i) {
    if (i) out += ", ";
    print_node(n.children[i], out);  // commas delimit; parens unnecessary
  }
  out += ')';
}

}  // namespace

std::string policy_to_text(const AccessTree& tree) {
  std::string out;
  print_node(tree.root, out);
  return out;
}

// ---- satisfaction -----------------------------------------------------------

namespace {

// Per-node satisfiability and minimal leaf cost, preorder-indexed.
struct NodeInfo {
  const PolicyNode* node = nullptr;
  bool sat = false;
  std::uint32_t cost = 0;  // minimal number of leaves when sat
  std::vector<std::uint32_t> child_ids;
};

std::uint32_t annotate(const PolicyNode& n,
                       const std::set<std::string>& have,
                       std::vector<NodeInfo>& infos) {
  std::uint32_t id = static_cast<std::uint32_t>(infos.size());
  infos.emplace_back();
  infos[id].node = &n;
  if (n.is_leaf()) {
    infos[id].sat = have.count(n.attribute) > 0;
    infos[id].cost = 1;
    return id;
  }
  std::vector<std::uint32_t> child_ids;
  child_ids.reserve(n.children.size());
  for (const auto& c : n.children) {
    child_ids.push_back(annotate(c, have, infos));
  }
  // Cheapest k satisfiable children, ties toward lower child index.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> costs;  // (cost, idx)
  for (std::size_t i = 0; i < child_ids.size(); ++i) {
    const NodeInfo& ci = infos[child_ids[i]];
    if (ci.sat) costs.emplace_back(ci.cost, static_cast<std::uint32_t>(i));
  }
  NodeInfo& info = infos[id];
  info.child_ids = std::move(child_ids);
  if (costs.size() >= n.threshold) {
    std::sort(costs.begin(), costs.end());
    info.sat = true;
    info.cost = 0;
    for (std::uint32_t i = 0; i < n.threshold; ++i) {
      info.cost += costs[i].first;
    }
  }
  return id;
}

void select(std::uint32_t id, const std::vector<NodeInfo>& infos,
            SatisfyingAssignment& out) {
  const NodeInfo& info = infos[id];
  if (info.node->is_leaf()) {
    out.leaf_ids.push_back(id);
    return;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> costs;
  for (std::size_t i = 0; i < info.child_ids.size(); ++i) {
    const NodeInfo& ci = infos[info.child_ids[i]];
    if (ci.sat) costs.emplace_back(ci.cost, static_cast<std::uint32_t>(i));
  }
  std::sort(costs.begin(), costs.end());
  std::vector<std::uint32_t> chosen;
  for (std::uint32_t i = 0; i < info.node->threshold; ++i) {
    chosen.push_back(costs[i].second + 1);  // 1-based
  }
  std::sort(chosen.begin(), chosen.end());
  out.gate_children[id] = chosen;
  for (std::uint32_t one_based : chosen) {
    select(info.child_ids[one_based - 1], infos, out);
  }
}

}  // namespace

std::optional<SatisfyingAssignment> satisfies(
    const AccessTree& tree, const std::vector<std::string>& attributes) {
  std::set<std::string> have;
  for (const auto& a : attributes) have.insert(normalize_attribute(a));
  std::vector<NodeInfo> infos;
  infos.reserve(tree.node_count());
  annotate(tree.root, have, infos);
  if (!infos[0].sat) return std::nullopt;
  SatisfyingAssignment out;
  select(0, infos, out);
  std::sort(out.leaf_ids.begin(), out.leaf_ids.end());
  return out;
}

// ---- secret sharing ----------------------------------------------------------

namespace {

void share_node(const PolicyNode& n, const Scalar& share,
                RandomSource& rng, std::uint32_t& next_id,
                std::map<std::uint32_t, Scalar>& out) {
  std::uint32_t id = next_id++;
  out.emplace(id, share);
  if (n.is_leaf()) return;
  // q(0) = share; threshold-1 random higher coefficients.
  std::vector<Scalar> coeffs;
  coeffs.push_back(share);
  for (std::uint32_t i = 1; i < n.threshold; ++i) {
    coeffs.push_back(random_scalar(rng));
  }
  for (std::size_t child = 0; child < n.children.size(); ++child) {
    Scalar x = Scalar::from_u64(child + 1);
    // Horner evaluation of q at the 1-based child index.
    Scalar v = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
      v = v * x + coeffs[i];
    }
    share_node(n.children[child], v, rng, next_id, out);
  }
}

}  // namespace

std::map<std::uint32_t, Scalar> share_secret(const AccessTree& tree,
                                             const Scalar& secret,
                                             RandomSource& rng) {
  std::map<std::uint32_t, Scalar> out;
  std::uint32_t next_id = 0;
  share_node(tree.root, secret, rng, next_id, out);
  return out;
}

Result<Scalar> lagrange_coeff(std::uint32_t i,
                              const std::vector<std::uint32_t>& set) {
  if (set.empty()) {
    return Result<Scalar>::failure(Errc::kInvalidArgument, "empty index set");
  }
  std::set<std::uint32_t> seen;
  bool found = false;
  for (std::uint32_t j : set) {
    if (j == 0) {
      return Result<Scalar>::failure(Errc::kInvalidArgument,
                                     "indices are 1-based; 0 is invalid");
    }
    if (!seen.insert(j).second) {
      return Result<Scalar>::failure(Errc::kInvalidArgument,
                                     "duplicate index in set");
    }
    if (j == i) found = true;
  }
  if (!found) {
    return Result<Scalar>::failure(Errc::kInvalidArgument,
                                   "index not a member of the set");
  }
  Scalar num = Scalar::one();
  Scalar den = Scalar::one();
  for (std::uint32_t j : set) {
    if (j == i) continue;
    num = num * (-Scalar::from_u64(j));                       // (0 - j)
    den = den * (Scalar::from_u64(i) - Scalar::from_u64(j));  // (i - j)
  }
  auto dinv = den.inverse();
  if (!dinv) {
    return Result<Scalar>::failure(Errc::kInternal,
                                   "degenerate interpolation set");
  }
  return num * *dinv;
}

// ---- serialization ------------------------------------------------------------

namespace {

void write_node(ByteWriter& w, const PolicyNode& n) {
  w.u8(static_cast<std::uint8_t>(n.kind));
  if (n.is_leaf()) {
    w.str(n.attribute);
    return;
  }
  w.u32(n.threshold);
  w.u32(static_cast<std::uint32_t>(n.children.size()));
  for (const auto& c : n.children) write_node(w, c);
}

bool read_node(ByteReader& r, PolicyNode& out, std::uint32_t depth,
               std::uint32_t& budget) {
  if (depth > kMaxDepth || budget == 0) return false;
  --budget;
  std::uint8_t kind = 0;
  if (!r.u8(kind)) return false;
  if (kind == static_cast<std::uint8_t>(PolicyNode::Kind::kLeaf)) {
    out.kind = PolicyNode::Kind::kLeaf;
    std::string attr;
    if (!r.str(attr, kMaxAttributeLen)) return false;
    if (attr.empty() || normalize_attribute(attr) != attr) return false;
    out.attribute = std::move(attr);
    return true;
  }
  if (kind != static_cast<std::uint8_t>(PolicyNode::Kind::kGate)) return false;
  out.kind = PolicyNode::Kind::kGate;
  std::uint32_t threshold = 0, n_children = 0;
  if (!r.u32(threshold) || !r.u32(n_children)) return false;
  if (n_children < 2 || n_children > budget || threshold < 1 ||
      threshold > n_children) {
    return false;
  }
  out.threshold = threshold;
  out.children.resize(n_children);
  for (auto& c : out.children) {
    if (!read_node(r, c, depth + 1, budget)) return false;
  }
  return true;
}

}  // namespace

void write_tree(ByteWriter& w, const AccessTree& tree) {
  write_node(w, tree.root);
}

bool read_tree(ByteReader& r, AccessTree& out) {
  std::uint32_t budget = kMaxNodes;
  return read_node(r, out.root, 0, budget);
}

}  // namespace phrfog
