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

#include "phrfog/cpabe.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

namespace phrfog {

namespace {

constexpr std::uint8_t kKindParams = 1;
constexpr std::uint8_t kKindMaster = 2;
constexpr std::uint8_t kKindKey = 3;
constexpr std::uint8_t kKindRecord = 4;

constexpr std::size_t kMaxHashDomain = 256;
constexpr std::size_t kMaxOwnerId = 4096;
constexpr std::size_t kMaxKeyComponents = 65535;
constexpr std::size_t kMaxCiphertextBytes = 1u << 26;   // 64 MiB
constexpr std::size_t kMaxEnvelopeBytes = (64u << 20) + 4096;

std::string attr_domain(const PublicParams& pp) {
  return pp.hash_domain + ":attr";
}

std::string vk_domain(const PublicParams& pp) {
  return pp.hash_domain + ":vk";
}

void write_header(ByteWriter& w, std::uint8_t kind) {
  w.u8(kind);
  w.u8(kArtifactVersion);
  w.str(GroupDescriptor::bls12_381().curve);
}

// Returns an empty string on success, otherwise the reason.
std::string read_header(ByteReader& r, std::uint8_t kind) {
  std::uint8_t got_kind = 0, version = 0;
  if (!r.u8(got_kind) || !r.u8(version)) return "truncated header";
  if (got_kind != kind) return "unexpected artifact kind";
  if (version != kArtifactVersion) return "unsupported artifact version";
  std::string curve;
  if (!r.str(curve, 64)) return "truncated curve name";
  if (curve != GroupDescriptor::bls12_381().curve) {
    return "artifact was produced for a different curve";
  }
  return {};
}

bool read_element(ByteReader& r, Side side, SourceElement& out) {
  std::span<const std::uint8_t> view;
  if (!r.view(view, element_bytes(side))) return false;
  auto e = SourceElement::from_bytes(side, view);
  if (!e.ok()) return false;
  out = std::move(e).take();
  return true;
}

bool read_target(ByteReader& r, TargetElement& out) {
  std::span<const std::uint8_t> view;
  if (!r.view(view, kTargetBytes)) return false;
  auto e = TargetElement::from_bytes(view);
  if (!e.ok()) return false;
  out = std::move(e).take();
  return true;
}

bool read_scalar(ByteReader& r, Scalar& out) {
  std::span<const std::uint8_t> view;
  if (!r.view(view, kScalarBytes)) return false;
  auto s = Scalar::from_bytes(view);
  if (!s) return false;
  out = *s;
  return true;
}

Scalar nonzero_scalar(RandomSource& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

// The exact bytes the one-time signature covers.
Bytes signed_message(std::span<const std::uint8_t> ct_bytes,
                     std::span<const std::uint8_t> envelope) {
  ByteWriter w;
  w.raw(ct_bytes);
  w.blob(envelope);
  return w.take();
}

// Associated data authenticating record metadata through the envelope.
Bytes record_aad(std::string_view owner_id, std::string_view created_at) {
  ByteWriter w;
  w.u8(kArtifactVersion);
  w.str(owner_id);
  w.str(created_at);
  return w.take();
}

// Preorder-indexed view of a policy tree: flat[id] holds the node and the
// ids of its children, matching the id convention of share_secret and
// satisfies.
struct FlatNode {
  const PolicyNode* node = nullptr;
  std::vector<std::uint32_t> child_ids;
  std::uint32_t leaf_index = 0;  // position among leaves, preorder
};

void flatten_into(const PolicyNode& n, std::vector<FlatNode>& flat,
                  std::uint32_t& leaf_counter) {
  std::uint32_t id = static_cast<std::uint32_t>(flat.size());
  flat.emplace_back();
  flat[id].node = &n;
  if (n.is_leaf()) {
    flat[id].leaf_index = leaf_counter++;
    return;
  }
  for (const auto& c : n.children) {
    flat[id].child_ids.push_back(static_cast<std::uint32_t>(flat.size()));
    flatten_into(c, flat, leaf_counter);
  }
}

std::vector<FlatNode> flatten(const AccessTree& tree) {
  std::vector<FlatNode> flat;
  std::uint32_t leaf_counter = 0;
  flatten_into(tree.root, flat, leaf_counter);
  return flat;
}

}  // namespace

// ---- serialization ------------------------------------------------------------

Bytes PublicParams::to_bytes() const {
  ByteWriter w;
  write_header(w, kKindParams);
  w.str(hash_domain);
  w.raw(g1.to_bytes());
  w.raw(h1.to_bytes());
  w.raw(g2.to_bytes());
  w.raw(h2.to_bytes());
  w.raw(egg_alpha.to_bytes());
  return w.take();
}

Result<PublicParams> PublicParams::from_bytes(
    std::span<const std::uint8_t> in) {
  auto bad = [](std::string why) {
    return Result<PublicParams>::failure(Errc::kMalformed, std::move(why));
  };
  ByteReader r(in);
  if (std::string why = read_header(r, kKindParams); !why.empty()) {
    return bad("public parameters: " + why);
  }
  PublicParams pp;
  pp.desc = GroupDescriptor::bls12_381();
  if (!r.str(pp.hash_domain, kMaxHashDomain) || pp.hash_domain.empty()) {
    return bad("public parameters: bad hash domain");
  }
  if (!read_element(r, Side::kA, pp.g1) || !read_element(r, Side::kA, pp.h1) ||
      !read_element(r, Side::kB, pp.g2) || !read_element(r, Side::kB, pp.h2) ||
      !read_target(r, pp.egg_alpha)) {
    return bad("public parameters: invalid group element");
  }
  if (!r.done()) return bad("public parameters: trailing bytes");
  // The per-attribute kernels fix the generators; parameters that disagree
  // would silently produce incompatible artifacts, so reject them here.
  if (pp.g1 != SourceElement::generator(Side::kA) ||
      pp.g2 != SourceElement::generator(Side::kB)) {
    return bad("public parameters: nonstandard generator");
  }
  return pp;
}

Bytes MasterKey::to_bytes() const {
  ByteWriter w;
  write_header(w, kKindMaster);
  w.raw(beta1.to_bytes());
  w.raw(beta2.to_bytes());
  w.raw(g_alpha.to_bytes());
  return w.take();
}

Result<MasterKey> MasterKey::from_bytes(std::span<const std::uint8_t> in) {
  auto bad = [](std::string why) {
    return Result<MasterKey>::failure(Errc::kMalformed, std::move(why));
  };
  ByteReader r(in);
  if (std::string why = read_header(r, kKindMaster); !why.empty()) {
    return bad("master key: " + why);
  }
  MasterKey mk;
  if (!read_scalar(r, mk.beta1) || !read_scalar(r, mk.beta2)) {
    return bad("master key: invalid scalar");
  }
  if (!read_element(r, Side::kB, mk.g_alpha)) {
    return bad("master key: invalid group element");
  }
  if (!r.done()) return bad("master key: trailing bytes");
  if (mk.beta1.is_zero() || mk.beta2.is_zero() || mk.beta1 == mk.beta2) {
    return bad("master key: degenerate secrets");
  }
  return mk;
}

std::vector<std::string> AttributeKey::attributes() const {
  std::vector<std::string> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.attribute);
  return out;
}

Bytes AttributeKey::to_bytes() const {
  ByteWriter w;
  write_header(w, kKindKey);
  w.raw(key_id);
  validity.write(w);
  w.raw(d.to_bytes());
  w.raw(e.to_bytes());
  w.u32(static_cast<std::uint32_t>(components.size()));
  for (const auto& c : components) {
    w.str(c.attribute);
    w.raw(c.d.to_bytes());
    w.raw(c.dp.to_bytes());
  }
  return w.take();
}

Result<AttributeKey> AttributeKey::from_bytes(
    std::span<const std::uint8_t> in) {
  auto bad = [](std::string why) {
    return Result<AttributeKey>::failure(Errc::kMalformed, std::move(why));
  };
  ByteReader r(in);
  if (std::string why = read_header(r, kKindKey); !why.empty()) {
    return bad("attribute key: " + why);
  }
  AttributeKey sk;
  if (!r.raw(sk.key_id.data(), sk.key_id.size())) {
    return bad("attribute key: truncated key id");
  }
  auto validity = ValiditySet::read(r);
  if (!validity.ok()) return bad("attribute key: " + validity.error().message);
  sk.validity = std::move(validity).take();
  if (sk.validity.empty()) return bad("attribute key: empty validity");
  if (!read_element(r, Side::kB, sk.d) || !read_element(r, Side::kA, sk.e)) {
    return bad("attribute key: invalid group element");
  }
  std::uint32_t n = 0;
  if (!r.u32(n) || n == 0 || n > kMaxKeyComponents) {
    return bad("attribute key: bad component count");
  }
  std::set<std::string> seen;
  sk.components.resize(n);
  for (auto& c : sk.components) {
    if (!r.str(c.attribute, 1024) || c.attribute.empty() ||
        normalize_attribute(c.attribute) != c.attribute) {
      return bad("attribute key: invalid attribute name");
    }
    if (!seen.insert(c.attribute).second) {
      return bad("attribute key: duplicate attribute");
    }
    if (!read_element(r, Side::kA, c.d) || !read_element(r, Side::kB, c.dp)) {
      return bad("attribute key: invalid component element");
    }
  }
  if (!r.done()) return bad("attribute key: trailing bytes");
  return sk;
}

Bytes SealedRecord::canonical_ct_bytes() const {
  ByteWriter w;
  write_tree(w, policy);
  w.raw(c1.to_bytes());
  w.u32(static_cast<std::uint32_t>(leaves.size()));
  for (const auto& leaf : leaves) {
    w.raw(leaf.cy.to_bytes());
    w.raw(leaf.cyp.to_bytes());
  }
  w.raw(c_vk.to_bytes());
  w.raw(c_vkp.to_bytes());
  w.raw(vk);
  return w.take();
}

Bytes SealedRecord::to_bytes() const {
  ByteWriter w;
  write_header(w, kKindRecord);
  w.blob(canonical_ct_bytes());
  w.raw(sigma);
  w.blob(envelope);
  w.str(owner_id);
  w.str(created_at);
  return w.take();
}

Result<SealedRecord> SealedRecord::from_bytes(
    std::span<const std::uint8_t> in) {
  auto bad = [](std::string why) {
    return Result<SealedRecord>::failure(Errc::kMalformed, std::move(why));
  };
  ByteReader r(in);
  if (std::string why = read_header(r, kKindRecord); !why.empty()) {
    return bad("record: " + why);
  }
  SealedRecord rec;
  Bytes ct;
  if (!r.blob(ct, kMaxCiphertextBytes)) return bad("record: bad ciphertext");
  if (!r.raw(rec.sigma.data(), rec.sigma.size())) {
    return bad("record: truncated signature");
  }
  if (!r.blob(rec.envelope, kMaxEnvelopeBytes)) {
    return bad("record: bad envelope");
  }
  if (!r.str(rec.owner_id, kMaxOwnerId)) return bad("record: bad owner id");
  if (!r.str(rec.created_at, 16)) return bad("record: bad creation date");
  if (!r.done()) return bad("record: trailing bytes");
  if (!CivilDate::parse(rec.created_at).ok()) {
    return bad("record: invalid creation date");
  }

  // Structural pass over the ciphertext: shapes and the verification key,
  // no group decoding yet.
  ByteReader cr(ct);
  if (!read_tree(cr, rec.policy)) return bad("record: invalid policy tree");
  const std::uint32_t n_leaves = rec.policy.leaf_count();
  std::span<const std::uint8_t> c1_b, c_vk_b, c_vkp_b;
  std::vector<std::pair<std::span<const std::uint8_t>,
                        std::span<const std::uint8_t>>>
      leaf_b(n_leaves);
  std::uint32_t stored_leaves = 0;
  if (!cr.view(c1_b, element_bytes(Side::kA)) || !cr.u32(stored_leaves) ||
      stored_leaves != n_leaves) {
    return bad("record: leaf count mismatch");
  }
  for (auto& [cy_b, cyp_b] : leaf_b) {
    if (!cr.view(cy_b, element_bytes(Side::kB)) ||
        !cr.view(cyp_b, element_bytes(Side::kA))) {
      return bad("record: truncated leaf components");
    }
  }
  if (!cr.view(c_vk_b, element_bytes(Side::kB)) ||
      !cr.view(c_vkp_b, element_bytes(Side::kA)) ||
      !cr.raw(rec.vk.data(), rec.vk.size()) || !cr.done()) {
    return bad("record: truncated ciphertext");
  }

  // Signature over the exact stored bytes, before the (much costlier)
  // element validation.
  Bytes msg = signed_message(ct, rec.envelope);
  if (!ots_verify(rec.vk, msg, rec.sigma)) {
    return Result<SealedRecord>::failure(
        Errc::kSignatureInvalid, "record: one-time signature check failed");
  }

  auto decode = [&](Side side, std::span<const std::uint8_t> b,
                    SourceElement& out) {
    auto e = SourceElement::from_bytes(side, b);
    if (!e.ok()) return false;
    out = std::move(e).take();
    return true;
  };
  rec.leaves.resize(n_leaves);
  bool ok = decode(Side::kA, c1_b, rec.c1) &&
            decode(Side::kB, c_vk_b, rec.c_vk) &&
            decode(Side::kA, c_vkp_b, rec.c_vkp);
  for (std::uint32_t i = 0; ok && i < n_leaves; ++i) {
    ok = decode(Side::kB, leaf_b[i].first, rec.leaves[i].cy) &&
         decode(Side::kA, leaf_b[i].second, rec.leaves[i].cyp);
  }
  if (!ok) return bad("record: invalid group element");
  return rec;
}

std::array<std::uint8_t, kRecordDigestBytes> record_digest(
    std::span<const std::uint8_t> record_bytes) {
  std::array<std::uint8_t, kRecordDigestBytes> out{};
  crypto_generichash(out.data(), out.size(), record_bytes.data(),
                     record_bytes.size(), nullptr, 0);
  return out;
}

// ---- setup --------------------------------------------------------------------

SetupResult setup(RandomSource& rng, SetupDebug* dbg) {
  Scalar alpha = nonzero_scalar(rng);
  Scalar beta1 = nonzero_scalar(rng);
  std::uint32_t resamples = 0;
  Scalar beta2 = nonzero_scalar(rng);
  while (beta2 == beta1) {
    beta2 = nonzero_scalar(rng);
    ++resamples;
  }

  SetupResult out;
  out.pp.desc = GroupDescriptor::bls12_381();
  out.pp.g1 = SourceElement::generator(Side::kA);
  out.pp.g2 = SourceElement::generator(Side::kB);
  out.pp.h1 = out.pp.g1.exp(beta1);
  out.pp.h2 = out.pp.g2.exp(beta2);
  out.pp.egg_alpha = pair(out.pp.g1, out.pp.g2).take().exp(alpha);
  out.pp.hash_domain = "phrfog:bls12-381:v1";
  out.mk.beta1 = beta1;
  out.mk.beta2 = beta2;
  out.mk.g_alpha = out.pp.g2.exp(alpha);

  if (dbg != nullptr) {
    dbg->alpha = alpha;
    dbg->beta1 = beta1;
    dbg->beta2 = beta2;
    dbg->beta_resamples = resamples;
  }
  return out;
}

// ---- key extraction ------------------------------------------------------------

Result<AttributeKey> keygen(const PublicParams& pp, const MasterKey& mk,
                            const std::vector<std::string>& attributes,
                            const ValiditySet& validity, RandomSource& rng,
                            const ExecPolicy& exec, KeygenDebug* dbg) {
  std::vector<std::string> attrs;
  std::set<std::string> seen;
  for (const auto& a : attributes) {
    std::string norm = normalize_attribute(a);
    if (norm.empty()) {
      return Result<AttributeKey>::failure(Errc::kInvalidArgument,
                                           "empty attribute name");
    }
    if (seen.insert(norm).second) attrs.push_back(std::move(norm));
  }
  if (attrs.empty()) {
    return Result<AttributeKey>::failure(Errc::kInvalidArgument,
                                         "key needs at least one attribute");
  }
  if (validity.empty()) {
    return Result<AttributeKey>::failure(
        Errc::kInvalidArgument, "key needs a non-empty validity window");
  }
  auto b1_inv = mk.beta1.inverse();
  auto b2_inv = mk.beta2.inverse();
  if (!b1_inv || !b2_inv) {
    return Result<AttributeKey>::failure(Errc::kInvalidArgument,
                                         "master key has zero secret");
  }

  // Fixed draw order (r, then one blinder per attribute, then the key id)
  // keeps issuance reproducible under a deterministic source.
  Scalar r = nonzero_scalar(rng);
  std::vector<KeygenItem> items;
  items.reserve(attrs.size());
  for (const auto& a : attrs) {
    items.push_back(KeygenItem{a, random_scalar(rng)});
  }

  AttributeKey sk;
  sk.d = mk.g_alpha.mul(pp.g2.exp(r)).take().exp(*b1_inv);
  sk.e = pp.g1.exp(r * *b2_inv);
  auto comps = keygen_components(attr_domain(pp), pp.g1.exp(r), items, exec);
  if (!comps.ok()) return Result<AttributeKey>(comps.error());
  const auto& pairs = comps.value();
  sk.components.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    sk.components[i] =
        AttributeKeyComponent{items[i].attribute, pairs[i].d, pairs[i].dp};
  }
  sk.validity = validity;
  rng.fill(sk.key_id);

  if (dbg != nullptr) {
    dbg->r = r;
    dbg->r_j.clear();
    for (const auto& item : items) dbg->r_j[item.attribute] = item.rj;
  }
  return sk;
}

// ---- sealing -------------------------------------------------------------------

Result<SealedRecord> encrypt(const PublicParams& pp, const AccessTree& policy,
                             std::span<const std::uint8_t> plaintext,
                             std::string owner_id, const CivilDate& created_at,
                             RandomSource& rng, const ExecPolicy& exec,
                             EncryptDebug* dbg) {
  // Reject hand-built trees that would not survive the canonical wire form
  // (bad thresholds, single-child gates, unnormalized attributes).
  {
    ByteWriter w;
    write_tree(w, policy);
    ByteReader r(w.bytes());
    AccessTree check;
    if (!read_tree(r, check) || !r.done() || !(check == policy)) {
      return Result<SealedRecord>::failure(Errc::kInvalidArgument,
                                           "invalid policy tree");
    }
  }
  if (owner_id.size() > kMaxOwnerId) {
    return Result<SealedRecord>::failure(Errc::kTooLarge, "owner id too long");
  }

  // Sealing exponent s and the line f(z) = s + c*z.  The policy root
  // receives f(1) and the verification-key node f(2); recovering s requires
  // both, which is what binds the signature key to the ciphertext.
  Scalar s = nonzero_scalar(rng);
  Scalar c = nonzero_scalar(rng);
  Scalar root_share = s + c;
  Scalar vk_share = root_share + c;
  OneTimeKeyPair ots = ots_keygen(rng);

  std::map<std::uint32_t, Scalar> shares = share_secret(policy, root_share, rng);

  SealedRecord rec;
  rec.policy = policy;
  rec.c1 = pp.h1.exp(s);

  std::vector<LeafShare> leaf_shares;
  leaf_shares.reserve(policy.leaf_count());
  std::vector<FlatNode> flat = flatten(policy);
  for (std::uint32_t id = 0; id < flat.size(); ++id) {
    if (flat[id].node->is_leaf()) {
      leaf_shares.push_back(
          LeafShare{flat[id].node->attribute, shares.at(id)});
    }
  }
  std::vector<EncryptedLeaf> leaves =
      encrypt_leaves(attr_domain(pp), leaf_shares, exec);
  rec.leaves.resize(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    rec.leaves[i] = RecordLeaf{leaves[i].cy, leaves[i].cyp};
  }

  rec.c_vk = pp.h2.exp(vk_share);
  rec.c_vkp = hash_to_group(vk_domain(pp),
                            std::span<const std::uint8_t>(ots.vk))
                  .exp(vk_share);
  rec.vk = ots.vk;
  rec.owner_id = std::move(owner_id);
  rec.created_at = created_at.to_string();

  TargetElement k = pp.egg_alpha.exp(s);
  auto sealed = envelope_seal(derive_envelope_key(k), plaintext,
                              record_aad(rec.owner_id, rec.created_at), rng);
  if (!sealed.ok()) return Result<SealedRecord>(sealed.error());
  rec.envelope = std::move(sealed).take();

  Bytes msg = signed_message(rec.canonical_ct_bytes(), rec.envelope);
  rec.sigma = ots_sign(ots, msg);

  if (dbg != nullptr) {
    dbg->s = s;
    dbg->root_share = root_share;
    dbg->vk_share = vk_share;
    dbg->shares = shares;
    dbg->vk = ots.vk;
  }
  return rec;
}

// ---- opening -------------------------------------------------------------------

const char* decrypt_status_name(DecryptStatus s) {
  switch (s) {
    case DecryptStatus::kOk:
      return "ok";
    case DecryptStatus::kNotSatisfied:
      return "not-satisfied";
    case DecryptStatus::kExpired:
      return "expired";
    case DecryptStatus::kSignatureInvalid:
      return "signature-invalid";
    case DecryptStatus::kEnvelopeAuthFailed:
      return "envelope-auth-failed";
    case DecryptStatus::kMalformed:
      return "malformed";
  }
  return "unknown";
}

namespace {

DecryptResult decrypt_fail(DecryptStatus status, std::string detail) {
  DecryptResult out;
  out.status = status;
  out.detail = std::move(detail);
  return out;
}

// Lagrange combination up the satisfied spine.  `leaf_f` holds the pairing
// value for every used leaf, keyed by preorder node id.
Result<TargetElement> combine_gates(
    const std::vector<FlatNode>& flat, std::uint32_t id,
    const SatisfyingAssignment& asg,
    const std::map<std::uint32_t, TargetElement>& leaf_f) {
  const FlatNode& fn = flat[id];
  if (fn.node->is_leaf()) {
    auto it = leaf_f.find(id);
    if (it == leaf_f.end()) {
      return Result<TargetElement>::failure(Errc::kInternal,
                                            "missing leaf pairing value");
    }
    return it->second;
  }
  auto chosen_it = asg.gate_children.find(id);
  if (chosen_it == asg.gate_children.end()) {
    return Result<TargetElement>::failure(Errc::kInternal,
                                          "missing gate selection");
  }
  const std::vector<std::uint32_t>& chosen = chosen_it->second;
  TargetElement acc = TargetElement::identity();
  for (std::uint32_t one_based : chosen) {
    auto child = combine_gates(flat, fn.child_ids[one_based - 1], asg, leaf_f);
    if (!child.ok()) return child;
    auto lc = lagrange_coeff(one_based, chosen);
    if (!lc.ok()) return Result<TargetElement>(lc.error());
    acc = acc * child.value().exp(lc.value());
  }
  return acc;
}

}  // namespace

DecryptResult decrypt(const PublicParams& pp, const AttributeKey& sk,
                      const SealedRecord& rec, const CivilDate& now,
                      const ExecPolicy& exec) {
  // 1. Signature first: nothing else about a forged record is trustworthy.
  Bytes msg = signed_message(rec.canonical_ct_bytes(), rec.envelope);
  if (!ots_verify(rec.vk, msg, rec.sigma)) {
    return decrypt_fail(DecryptStatus::kSignatureInvalid,
                        "one-time signature verification failed");
  }

  // 2. Key validity, before any pairing is evaluated.
  if (!sk.validity.contains(now)) {
    return decrypt_fail(DecryptStatus::kExpired,
                        "key not valid on " + now.to_string());
  }

  // 3. Policy satisfaction.
  auto asg = satisfies(rec.policy, sk.attributes());
  if (!asg) {
    return decrypt_fail(DecryptStatus::kNotSatisfied,
                        "key attributes do not satisfy the record policy");
  }

  // 4. Verification-key binding: C'_vk must be H(vk) raised to the same
  // share that C_vk carries, or (vk, sigma) has been swapped out.
  SourceElement h_vk =
      hash_to_group(vk_domain(pp), std::span<const std::uint8_t>(rec.vk));
  auto binding = pair_ratio(h_vk, rec.c_vk, rec.c_vkp, pp.h2);
  if (!binding.ok()) {
    return decrypt_fail(DecryptStatus::kMalformed, binding.error().message);
  }
  if (binding.value() != TargetElement::identity()) {
    return decrypt_fail(DecryptStatus::kSignatureInvalid,
                        "verification key binding check failed");
  }

  // 5. Leaf pairings for the chosen assignment.
  std::map<std::string, const AttributeKeyComponent*> comp_by_attr;
  for (const auto& c : sk.components) comp_by_attr[c.attribute] = &c;
  std::vector<FlatNode> flat = flatten(rec.policy);
  std::vector<LeafPairing> pairings;
  pairings.reserve(asg->leaf_ids.size());
  for (std::uint32_t id : asg->leaf_ids) {
    const FlatNode& fn = flat[id];
    auto it = comp_by_attr.find(fn.node->attribute);
    if (it == comp_by_attr.end() || fn.leaf_index >= rec.leaves.size()) {
      return decrypt_fail(DecryptStatus::kNotSatisfied,
                          "assignment references unavailable component");
    }
    const RecordLeaf& leaf = rec.leaves[fn.leaf_index];
    pairings.push_back(LeafPairing{it->second->d, leaf.cy, leaf.cyp,
                                   it->second->dp});
  }
  auto leaf_values = decrypt_leaves(pairings, exec);
  if (!leaf_values.ok()) {
    return decrypt_fail(DecryptStatus::kMalformed,
                        leaf_values.error().message);
  }
  std::map<std::uint32_t, TargetElement> leaf_f;
  for (std::size_t i = 0; i < asg->leaf_ids.size(); ++i) {
    leaf_f.emplace(asg->leaf_ids[i], leaf_values.value()[i]);
  }

  // Tree combination gives F_R = e(g1,g2)^{r*f(1)}; the vk node supplies
  // F_vk = e(g1,g2)^{r*f(2)}; interpolating the line at zero recovers
  // e(g1,g2)^{r*s}.
  auto f_root = combine_gates(flat, 0, *asg, leaf_f);
  if (!f_root.ok()) {
    return decrypt_fail(DecryptStatus::kMalformed, f_root.error().message);
  }
  auto f_vk = pair(sk.e, rec.c_vk);
  if (!f_vk.ok()) {
    return decrypt_fail(DecryptStatus::kMalformed, f_vk.error().message);
  }
  const std::vector<std::uint32_t> line_ids{1, 2};
  Scalar l1 = lagrange_coeff(1, line_ids).take();
  Scalar l2 = lagrange_coeff(2, line_ids).take();
  TargetElement a = f_root.value().exp(l1) * f_vk.value().exp(l2);

  // K = e(C1, D) / e(g1,g2)^{r*s} = e(g1,g2)^{a*s}.
  auto blinded = pair(rec.c1, sk.d);
  if (!blinded.ok()) {
    return decrypt_fail(DecryptStatus::kMalformed, blinded.error().message);
  }
  TargetElement k = blinded.value() * a.inverse();

  auto opened =
      envelope_open(derive_envelope_key(k), rec.envelope,
                    record_aad(rec.owner_id, rec.created_at));
  if (!opened.ok()) {
    DecryptStatus st = opened.code() == Errc::kEnvelopeAuthFailed
                           ? DecryptStatus::kEnvelopeAuthFailed
                           : DecryptStatus::kMalformed;
    return decrypt_fail(st, opened.error().message);
  }
  DecryptResult out;
  out.status = DecryptStatus::kOk;
  out.plaintext = std::move(opened).take();
  return out;
}

DecryptResult decrypt_record_bytes(const PublicParams& pp,
                                   const AttributeKey& sk,
                                   std::span<const std::uint8_t> record_bytes,
                                   const CivilDate& now,
                                   const ExecPolicy& exec) {
  auto rec = SealedRecord::from_bytes(record_bytes);
  if (!rec.ok()) {
    DecryptStatus st = rec.code() == Errc::kSignatureInvalid
                           ? DecryptStatus::kSignatureInvalid
                           : DecryptStatus::kMalformed;
    return decrypt_fail(st, rec.error().message);
  }
  return decrypt(pp, sk, rec.value(), now, exec);
}

std::optional<TargetElement> decrypt_node(const AttributeKey& sk,
                                          const SealedRecord& rec,
                                          std::uint32_t node_id) {
  std::vector<FlatNode> flat = flatten(rec.policy);
  if (node_id >= flat.size()) return std::nullopt;
  std::map<std::string, const AttributeKeyComponent*> comp_by_attr;
  for (const auto& c : sk.components) comp_by_attr[c.attribute] = &c;

  // The textbook recursion: leaves pair, gates interpolate the first
  // `threshold` satisfiable children.
  auto recurse = [&](auto&& self, std::uint32_t id)
      -> std::optional<TargetElement> {
    const FlatNode& fn = flat[id];
    if (fn.node->is_leaf()) {
      auto it = comp_by_attr.find(fn.node->attribute);
      if (it == comp_by_attr.end() || fn.leaf_index >= rec.leaves.size()) {
        return std::nullopt;
      }
      const RecordLeaf& leaf = rec.leaves[fn.leaf_index];
      auto v = pair_ratio(it->second->d, leaf.cy, leaf.cyp, it->second->dp);
      if (!v.ok()) return std::nullopt;
      return std::move(v).take();
    }
    std::vector<std::pair<std::uint32_t, TargetElement>> avail;
    for (std::size_t i = 0; i < fn.child_ids.size(); ++i) {
      auto v = self(self, fn.child_ids[i]);
      if (v) {
        avail.emplace_back(static_cast<std::uint32_t>(i + 1), *v);
        if (avail.size() == fn.node->threshold) break;
      }
    }
    if (avail.size() < fn.node->threshold) return std::nullopt;
    std::vector<std::uint32_t> indices;
    for (const auto& [idx, v] : avail) indices.push_back(idx);
    TargetElement acc = TargetElement::identity();
    for (const auto& [idx, v] : avail) {
      auto lc = lagrange_coeff(idx, indices);
      if (!lc.ok()) return std::nullopt;
      acc = acc * v.exp(lc.value());
    }
    return acc;
  };
  return recurse(recurse, node_id);
}

// ---- size accounting -----------------------------------------------------------

std::uint32_t pk_element_count() { return 5; }

std::uint32_t sk_element_count(std::uint32_t n_attrs) {
  return 2 + 2 * n_attrs;
}

std::uint32_t ct_element_count(std::uint32_t n_leaves) {
  return 2 * n_leaves + 3;
}

SizeReport size_report(const PublicParams& pp, const AttributeKey& sk,
                       const SealedRecord& rec) {
  SizeReport report;
  const auto n_attrs = static_cast<std::uint32_t>(sk.components.size());
  const auto n_leaves = static_cast<std::uint32_t>(rec.leaves.size());
  report.entries.push_back(SizeEntry{
      "public-params", pk_element_count(), pp.to_bytes().size(),
      "5 elements (g1, h1, g2, h2, e(g1,g2)^a) + hash domain"});
  report.entries.push_back(SizeEntry{
      "attribute-key", sk_element_count(n_attrs), sk.to_bytes().size(),
      "2 + 2*|S| elements, |S| = " + std::to_string(n_attrs)});
  report.entries.push_back(SizeEntry{
      "sealed-record", ct_element_count(n_leaves), rec.to_bytes().size(),
      "2*L + 3 elements, L = " + std::to_string(n_leaves) +
          " leaves, plus signature and envelope"});
  return report;
}

std::string size_report_to_text(const SizeReport& report) {
  std::ostringstream os;
  os << "artifact         elements  bytes     composition\n";
  for (const auto& e : report.entries) {
    os << e.artifact;
    for (std::size_t i = e.artifact.size(); i < 17; ++i) os << ' ';
    std::string el = std::to_string(e.elements);
    os << el;
    for (std::size_t i = el.size(); i < 10; ++i) os << ' ';
    std::string by = std::to_string(e.bytes);
    os << by;
    for (std::size_t i = by.size(); i < 10; ++i) os << ' ';
    os << e.formula << '\n';
  }
  return os.str();
}

}  // namespace phrfog
