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
//
// Ciphertext-policy attribute-based encryption with signed, time-limited
// artifacts.  A record owner encrypts under an access tree; the authority
// issues per-user keys for attribute sets with a validity window; anyone
// whose attributes satisfy the tree during the window recovers the payload.
//
// Construction summary (two generators g1/g2, master secrets a, b1, b2):
//   params:  h1 = g1^b1, h2 = g2^b2, e(g1,g2)^a
//   key:     r fresh per user; D = g2^{(a+r)/b1}, E = g1^{r/b2};
//            per attribute j: d_j = g1^r * H(j)^{r_j}, dp_j = g2^{r_j}
//   seal:    s fresh; the tree splits not s but f(1) of the line
//            f(z) = s + c*z, and a verification-key node receives f(2):
//            C1 = h1^s, leaf y: (g2^{q_y}, H(att)^{q_y}),
//            vk node: (C_vk = h2^{f(2)}, C'_vk = H(vk)^{f(2)}).
//            The payload is sealed under a key derived from e(g1,g2)^{a*s},
//            and a one-time signature under vk covers ciphertext + envelope.
//   open:    leaves give e(g1,g2)^{r*q_y}; Lagrange up the tree gives
//            F_R = e(g1,g2)^{r*f(1)}; F_vk = e(E, C_vk) = e(g1,g2)^{r*f(2)};
//            interpolating {1: F_R, 2: F_vk} at zero yields e(g1,g2)^{r*s},
//            and e(C1, D) divided by it is e(g1,g2)^{a*s}.
// Weaving vk into the sharing is what makes the signature non-strippable:
// replacing (vk, sigma) with a fresh pair breaks either the binding check
// e(H(vk), C_vk) == e(C'_vk, h2) or the interpolation, so a modified record
// never opens.

#ifndef PHRFOG_CPABE_HPP_
#define PHRFOG_CPABE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phrfog/bytes.hpp"
#include "phrfog/dates.hpp"
#include "phrfog/envelope.hpp"
#include "phrfog/group.hpp"
#include "phrfog/kernels.hpp"
#include "phrfog/onetime_sig.hpp"
#include "phrfog/policy.hpp"
#include "phrfog/result.hpp"
#include "phrfog/rng.hpp"

namespace phrfog {

inline constexpr std::uint8_t kArtifactVersion = 1;
inline constexpr std::size_t kKeyIdBytes = 16;
inline constexpr std::size_t kRecordDigestBytes = 32;

// Public parameters: five group elements plus the attribute-hash domain.
struct PublicParams {
  GroupDescriptor desc;
  SourceElement g1;         // side A generator
  SourceElement g2;         // side B generator
  SourceElement h1;         // side A, g1^b1
  SourceElement h2;         // side B, g2^b2
  TargetElement egg_alpha;  // e(g1, g2)^a
  std::string hash_domain;  // base domain for hashing into the group

  Bytes to_bytes() const;
  static Result<PublicParams> from_bytes(std::span<const std::uint8_t> in);
};

// Master key, held by the authority only.
struct MasterKey {
  Scalar beta1;
  Scalar beta2;
  SourceElement g_alpha;  // side B, g2^a

  Bytes to_bytes() const;
  static Result<MasterKey> from_bytes(std::span<const std::uint8_t> in);
};

struct AttributeKeyComponent {
  std::string attribute;  // normalized
  SourceElement d;        // side A, g1^r * H(attribute)^{r_j}
  SourceElement dp;       // side B, g2^{r_j}
};

// A user's decryption key: valid for its attribute set on the days in
// `validity` and on no other day.
struct AttributeKey {
  SourceElement d;  // side B, g2^{(a+r)/b1}
  SourceElement e;  // side A, g1^{r/b2}
  std::vector<AttributeKeyComponent> components;
  ValiditySet validity;
  std::array<std::uint8_t, kKeyIdBytes> key_id{};

  std::vector<std::string> attributes() const;

  Bytes to_bytes() const;
  static Result<AttributeKey> from_bytes(std::span<const std::uint8_t> in);
};

// Ciphertext leaf components, stored in the tree's preorder leaf order.
struct RecordLeaf {
  SourceElement cy;   // side B, g2^{q_y(0)}
  SourceElement cyp;  // side A, H(att(y))^{q_y(0)}
};

// A sealed record: the attribute-ciphertext, the one-time signature over
// ciphertext and envelope, the sealed payload, and plaintext metadata that
// the envelope's associated data authenticates.
struct SealedRecord {
  AccessTree policy;
  SourceElement c1;  // side A, h1^s
  std::vector<RecordLeaf> leaves;
  SourceElement c_vk;   // side B, h2^{f(2)}
  SourceElement c_vkp;  // side A, H(vk)^{f(2)}
  std::array<std::uint8_t, kOtsVerifyKeyBytes> vk{};
  std::array<std::uint8_t, kOtsSignatureBytes> sigma{};
  Bytes envelope;
  std::string owner_id;
  std::string created_at;  // YYYY-MM-DD

  // The attribute-ciphertext bytes the one-time signature covers (together
  // with the envelope): policy tree, C1, leaves, vk node components, vk.
  Bytes canonical_ct_bytes() const;

  Bytes to_bytes() const;
  // Structural parse, then signature verification over the raw ciphertext
  // slice, then full element validation.
  static Result<SealedRecord> from_bytes(std::span<const std::uint8_t> in);
};

// Content digest of a serialized record (BLAKE2b-256); the store addresses
// records by this value.
std::array<std::uint8_t, kRecordDigestBytes> record_digest(
    std::span<const std::uint8_t> record_bytes);

// ---- debug taps ---------------------------------------------------------------
// Optional out-parameters exposing internal randomness so tests can check
// the algebraic relations directly.  Never use outside tests.

struct SetupDebug {
  Scalar alpha;
  Scalar beta1;
  Scalar beta2;
  std::uint32_t beta_resamples = 0;
};

struct KeygenDebug {
  Scalar r;
  std::map<std::string, Scalar> r_j;
};

struct EncryptDebug {
  Scalar s;                               // sealed exponent, f(0)
  Scalar root_share;                      // f(1), shared down the tree
  Scalar vk_share;                        // f(2), the vk node's share
  std::map<std::uint32_t, Scalar> shares; // policy node id -> share
  std::array<std::uint8_t, kOtsVerifyKeyBytes> vk{};
};

// ---- the four operations ---------------------------------------------------------

struct SetupResult {
  PublicParams pp;
  MasterKey mk;
};

// Draws master secrets (all nonzero, b1 != b2) and derives parameters.
SetupResult setup(RandomSource& rng, SetupDebug* dbg = nullptr);

// Issues a key for `attributes` (deduplicated, normalized; must be
// non-empty) valid on the days in `validity` (must be non-empty).
Result<AttributeKey> keygen(const PublicParams& pp, const MasterKey& mk,
                            const std::vector<std::string>& attributes,
                            const ValiditySet& validity, RandomSource& rng,
                            const ExecPolicy& exec = {},
                            KeygenDebug* dbg = nullptr);

// Seals `plaintext` under `policy` with metadata (owner, creation date).
Result<SealedRecord> encrypt(const PublicParams& pp, const AccessTree& policy,
                             std::span<const std::uint8_t> plaintext,
                             std::string owner_id, const CivilDate& created_at,
                             RandomSource& rng, const ExecPolicy& exec = {},
                             EncryptDebug* dbg = nullptr);

enum class DecryptStatus {
  kOk,
  kNotSatisfied,       // key attributes do not satisfy the policy
  kExpired,            // `now` outside the key's validity days
  kSignatureInvalid,   // one-time signature or vk binding check failed
  kEnvelopeAuthFailed, // wrong group element or tampered envelope/metadata
  kMalformed,          // record structure invalid
};

const char* decrypt_status_name(DecryptStatus s);

struct DecryptResult {
  DecryptStatus status = DecryptStatus::kMalformed;
  Bytes plaintext;
  std::string detail;

  bool ok() const { return status == DecryptStatus::kOk; }
};

// Opens a record.  Checks run in a fixed order, each gating the next:
//   1. one-time signature over ciphertext + envelope
//   2. key validity on `now` (before any pairing work)
//   3. policy satisfaction by the key's attributes
//   4. vk binding: e(H(vk), C_vk) == e(C'_vk, h2)
//   5. leaf pairings, Lagrange combination, envelope opening
DecryptResult decrypt(const PublicParams& pp, const AttributeKey& sk,
                      const SealedRecord& rec, const CivilDate& now,
                      const ExecPolicy& exec = {});

// Parses and opens serialized record bytes.
DecryptResult decrypt_record_bytes(const PublicParams& pp,
                                   const AttributeKey& sk,
                                   std::span<const std::uint8_t> record_bytes,
                                   const CivilDate& now,
                                   const ExecPolicy& exec = {});

// The recursive per-node opening the scheme is defined by: the value
// e(g1,g2)^{r*q_x(0)} at node id `node_id`, or nullopt when the key cannot
// satisfy that subtree.  Exposed for tests and diagnostics.
std::optional<TargetElement> decrypt_node(const AttributeKey& sk,
                                          const SealedRecord& rec,
                                          std::uint32_t node_id);

// ---- size accounting -----------------------------------------------------------

// Group elements in each artifact as a function of its shape.
std::uint32_t pk_element_count();                        // 5
std::uint32_t sk_element_count(std::uint32_t n_attrs);   // 2 + 2n
std::uint32_t ct_element_count(std::uint32_t n_leaves);  // 2n + 3

struct SizeEntry {
  std::string artifact;
  std::uint32_t elements;
  std::uint64_t bytes;  // serialized size
  std::string formula;
};

struct SizeReport {
  std::vector<SizeEntry> entries;
};

SizeReport size_report(const PublicParams& pp, const AttributeKey& sk,
                       const SealedRecord& rec);
std::string size_report_to_text(const SizeReport& report);

}  // namespace phrfog

#endif  // PHRFOG_CPABE_HPP_
