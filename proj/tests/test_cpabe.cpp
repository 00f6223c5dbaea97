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

// Scheme tests: setup/keygen/encrypt/decrypt algebra (checked against the
// exposed debug taps), artifact serialization, the fixed order of decrypt's
// checks, tamper behavior, and size accounting.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "phrfog/bytes.hpp"
#include "phrfog/cpabe.hpp"
#include "phrfog/dates.hpp"
#include "phrfog/group.hpp"
#include "phrfog/onetime_sig.hpp"
#include "phrfog/policy.hpp"
#include "phrfog/rng.hpp"

namespace {

using namespace phrfog;

Bytes bytes_of(std::string_view s) { return Bytes(s.begin(), s.end()); }

CivilDate date(const char* text) { return CivilDate::parse(text).value(); }

ValiditySet year_2026() {
  return ValiditySet::from_intervals(
             {DateInterval{date("2026-01-01"), date("2026-12-31")}})
      .value();
}

// Replays scripted 32-byte chunks, then falls back to a deterministic
// stream.  Used to steer individual scalar draws inside setup.
class ScriptedRandom final : public RandomSource {
 public:
  ScriptedRandom(std::deque<std::array<std::uint8_t, 32>> chunks,
                 std::uint64_t fallback_seed)
      : chunks_(std::move(chunks)), fallback_(fallback_seed) {}

  void fill(std::uint8_t* buf, std::size_t n) override {
    if (!chunks_.empty() && n == 32) {
      std::copy(chunks_.front().begin(), chunks_.front().end(), buf);
      chunks_.pop_front();
      return;
    }
    fallback_.fill(buf, n);
  }

 private:
  std::deque<std::array<std::uint8_t, 32>> chunks_;
  DeterministicRandom fallback_;
};

std::array<std::uint8_t, 32> chunk(std::uint8_t tail) {
  // Low first byte keeps the value canonical (< r) after the 255-bit mask.
  std::array<std::uint8_t, 32> c{};
  c[0] = 0x01;
  c[31] = tail;
  return c;
}

// Preorder node ids with child links, matching the policy module numbering.
struct FlatView {
  const PolicyNode* node = nullptr;
  std::vector<std::uint32_t> child_ids;
  std::uint32_t leaf_index = 0;
};

std::vector<FlatView> flatten(const AccessTree& t) {
  std::vector<FlatView> out;
  std::uint32_t next_leaf = 0;
  auto walk = [&](auto&& self, const PolicyNode& n) -> std::uint32_t {
    auto id = static_cast<std::uint32_t>(out.size());
    out.emplace_back();
    out[id].node = &n;
    if (n.is_leaf()) out[id].leaf_index = next_leaf++;
    for (const auto& c : n.children) {
      std::uint32_t cid = self(self, c);
      out[id].child_ids.push_back(cid);
    }
    return id;
  };
  walk(walk, t.root);
  return out;
}

struct TestContext {
  SetupDebug setup_dbg;
  SetupResult keys;
  TargetElement base;  // e(g1, g2)

  static TestContext make(std::uint64_t seed) {
    TestContext ctx;
    DeterministicRandom rng(seed);
    ctx.keys = setup(rng, &ctx.setup_dbg);
    ctx.base = pair(ctx.keys.pp.g1, ctx.keys.pp.g2).take();
    return ctx;
  }
};

}  // namespace

TEST_CASE("setup derives parameters that satisfy the scheme relations") {
  auto ctx = TestContext::make(1);
  const PublicParams& pp = ctx.keys.pp;
  const MasterKey& mk = ctx.keys.mk;
  const SetupDebug& dbg = ctx.setup_dbg;

  CHECK(pp.desc == GroupDescriptor::bls12_381());
  CHECK(pp.g1 == SourceElement::generator(Side::kA));
  CHECK(pp.g2 == SourceElement::generator(Side::kB));
  CHECK(!pp.hash_domain.empty());

  // h1 = g1^b1, h2 = g2^b2, e(g1,g2)^a — checked through pairings so the
  // exponents themselves never leave the debug tap.
  CHECK(pair(pp.h1, pp.g2).value() == ctx.base.exp(dbg.beta1));
  CHECK(pair(pp.g1, pp.h2).value() == ctx.base.exp(dbg.beta2));
  CHECK(pp.egg_alpha == ctx.base.exp(dbg.alpha));
  CHECK(mk.g_alpha == pp.g2.exp(dbg.alpha));
  CHECK(mk.beta1 == dbg.beta1);
  CHECK(mk.beta2 == dbg.beta2);

  CHECK(!dbg.alpha.is_zero());
  CHECK(!dbg.beta1.is_zero());
  CHECK(!dbg.beta2.is_zero());
  CHECK(dbg.beta1 != dbg.beta2);
}

TEST_CASE("setup is deterministic under a fixed seed") {
  DeterministicRandom a(42), b(42), c(43);
  auto ra = setup(a);
  auto rb = setup(b);
  auto rc = setup(c);
  CHECK(ra.pp.to_bytes() == rb.pp.to_bytes());
  CHECK(ra.mk.to_bytes() == rb.mk.to_bytes());
  CHECK(ra.pp.to_bytes() != rc.pp.to_bytes());
}

TEST_CASE("setup redraws b2 when it collides with b1") {
  // Script the scalar draws: alpha, b1, then b2 twice b1's value (two
  // collisions), then a distinct value.
  std::deque<std::array<std::uint8_t, 32>> chunks = {
      chunk(0x11), chunk(0x22), chunk(0x22), chunk(0x22), chunk(0x33)};
  ScriptedRandom rng(std::move(chunks), 7);
  SetupDebug dbg;
  auto r = setup(rng, &dbg);
  CHECK(dbg.beta_resamples == 2);
  CHECK(dbg.beta1 != dbg.beta2);
  CHECK(dbg.beta1 == Scalar::from_bytes(chunk(0x22)).value());
  CHECK(dbg.beta2 == Scalar::from_bytes(chunk(0x33)).value());
  CHECK(r.mk.beta1 != r.mk.beta2);
}

TEST_CASE("keygen issues components satisfying the key equations") {
  auto ctx = TestContext::make(2);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(20);
  KeygenDebug kdbg;
  auto sk = keygen(pp, ctx.keys.mk, {"radiography", "doctorlevel A", "ward 3"},
                   year_2026(), rng, {}, &kdbg);
  REQUIRE(sk.ok());
  const AttributeKey& key = sk.value();

  CHECK(key.components.size() == 3);
  CHECK(key.attributes() ==
        std::vector<std::string>{"radiography", "doctorlevel A", "ward 3"});
  CHECK(sk_element_count(3) == 8);

  // e(h1, D) == e(g1,g2)^{a + r} i.e. D == g2^{(a+r)/b1}.
  CHECK(pair(pp.h1, key.d).value() ==
        ctx.base.exp(ctx.setup_dbg.alpha + kdbg.r));
  // e(E, h2) == e(g1,g2)^r i.e. E == g1^{r/b2}.
  CHECK(pair(key.e, pp.h2).value() == ctx.base.exp(kdbg.r));

  // Per attribute j: d_j = g1^r * H(j)^{r_j} and dp_j = g2^{r_j}, so
  // e(d_j, g2) == e(g1,g2)^r * e(H(j), dp_j).
  for (const auto& comp : key.components) {
    CAPTURE(comp.attribute);
    REQUIRE(kdbg.r_j.count(comp.attribute) == 1);
    const Scalar& rj = kdbg.r_j.at(comp.attribute);
    SourceElement h =
        hash_to_group(pp.hash_domain + ":attr", comp.attribute);
    CHECK(comp.dp == pp.g2.exp(rj));
    CHECK(pair(comp.d, pp.g2).value() ==
          ctx.base.exp(kdbg.r) * pair(h, comp.dp).value());
    CHECK(comp.d.side() == Side::kA);
    CHECK(comp.dp.side() == Side::kB);
  }

  // key ids are distinct across issuances.
  DeterministicRandom rng2(21);
  auto sk2 = keygen(pp, ctx.keys.mk, {"radiography"}, year_2026(), rng2);
  REQUIRE(sk2.ok());
  CHECK(key.key_id != sk2.value().key_id);
}

TEST_CASE("keygen normalizes, deduplicates, and validates input") {
  auto ctx = TestContext::make(3);
  DeterministicRandom rng(30);

  auto sk = keygen(ctx.keys.pp, ctx.keys.mk,
                   {"  doctorlevel   A ", "doctorlevel A", "radiography"},
                   year_2026(), rng);
  REQUIRE(sk.ok());
  CHECK(sk.value().attributes() ==
        std::vector<std::string>{"doctorlevel A", "radiography"});

  auto empty_attr =
      keygen(ctx.keys.pp, ctx.keys.mk, {"   "}, year_2026(), rng);
  CHECK(!empty_attr.ok());
  CHECK(empty_attr.error().code == Errc::kInvalidArgument);

  auto no_attrs = keygen(ctx.keys.pp, ctx.keys.mk, {}, year_2026(), rng);
  CHECK(!no_attrs.ok());

  auto no_validity =
      keygen(ctx.keys.pp, ctx.keys.mk, {"radiography"}, ValiditySet{}, rng);
  CHECK(!no_validity.ok());
  CHECK(no_validity.error().code == Errc::kInvalidArgument);
}

TEST_CASE("encrypt splits the super-root line and publishes consistent parts") {
  auto ctx = TestContext::make(4);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(40);
  AccessTree policy =
      parse_policy("(radiography and doctorlevel A) or 2 of (a, b, c)")
          .value();

  EncryptDebug edbg;
  auto rec = encrypt(pp, policy, bytes_of("vitals"), "owner-1",
                     date("2026-06-15"), rng, {}, &edbg);
  REQUIRE(rec.ok());
  const SealedRecord& sealed = rec.value();

  // The line f(z) = s + c*z: f(1) and f(2) differ by the same step that
  // separates f(1) from f(0) = s.
  CHECK(edbg.root_share - edbg.s == edbg.vk_share - edbg.root_share);
  CHECK(edbg.root_share != edbg.s);  // c != 0
  CHECK(edbg.shares.at(0) == edbg.root_share);
  CHECK(edbg.shares.size() == policy.node_count());

  // Published pieces match their defining exponents.
  CHECK(sealed.c1 == pp.h1.exp(edbg.s));
  CHECK(sealed.c_vk == pp.h2.exp(edbg.vk_share));
  CHECK(sealed.c_vkp ==
        hash_to_group(pp.hash_domain + ":vk",
                      std::span<const std::uint8_t>(sealed.vk))
            .exp(edbg.vk_share));
  CHECK(sealed.vk == edbg.vk);

  // Leaves, in preorder leaf order: C_y = g2^{q_y}, C'_y = H(att)^{q_y}.
  auto flat = flatten(policy);
  REQUIRE(sealed.leaves.size() == policy.leaf_count());
  for (const auto& fv : flat) {
    if (!fv.node->is_leaf()) continue;
    auto id = static_cast<std::uint32_t>(&fv - flat.data());
    const Scalar& q = edbg.shares.at(id);
    const RecordLeaf& leaf = sealed.leaves[fv.leaf_index];
    CHECK(leaf.cy == pp.g2.exp(q));
    CHECK(leaf.cyp ==
          hash_to_group(pp.hash_domain + ":attr", fv.node->attribute).exp(q));
  }

  CHECK(sealed.policy == policy);
  CHECK(sealed.owner_id == "owner-1");
  CHECK(sealed.created_at == "2026-06-15");
}

TEST_CASE("encrypt draws a fresh sealing exponent per record") {
  auto ctx = TestContext::make(5);
  DeterministicRandom rng(50);
  AccessTree policy = parse_policy("radiography").value();
  EncryptDebug d1, d2;
  auto r1 = encrypt(ctx.keys.pp, policy, bytes_of("x"), "o",
                    date("2026-06-15"), rng, {}, &d1);
  auto r2 = encrypt(ctx.keys.pp, policy, bytes_of("x"), "o",
                    date("2026-06-15"), rng, {}, &d2);
  REQUIRE(r1.ok());
  REQUIRE(r2.ok());
  CHECK(d1.s != d2.s);
  CHECK(d1.vk != d2.vk);
  CHECK(r1.value().c1 != r2.value().c1);
  CHECK(r1.value().to_bytes() != r2.value().to_bytes());
}

TEST_CASE("encrypt rejects a malformed policy tree") {
  auto ctx = TestContext::make(6);
  DeterministicRandom rng(60);
  AccessTree bad;
  bad.root.kind = PolicyNode::Kind::kGate;
  bad.root.threshold = 0;  // out of range
  bad.root.children.resize(2);
  bad.root.children[0].attribute = "a";
  bad.root.children[1].attribute = "b";
  auto r = encrypt(ctx.keys.pp, bad, bytes_of("x"), "o", date("2026-06-15"),
                   rng);
  CHECK(!r.ok());
  CHECK(r.error().code == Errc::kInvalidArgument);
}

TEST_CASE("decrypt round-trips across policy shapes") {
  auto ctx = TestContext::make(7);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(70);
  const CivilDate now = date("2026-06-15");

  struct Case {
    const char* policy;
    std::vector<std::string> attrs;
  };
  const Case cases[] = {
      {"radiography", {"radiography"}},
      {"radiography and doctorlevel A", {"doctorlevel A", "radiography"}},
      {"a or b", {"b"}},
      {"2 of (a, b, c)", {"a", "c"}},
      {"(a and b) or (c and d)", {"c", "d"}},
      {"2 of (a, b and c, d or e)", {"a", "e"}},
  };
  for (const auto& tc : cases) {
    CAPTURE(tc.policy);
    AccessTree policy = parse_policy(tc.policy).value();
    Bytes payload = bytes_of(std::string("payload for ") + tc.policy);
    auto rec = encrypt(pp, policy, payload, "owner", now, rng);
    REQUIRE(rec.ok());
    auto sk = keygen(pp, ctx.keys.mk, tc.attrs, year_2026(), rng);
    REQUIRE(sk.ok());
    auto out = decrypt(pp, sk.value(), rec.value(), now);
    REQUIRE(out.ok());
    CHECK(out.plaintext == payload);
  }

  SUBCASE("empty payload") {
    AccessTree policy = parse_policy("radiography").value();
    auto rec = encrypt(pp, policy, Bytes{}, "owner", now, rng);
    REQUIRE(rec.ok());
    auto sk = keygen(pp, ctx.keys.mk, {"radiography"}, year_2026(), rng);
    auto out = decrypt(pp, sk.value(), rec.value(), now);
    REQUIRE(out.ok());
    CHECK(out.plaintext.empty());
  }

  SUBCASE("extra attributes beyond the policy do not hurt") {
    AccessTree policy = parse_policy("a and b").value();
    auto rec = encrypt(pp, policy, bytes_of("x"), "owner", now, rng);
    auto sk = keygen(pp, ctx.keys.mk, {"z", "b", "q", "a"}, year_2026(), rng);
    CHECK(decrypt(pp, sk.value(), rec.value(), now).ok());
  }
}

TEST_CASE("decrypt refuses an unsatisfying key with kNotSatisfied") {
  auto ctx = TestContext::make(8);
  DeterministicRandom rng(80);
  const CivilDate now = date("2026-06-15");
  AccessTree policy = parse_policy("radiography and doctorlevel A").value();
  auto rec =
      encrypt(ctx.keys.pp, policy, bytes_of("x"), "owner", now, rng).value();

  auto sk = keygen(ctx.keys.pp, ctx.keys.mk, {"radiography"}, year_2026(),
                   rng);
  auto out = decrypt(ctx.keys.pp, sk.value(), rec, now);
  CHECK(out.status == DecryptStatus::kNotSatisfied);
  CHECK(out.plaintext.empty());

  // Near-miss attribute names do not satisfy either.
  auto sk2 = keygen(ctx.keys.pp, ctx.keys.mk,
                    {"Radiography", "doctorlevel a"}, year_2026(), rng);
  CHECK(decrypt(ctx.keys.pp, sk2.value(), rec, now).status ==
        DecryptStatus::kNotSatisfied);
}

TEST_CASE("a key from a different authority never opens the envelope") {
  auto ctx_a = TestContext::make(9);
  auto ctx_b = TestContext::make(10);
  DeterministicRandom rng(90);
  const CivilDate now = date("2026-06-15");
  AccessTree policy = parse_policy("radiography").value();
  auto rec = encrypt(ctx_a.keys.pp, policy, bytes_of("x"), "owner", now, rng)
                 .value();
  // Key issued under authority B for the right attributes.
  auto sk_b =
      keygen(ctx_b.keys.pp, ctx_b.keys.mk, {"radiography"}, year_2026(), rng);
  auto out = decrypt(ctx_a.keys.pp, sk_b.value(), rec, now);
  CHECK(!out.ok());
  CHECK(out.status == DecryptStatus::kEnvelopeAuthFailed);
}

TEST_CASE("decrypt's checks run in their documented order") {
  auto ctx = TestContext::make(11);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(110);
  AccessTree policy = parse_policy("radiography and doctorlevel A").value();
  auto rec = encrypt(pp, policy, bytes_of("x"), "owner", date("2026-06-15"),
                     rng)
                 .value();
  auto validity = ValiditySet::from_intervals({DateInterval{
                      date("2020-06-20"), date("2020-06-22")}})
                      .value();
  auto sk = keygen(pp, ctx.keys.mk, {"radiography", "doctorlevel A"},
                   validity, rng)
                .value();

  SUBCASE("signature failure reports before expiry, with zero pairings") {
    SealedRecord tampered = rec;
    tampered.sigma[0] ^= 1;
    reset_pairing_op_count();
    auto out = decrypt(pp, sk, tampered, date("2026-06-15"));
    CHECK(out.status == DecryptStatus::kSignatureInvalid);
    CHECK(pairing_op_count() == 0);
  }

  SUBCASE("expiry is decided before any pairing work") {
    reset_pairing_op_count();
    auto out = decrypt(pp, sk, rec, date("2020-06-23"));
    CHECK(out.status == DecryptStatus::kExpired);
    CHECK(pairing_op_count() == 0);
    CHECK(out.detail.find("2020-06-23") != std::string::npos);
  }

  SUBCASE("the key works inside its window") {
    // Same key, a day earlier: every later stage must pass.
    auto out = decrypt(pp, sk, rec, date("2020-06-21"));
    CHECK(out.ok());
  }

  SUBCASE("dissatisfaction is decided before any pairing work") {
    auto narrow =
        keygen(pp, ctx.keys.mk, {"radiography"}, year_2026(), rng).value();
    reset_pairing_op_count();
    auto out = decrypt(pp, narrow, rec, date("2026-06-15"));
    CHECK(out.status == DecryptStatus::kNotSatisfied);
    CHECK(pairing_op_count() == 0);
  }

  SUBCASE("a successful decrypt pairs exactly 2n+4 times") {
    auto good = keygen(pp, ctx.keys.mk, {"radiography", "doctorlevel A"},
                       year_2026(), rng)
                    .value();
    reset_pairing_op_count();
    auto out = decrypt(pp, good, rec, date("2026-06-15"));
    REQUIRE(out.ok());
    // n = 2 leaves used: binding ratio (2) + leaf ratios (2n) + F_vk (1)
    // + e(C1, D) (1).
    CHECK(pairing_op_count() == 2 * 2 + 4);
  }
}

TEST_CASE("swapping the one-time key pair trips the binding check") {
  auto ctx = TestContext::make(12);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(120);
  const CivilDate now = date("2026-06-15");
  AccessTree policy = parse_policy("radiography").value();
  auto rec = encrypt(pp, policy, bytes_of("x"), "owner", now, rng).value();
  auto sk =
      keygen(pp, ctx.keys.mk, {"radiography"}, year_2026(), rng).value();
  REQUIRE(decrypt(pp, sk, rec, now).ok());

  // Forge: replace vk with a fresh pair and re-sign the mutated ciphertext.
  // The signature itself then verifies, but C'_vk still equals H(old vk)
  // raised to the share, so the binding pairing check must reject.
  OneTimeKeyPair fresh = ots_keygen(rng);
  SealedRecord forged = rec;
  forged.vk = fresh.vk;
  ByteWriter w;
  w.raw(forged.canonical_ct_bytes());
  w.blob(forged.envelope);
  Bytes msg = w.take();
  forged.sigma = ots_sign(fresh, msg);

  auto out = decrypt(pp, sk, forged, now);
  CHECK(out.status == DecryptStatus::kSignatureInvalid);
  CHECK(out.detail.find("binding") != std::string::npos);
}

TEST_CASE("decrypt_node computes e(g1,g2)^(r*share) exactly where satisfiable") {
  auto ctx = TestContext::make(13);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(130);
  AccessTree policy = parse_policy("2 of (a, b, c)").value();

  EncryptDebug edbg;
  auto rec = encrypt(pp, policy, bytes_of("x"), "owner", date("2026-06-15"),
                     rng, {}, &edbg)
                 .value();
  KeygenDebug kdbg;
  auto sk =
      keygen(pp, ctx.keys.mk, {"a", "c"}, year_2026(), rng, {}, &kdbg)
          .value();

  // Preorder ids: 0 = gate, 1 = a, 2 = b, 3 = c.
  auto expect = [&](std::uint32_t id) {
    return ctx.base.exp(kdbg.r * edbg.shares.at(id));
  };

  auto at_a = decrypt_node(sk, rec, 1);
  REQUIRE(at_a.has_value());
  CHECK(*at_a == expect(1));

  CHECK(!decrypt_node(sk, rec, 2).has_value());  // no component for b

  auto at_c = decrypt_node(sk, rec, 3);
  REQUIRE(at_c.has_value());
  CHECK(*at_c == expect(3));

  // Root: Lagrange over {1, 3} recovers r * f(1).
  auto at_root = decrypt_node(sk, rec, 0);
  REQUIRE(at_root.has_value());
  CHECK(*at_root == ctx.base.exp(kdbg.r * edbg.root_share));

  // Out-of-range node id is a clean miss.
  CHECK(!decrypt_node(sk, rec, 99).has_value());

  // A key missing two of three leaves cannot satisfy the gate.
  auto sk_one = keygen(pp, ctx.keys.mk, {"b"}, year_2026(), rng).value();
  CHECK(!decrypt_node(sk_one, rec, 0).has_value());
  CHECK(decrypt_node(sk_one, rec, 2).has_value());
}

TEST_CASE("artifact serialization round-trips and rejects wrong framing") {
  auto ctx = TestContext::make(14);
  DeterministicRandom rng(140);
  auto sk = keygen(ctx.keys.pp, ctx.keys.mk, {"radiography", "ward 3"},
                   year_2026(), rng)
                .value();
  AccessTree policy = parse_policy("radiography and ward 3").value();
  auto rec = encrypt(ctx.keys.pp, policy, bytes_of("payload"), "owner",
                     date("2026-06-15"), rng)
                 .value();

  Bytes pp_b = ctx.keys.pp.to_bytes();
  Bytes mk_b = ctx.keys.mk.to_bytes();
  Bytes sk_b = sk.to_bytes();
  Bytes rec_b = rec.to_bytes();

  SUBCASE("round trips preserve bytes") {
    auto pp2 = PublicParams::from_bytes(pp_b);
    REQUIRE(pp2.ok());
    CHECK(pp2.value().to_bytes() == pp_b);

    auto mk2 = MasterKey::from_bytes(mk_b);
    REQUIRE(mk2.ok());
    CHECK(mk2.value().to_bytes() == mk_b);

    auto sk2 = AttributeKey::from_bytes(sk_b);
    REQUIRE(sk2.ok());
    CHECK(sk2.value().to_bytes() == sk_b);
    CHECK(sk2.value().attributes() == sk.attributes());
    CHECK(sk2.value().key_id == sk.key_id);

    auto rec2 = SealedRecord::from_bytes(rec_b);
    REQUIRE(rec2.ok());
    CHECK(rec2.value().to_bytes() == rec_b);

    // The reloaded artifacts still work together.
    auto out = decrypt(pp2.value(), sk2.value(), rec2.value(),
                       date("2026-06-15"));
    CHECK(out.ok());
  }

  SUBCASE("artifact kinds do not interchange") {
    CHECK(!PublicParams::from_bytes(mk_b).ok());
    CHECK(!MasterKey::from_bytes(pp_b).ok());
    CHECK(!AttributeKey::from_bytes(rec_b).ok());
    CHECK(!SealedRecord::from_bytes(sk_b).ok());
  }

  SUBCASE("unknown version byte is rejected") {
    for (Bytes* b : {&pp_b, &mk_b, &sk_b, &rec_b}) {
      Bytes bad = *b;
      bad[1] = kArtifactVersion + 1;
      CHECK(!PublicParams::from_bytes(bad).ok());
      CHECK(!MasterKey::from_bytes(bad).ok());
      CHECK(!AttributeKey::from_bytes(bad).ok());
      CHECK(!SealedRecord::from_bytes(bad).ok());
    }
  }

  SUBCASE("wrong curve name is rejected") {
    Bytes bad = pp_b;
    bad[6] ^= 0x20;  // first character of the curve string
    CHECK(!PublicParams::from_bytes(bad).ok());
  }

  SUBCASE("trailing bytes are rejected") {
    for (Bytes* b : {&pp_b, &mk_b, &sk_b, &rec_b}) {
      Bytes bad = *b;
      bad.push_back(0);
      bool any_ok = PublicParams::from_bytes(bad).ok() ||
                    MasterKey::from_bytes(bad).ok() ||
                    AttributeKey::from_bytes(bad).ok() ||
                    SealedRecord::from_bytes(bad).ok();
      CHECK(!any_ok);
    }
  }

  SUBCASE("nonstandard generators in public params are rejected") {
    PublicParams crooked = ctx.keys.pp;
    crooked.g1 = crooked.g1.exp(Scalar::from_u64(2));
    CHECK(!PublicParams::from_bytes(crooked.to_bytes()).ok());
  }

  SUBCASE("issuance is deterministic under a fixed seed") {
    DeterministicRandom r1(555), r2(555);
    auto k1 = keygen(ctx.keys.pp, ctx.keys.mk, {"x", "y"}, year_2026(), r1);
    auto k2 = keygen(ctx.keys.pp, ctx.keys.mk, {"x", "y"}, year_2026(), r2);
    CHECK(k1.value().to_bytes() == k2.value().to_bytes());

    DeterministicRandom r3(556), r4(556);
    auto e1 = encrypt(ctx.keys.pp, policy, bytes_of("p"), "o",
                      date("2026-06-15"), r3);
    auto e2 = encrypt(ctx.keys.pp, policy, bytes_of("p"), "o",
                      date("2026-06-15"), r4);
    CHECK(e1.value().to_bytes() == e2.value().to_bytes());
  }
}

TEST_CASE("single-byte tampering per record region fails with the right status") {
  auto ctx = TestContext::make(15);
  const PublicParams& pp = ctx.keys.pp;
  DeterministicRandom rng(150);
  const CivilDate now = date("2026-06-15");
  AccessTree policy = parse_policy("a and b").value();
  auto rec = encrypt(pp, policy, bytes_of("sensitive"), "owner-1", now, rng)
                 .value();
  auto sk = keygen(pp, ctx.keys.mk, {"a", "b"}, year_2026(), rng).value();
  Bytes good = rec.to_bytes();
  REQUIRE(decrypt_record_bytes(pp, sk, good, now).ok());

  // Region offsets: header | u32+ct | sigma | u32+envelope | owner | date.
  const std::size_t header = 2 + 4 + pp.desc.curve.size();
  const std::size_t ct_off = header + 4;
  const std::size_t ct_len = rec.canonical_ct_bytes().size();
  const std::size_t sigma_off = ct_off + ct_len;
  const std::size_t env_off = sigma_off + rec.sigma.size() + 4;
  const std::size_t owner_off = env_off + rec.envelope.size() + 4;
  const std::size_t date_off = owner_off + rec.owner_id.size() + 4;
  REQUIRE(date_off + rec.created_at.size() == good.size());

  ByteWriter tw;
  write_tree(tw, policy);
  const std::size_t tree_len = tw.take().size();

  auto flipped = [&](std::size_t at) {
    Bytes mutated = good;
    mutated[at] ^= 0x01;
    return decrypt_record_bytes(pp, sk, mutated, now).status;
  };

  // Group-element bytes inside the signed ciphertext: signature catches it.
  CHECK(flipped(ct_off + tree_len) == DecryptStatus::kSignatureInvalid);
  // Envelope payload: also signed.
  CHECK(flipped(env_off + 30) == DecryptStatus::kSignatureInvalid);
  // The signature itself.
  CHECK(flipped(sigma_off + 10) == DecryptStatus::kSignatureInvalid);
  // Owner id: outside the signature, but bound through the AEAD's
  // associated data.
  CHECK(flipped(owner_off) == DecryptStatus::kEnvelopeAuthFailed);
  // Creation date: last character flips to another valid date.
  CHECK(flipped(date_off + rec.created_at.size() - 1) ==
        DecryptStatus::kEnvelopeAuthFailed);
  // Policy tree structure byte: malformed or signature failure, never a
  // successful parse.
  auto tree_status = flipped(ct_off);
  CHECK((tree_status == DecryptStatus::kMalformed ||
         tree_status == DecryptStatus::kSignatureInvalid));
  // Artifact header: malformed.
  CHECK(flipped(0) == DecryptStatus::kMalformed);
}

TEST_CASE("decrypt_record_bytes surfaces parse statuses") {
  auto ctx = TestContext::make(16);
  DeterministicRandom rng(160);
  auto sk =
      keygen(ctx.keys.pp, ctx.keys.mk, {"a"}, year_2026(), rng).value();
  Bytes junk = bytes_of("not a record");
  auto out =
      decrypt_record_bytes(ctx.keys.pp, sk, junk, date("2026-06-15"));
  CHECK(out.status == DecryptStatus::kMalformed);
}

TEST_CASE("decrypt_status_name covers every status") {
  CHECK(std::string(decrypt_status_name(DecryptStatus::kOk)) == "ok");
  for (DecryptStatus s :
       {DecryptStatus::kOk, DecryptStatus::kNotSatisfied,
        DecryptStatus::kExpired, DecryptStatus::kSignatureInvalid,
        DecryptStatus::kEnvelopeAuthFailed, DecryptStatus::kMalformed}) {
    CHECK(decrypt_status_name(s) != nullptr);
    CHECK(std::string(decrypt_status_name(s)).size() > 1);
  }
}

TEST_CASE("size accounting matches the artifact shapes") {
  auto ctx = TestContext::make(17);
  DeterministicRandom rng(170);

  CHECK(pk_element_count() == 5);
  CHECK(sk_element_count(10) == 22);
  CHECK(ct_element_count(4) == 11);

  std::vector<std::string> ten_attrs;
  for (int i = 0; i < 10; ++i) ten_attrs.push_back("attr" + std::to_string(i));
  auto sk = keygen(ctx.keys.pp, ctx.keys.mk, ten_attrs, year_2026(), rng)
                .value();
  AccessTree policy =
      parse_policy("2 of (attr0, attr1, attr2, attr3)").value();
  auto rec = encrypt(ctx.keys.pp, policy, bytes_of("x"), "owner",
                     date("2026-06-15"), rng)
                 .value();

  SizeReport report = size_report(ctx.keys.pp, sk, rec);
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].artifact == "public-params");
  CHECK(report.entries[0].elements == 5);
  CHECK(report.entries[0].bytes == ctx.keys.pp.to_bytes().size());
  CHECK(report.entries[1].artifact == "attribute-key");
  CHECK(report.entries[1].elements == 22);
  CHECK(report.entries[1].bytes == sk.to_bytes().size());
  CHECK(report.entries[2].artifact == "sealed-record");
  CHECK(report.entries[2].elements == 11);
  CHECK(report.entries[2].bytes == rec.to_bytes().size());

  std::string text = size_report_to_text(report);
  CHECK(text.find("public-params") != std::string::npos);
  CHECK(text.find("attribute-key") != std::string::npos);
  CHECK(text.find("sealed-record") != std::string::npos);
  CHECK(text.find("|S| = 10") != std::string::npos);
}
