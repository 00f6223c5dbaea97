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
// The parties of the deployment and the flows between them:
//
//   authority   holds the master key, issues time-limited attribute keys,
//               and keeps an issuance registry for audit.
//   store       content-addressed record storage (the "cloud"): records are
//               filed under the hex digest of their bytes and re-verified
//               on every read.
//   owner       seals records under a policy and publishes them.
//   fog node    an edge machine holding a delegated attribute key; it
//               fetches and opens records on behalf of nearby users and
//               logs every delegation.
//   user        fetches and opens records with their own key.

#ifndef PHRFOG_ACTORS_HPP_
#define PHRFOG_ACTORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "phrfog/cpabe.hpp"

namespace phrfog {

class Authority {
 public:
  struct IssuedKeyInfo {
    std::array<std::uint8_t, kKeyIdBytes> key_id{};
    std::vector<std::string> attributes;
    ValiditySet validity;
  };

  // Fresh deployment: draws master secrets.
  static Authority create(RandomSource& rng);
  // Rehydrates an authority from persisted keys.
  static Authority from_keys(PublicParams pp, MasterKey mk);

  const PublicParams& public_params() const { return pp_; }
  const MasterKey& master_key() const { return mk_; }

  // Issues a key when the out-of-band access decision (`authorized`) allows
  // it; refusals and empty attribute sets surface as kPolicyViolation.
  Result<AttributeKey> issue(const std::vector<std::string>& attributes,
                             const ValiditySet& validity, RandomSource& rng,
                             bool authorized = true);

  const std::vector<IssuedKeyInfo>& issued() const { return issued_; }

 private:
  Authority(PublicParams pp, MasterKey mk)
      : pp_(std::move(pp)), mk_(std::move(mk)) {}

  PublicParams pp_;
  MasterKey mk_;
  std::vector<IssuedKeyInfo> issued_;
};

// Content-addressed storage: a record's id is the hex BLAKE2b-256 digest of
// its serialized bytes.  Writes go through a temp file and an atomic
// rename; reads re-verify the digest against the id.
class RecordStore {
 public:
  static Result<RecordStore> open(const std::string& root_dir);

  // Serializes and files the record; returns its content id.
  Result<std::string> put(const SealedRecord& rec);
  Result<std::string> put_bytes(const Bytes& record_bytes);
  // Fails with kIoError when absent and kMalformed when the stored bytes no
  // longer match the id.
  Result<Bytes> get(const std::string& record_id) const;
  bool exists(const std::string& record_id) const;
  Result<std::vector<std::string>> list() const;  // sorted ids

  const std::string& root() const { return root_; }

 private:
  explicit RecordStore(std::string root) : root_(std::move(root)) {}
  std::string path_for(const std::string& record_id) const;

  std::string root_;
};

struct DelegationLogEntry {
  std::string record_id;
  std::string when;  // the civil date the delegation ran under
  double millis = 0.0;
  DecryptStatus status = DecryptStatus::kMalformed;
};

// An edge node holding a delegated key, decrypting on behalf of its users.
class FogNode {
 public:
  FogNode(std::string name, PublicParams pp, AttributeKey key)
      : name_(std::move(name)), pp_(std::move(pp)), key_(std::move(key)) {}

  const std::string& name() const { return name_; }
  const AttributeKey& key() const { return key_; }

  // Fetches `record_id` from the store and opens it with the node's key,
  // recording the outcome and wall time in the work log.
  DecryptResult delegate_decrypt(const RecordStore& store,
                                 const std::string& record_id,
                                 const CivilDate& now,
                                 const ExecPolicy& exec = {});

  const std::vector<DelegationLogEntry>& work_log() const { return log_; }

 private:
  std::string name_;
  PublicParams pp_;
  AttributeKey key_;
  std::vector<DelegationLogEntry> log_;
};

// Owner flow: parse the policy, seal the payload, publish to the store.
// Returns the record id.
Result<std::string> owner_publish(const PublicParams& pp, RecordStore& store,
                                  const std::string& policy_text,
                                  std::span<const std::uint8_t> plaintext,
                                  std::string owner_id,
                                  const CivilDate& created_at,
                                  RandomSource& rng,
                                  const ExecPolicy& exec = {});

// User flow: fetch by id and open with the user's own key.
DecryptResult user_fetch_decrypt(const PublicParams& pp,
                                 const AttributeKey& sk,
                                 const RecordStore& store,
                                 const std::string& record_id,
                                 const CivilDate& now,
                                 const ExecPolicy& exec = {});

}  // namespace phrfog

#endif  // PHRFOG_ACTORS_HPP_
