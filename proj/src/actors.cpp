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

#include "phrfog/actors.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <system_error>

namespace phrfog {

namespace fs = std::filesystem;

// ---- authority ----------------------------------------------------------------

Authority Authority::create(RandomSource& rng) {
  SetupResult keys = setup(rng);
  return Authority(std::move(keys.pp), std::move(keys.mk));
}

Authority Authority::from_keys(PublicParams pp, MasterKey mk) {
  return Authority(std::move(pp), std::move(mk));
}

Result<AttributeKey> Authority::issue(
    const std::vector<std::string>& attributes, const ValiditySet& validity,
    RandomSource& rng, bool authorized) {
  if (!authorized) {
    return Result<AttributeKey>::failure(
        Errc::kPolicyViolation, "authority refused to issue this key");
  }
  if (attributes.empty()) {
    return Result<AttributeKey>::failure(
        Errc::kPolicyViolation,
        "authority does not issue keys without attributes");
  }
  auto key = keygen(pp_, mk_, attributes, validity, rng);
  if (!key.ok()) return key;
  issued_.push_back(IssuedKeyInfo{key.value().key_id,
                                  key.value().attributes(),
                                  key.value().validity});
  return key;
}

// ---- record store ---------------------------------------------------------------

namespace {

bool looks_like_record_id(const std::string& id) {
  if (id.size() != 2 * kRecordDigestBytes) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

constexpr char kRecordSuffix[] = ".phr";

}  // namespace

Result<RecordStore> RecordStore::open(const std::string& root_dir) {
  std::error_code ec;
  fs::create_directories(root_dir, ec);
  if (ec) {
    return Result<RecordStore>::failure(
        Errc::kIoError, "cannot create store directory: " + ec.message());
  }
  if (!fs::is_directory(root_dir, ec)) {
    return Result<RecordStore>::failure(Errc::kIoError,
                                        "store root is not a directory");
  }
  return RecordStore(root_dir);
}

std::string RecordStore::path_for(const std::string& record_id) const {
  return (fs::path(root_) / (record_id + kRecordSuffix)).string();
}

Result<std::string> RecordStore::put_bytes(const Bytes& record_bytes) {
  std::string id = to_hex(record_digest(record_bytes));
  std::string final_path = path_for(id);
  std::error_code ec;
  if (fs::exists(final_path, ec)) return id;  // content-addressed: idempotent

  std::string tmp_path =
      (fs::path(root_) / (".tmp-" + id + kRecordSuffix)).string();
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      return Result<std::string>::failure(Errc::kIoError,
                                          "cannot open temp file for record");
    }
    out.write(reinterpret_cast<const char*>(record_bytes.data()),
              static_cast<std::streamsize>(record_bytes.size()));
    if (!out.flush()) {
      return Result<std::string>::failure(Errc::kIoError,
                                          "short write while storing record");
    }
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) {
    fs::remove(tmp_path, ec);
    return Result<std::string>::failure(Errc::kIoError,
                                        "cannot move record into place");
  }
  return id;
}

Result<std::string> RecordStore::put(const SealedRecord& rec) {
  return put_bytes(rec.to_bytes());
}

Result<Bytes> RecordStore::get(const std::string& record_id) const {
  if (!looks_like_record_id(record_id)) {
    return Result<Bytes>::failure(Errc::kInvalidArgument,
                                  "malformed record id");
  }
  std::ifstream in(path_for(record_id), std::ios::binary);
  if (!in) {
    return Result<Bytes>::failure(Errc::kIoError,
                                  "no record with id " + record_id);
  }
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) {
    return Result<Bytes>::failure(Errc::kIoError, "error reading record");
  }
  if (to_hex(record_digest(data)) != record_id) {
    return Result<Bytes>::failure(
        Errc::kMalformed, "stored record does not match its content id");
  }
  return data;
}

bool RecordStore::exists(const std::string& record_id) const {
  if (!looks_like_record_id(record_id)) return false;
  std::error_code ec;
  return fs::exists(path_for(record_id), ec);
}

Result<std::vector<std::string>> RecordStore::list() const {
  std::vector<std::string> ids;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root_, ec)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.size() <= sizeof(kRecordSuffix) - 1 ||
        name.substr(name.size() - (sizeof(kRecordSuffix) - 1)) !=
            kRecordSuffix) {
      continue;
    }
    std::string id = name.substr(0, name.size() - (sizeof(kRecordSuffix) - 1));
    if (looks_like_record_id(id)) ids.push_back(std::move(id));
  }
  if (ec) {
    return Result<std::vector<std::string>>::failure(
        Errc::kIoError, "cannot list store: " + ec.message());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// ---- fog node -----------------------------------------------------------------

DecryptResult FogNode::delegate_decrypt(const RecordStore& store,
                                        const std::string& record_id,
                                        const CivilDate& now,
                                        const ExecPolicy& exec) {
  auto start = std::chrono::steady_clock::now();
  DecryptResult result;
  auto bytes = store.get(record_id);
  if (!bytes.ok()) {
    result.status = DecryptStatus::kMalformed;
    result.detail = bytes.error().message;
  } else {
    result = decrypt_record_bytes(pp_, key_, bytes.value(), now, exec);
  }
  auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  log_.push_back(DelegationLogEntry{record_id, now.to_string(),
                                    elapsed.count(), result.status});
  return result;
}

// ---- owner / user flows ----------------------------------------------------------

Result<std::string> owner_publish(const PublicParams& pp, RecordStore& store,
                                  const std::string& policy_text,
                                  std::span<const std::uint8_t> plaintext,
                                  std::string owner_id,
                                  const CivilDate& created_at,
                                  RandomSource& rng, const ExecPolicy& exec) {
  auto tree = parse_policy(policy_text);
  if (!tree.ok()) return Result<std::string>(tree.error());
  auto rec = encrypt(pp, tree.value(), plaintext, std::move(owner_id),
                     created_at, rng, exec);
  if (!rec.ok()) return Result<std::string>(rec.error());
  return store.put(rec.value());
}

DecryptResult user_fetch_decrypt(const PublicParams& pp,
                                 const AttributeKey& sk,
                                 const RecordStore& store,
                                 const std::string& record_id,
                                 const CivilDate& now,
                                 const ExecPolicy& exec) {
  auto bytes = store.get(record_id);
  if (!bytes.ok()) {
    DecryptResult out;
    out.status = DecryptStatus::kMalformed;
    out.detail = bytes.error().message;
    return out;
  }
  return decrypt_record_bytes(pp, sk, bytes.value(), now, exec);
}

}  // namespace phrfog
