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
// Command-line front end for the whole deployment: authority operations
// (setup, keygen), owner operations (encrypt, publish), user and fog-node
// operations (decrypt, fetch, delegate), plus size accounting and the
// attribute-sweep benchmark.
//
// Exit codes: 0 success, 1 usage or I/O problem, 2 cryptographic failure
// (bad signature, tampered record, malformed artifact), 3 policy not
// satisfied or issuance refused, 4 key expired.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phrfog/actors.hpp"
#include "phrfog/bench.hpp"
#include "phrfog/cpabe.hpp"

namespace {

using nlohmann::json;
using namespace phrfog;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrypto = 2;
constexpr int kExitPolicy = 3;
constexpr int kExitExpired = 4;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::kPolicyUnsatisfied:
    case Errc::kPolicyViolation:
      return kExitPolicy;
    case Errc::kKeyExpired:
      return kExitExpired;
    case Errc::kMalformed:
    case Errc::kSignatureInvalid:
    case Errc::kEnvelopeAuthFailed:
    case Errc::kSideMismatch:
    case Errc::kUnsupportedCurve:
      return kExitCrypto;
    default:
      return kExitUsage;
  }
}

int exit_code_for(DecryptStatus s) {
  switch (s) {
    case DecryptStatus::kOk:
      return kExitOk;
    case DecryptStatus::kNotSatisfied:
      return kExitPolicy;
    case DecryptStatus::kExpired:
      return kExitExpired;
    default:
      return kExitCrypto;
  }
}

int fail(const Error& e) {
  std::cerr << "error (" << errc_name(e.code) << "): " << e.message << "\n";
  return exit_code_for(e.code);
}

std::optional<Bytes> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) return std::nullopt;
  return data;
}

bool write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out.flush());
}

// Options shared by every command that consumes randomness.
struct RngOptions {
  std::optional<std::uint64_t> seed;

  std::unique_ptr<RandomSource> make() const {
    if (seed) {
      std::cerr << "warning: --seed makes every output reproducible; "
                   "UNSAFE outside testing\n";
      return std::make_unique<DeterministicRandom>(*seed);
    }
    return std::make_unique<SystemRandom>();
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed,
                    "deterministic randomness seed (testing only, unsafe)");
  }
};

struct ExecOptions {
  ExecPolicy exec;
  void attach(CLI::App* cmd) {
    cmd->add_flag("--parallel", exec.parallel,
                  "run per-attribute work across cores");
    cmd->add_option("--threads", exec.threads,
                    "thread count for --parallel (0 = all cores)");
  }
};

CivilDate today_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  return CivilDate::make(tm.tm_year + 1900,
                         static_cast<std::uint32_t>(tm.tm_mon + 1),
                         static_cast<std::uint32_t>(tm.tm_mday))
      .value();
}

// Parses --date flags, defaulting to the current UTC day.
std::optional<CivilDate> parse_date_opt(const std::string& text,
                                        const char* what) {
  if (text.empty()) return today_utc();
  auto d = CivilDate::parse(text);
  if (!d.ok()) {
    std::cerr << "error: " << what << ": " << d.error().message << "\n";
    return std::nullopt;
  }
  return d.value();
}

template <class T>
std::optional<T> load_artifact(const std::string& path, const char* what,
                               int& rc) {
  auto bytes = read_file(path);
  if (!bytes) {
    std::cerr << "error: cannot read " << what << " from " << path << "\n";
    rc = kExitUsage;
    return std::nullopt;
  }
  auto parsed = T::from_bytes(*bytes);
  if (!parsed.ok()) {
    rc = fail(parsed.error());
    return std::nullopt;
  }
  return std::move(parsed).take();
}

int run_setup(const std::string& params_path, const std::string& master_path,
              const RngOptions& rng_opts) {
  auto rng = rng_opts.make();
  SetupResult keys = setup(*rng);
  if (!write_file(params_path, keys.pp.to_bytes()) ||
      !write_file(master_path, keys.mk.to_bytes())) {
    std::cerr << "error: cannot write key files\n";
    return kExitUsage;
  }
  std::cout << "public parameters -> " << params_path << "\n"
            << "master key        -> " << master_path
            << "  (keep this file secret)\n";
  return kExitOk;
}

int run_keygen(const std::string& params_path, const std::string& master_path,
               const std::string& out_path,
               const std::vector<std::string>& attributes,
               const std::string& valid_from, const std::string& valid_to,
               const RngOptions& rng_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto mk = load_artifact<MasterKey>(master_path, "master key", rc);
  if (!mk) return rc;
  auto lo = parse_date_opt(valid_from, "--valid-from");
  if (!lo) return kExitUsage;
  auto hi = valid_to.empty() ? lo : parse_date_opt(valid_to, "--valid-to");
  if (!hi) return kExitUsage;
  auto validity = ValiditySet::from_intervals({DateInterval{*lo, *hi}});
  if (!validity.ok()) return fail(validity.error());

  auto authority = Authority::from_keys(*pp, *mk);
  auto rng = rng_opts.make();
  auto key = authority.issue(attributes, validity.value(), *rng);
  if (!key.ok()) return fail(key.error());
  if (!write_file(out_path, key.value().to_bytes())) {
    std::cerr << "error: cannot write key file " << out_path << "\n";
    return kExitUsage;
  }
  std::cout << "attribute key -> " << out_path << "\n  key id    "
            << to_hex(key.value().key_id) << "\n  attributes";
  for (const auto& a : key.value().attributes()) std::cout << " [" << a << "]";
  std::cout << "\n  valid     " << lo->to_string() << " .. "
            << hi->to_string() << "\n";
  return kExitOk;
}

int run_encrypt(const std::string& params_path, const std::string& policy_text,
                const std::string& in_path, const std::string& out_path,
                const std::string& owner, const std::string& created,
                const RngOptions& rng_opts, const ExecOptions& exec_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto plaintext = read_file(in_path);
  if (!plaintext) {
    std::cerr << "error: cannot read input " << in_path << "\n";
    return kExitUsage;
  }
  auto created_date = parse_date_opt(created, "--created");
  if (!created_date) return kExitUsage;
  auto tree = parse_policy(policy_text);
  if (!tree.ok()) return fail(tree.error());

  auto rng = rng_opts.make();
  auto rec = encrypt(*pp, tree.value(), *plaintext, owner, *created_date,
                     *rng, exec_opts.exec);
  if (!rec.ok()) return fail(rec.error());
  Bytes bytes = rec.value().to_bytes();
  if (!write_file(out_path, bytes)) {
    std::cerr << "error: cannot write record " << out_path << "\n";
    return kExitUsage;
  }
  std::cout << "sealed record -> " << out_path << "\n  policy    "
            << policy_to_text(tree.value()) << "\n  digest    "
            << to_hex(record_digest(bytes)) << "\n";
  return kExitOk;
}

int finish_decrypt(const DecryptResult& result, const std::string& out_path) {
  if (!result.ok()) {
    std::cerr << "decrypt failed (" << decrypt_status_name(result.status)
              << "): " << result.detail << "\n";
    return exit_code_for(result.status);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout.write(reinterpret_cast<const char*>(result.plaintext.data()),
                    static_cast<std::streamsize>(result.plaintext.size()));
    return kExitOk;
  }
  if (!write_file(out_path, result.plaintext)) {
    std::cerr << "error: cannot write output " << out_path << "\n";
    return kExitUsage;
  }
  std::cerr << "plaintext -> " << out_path << " (" << result.plaintext.size()
            << " bytes)\n";
  return kExitOk;
}

int run_decrypt(const std::string& params_path, const std::string& key_path,
                const std::string& in_path, const std::string& out_path,
                const std::string& now, const ExecOptions& exec_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto sk = load_artifact<AttributeKey>(key_path, "attribute key", rc);
  if (!sk) return rc;
  auto record_bytes = read_file(in_path);
  if (!record_bytes) {
    std::cerr << "error: cannot read record " << in_path << "\n";
    return kExitUsage;
  }
  auto now_date = parse_date_opt(now, "--now");
  if (!now_date) return kExitUsage;
  DecryptResult result = decrypt_record_bytes(*pp, *sk, *record_bytes,
                                              *now_date, exec_opts.exec);
  return finish_decrypt(result, out_path);
}

int run_publish(const std::string& params_path, const std::string& store_dir,
                const std::string& policy_text, const std::string& in_path,
                const std::string& owner, const std::string& created,
                bool as_json, const RngOptions& rng_opts,
                const ExecOptions& exec_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto plaintext = read_file(in_path);
  if (!plaintext) {
    std::cerr << "error: cannot read input " << in_path << "\n";
    return kExitUsage;
  }
  auto created_date = parse_date_opt(created, "--created");
  if (!created_date) return kExitUsage;
  auto store = RecordStore::open(store_dir);
  if (!store.ok()) return fail(store.error());
  auto rng = rng_opts.make();
  auto id = owner_publish(*pp, store.value(), policy_text, *plaintext, owner,
                          *created_date, *rng, exec_opts.exec);
  if (!id.ok()) return fail(id.error());
  if (as_json) {
    json out{{"record_id", id.value()}, {"store", store_dir}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << id.value() << "\n";
  }
  return kExitOk;
}

int run_fetch(const std::string& params_path, const std::string& key_path,
              const std::string& store_dir, const std::string& record_id,
              const std::string& out_path, const std::string& now,
              const ExecOptions& exec_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto sk = load_artifact<AttributeKey>(key_path, "attribute key", rc);
  if (!sk) return rc;
  auto now_date = parse_date_opt(now, "--now");
  if (!now_date) return kExitUsage;
  auto store = RecordStore::open(store_dir);
  if (!store.ok()) return fail(store.error());
  DecryptResult result = user_fetch_decrypt(*pp, *sk, store.value(),
                                            record_id, *now_date,
                                            exec_opts.exec);
  return finish_decrypt(result, out_path);
}

int run_delegate(const std::string& params_path, const std::string& key_path,
                 const std::string& store_dir, const std::string& record_id,
                 const std::string& node_name, const std::string& out_path,
                 const std::string& now, const ExecOptions& exec_opts) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto sk = load_artifact<AttributeKey>(key_path, "attribute key", rc);
  if (!sk) return rc;
  auto now_date = parse_date_opt(now, "--now");
  if (!now_date) return kExitUsage;
  auto store = RecordStore::open(store_dir);
  if (!store.ok()) return fail(store.error());

  FogNode node(node_name, *pp, *sk);
  DecryptResult result =
      node.delegate_decrypt(store.value(), record_id, *now_date,
                            exec_opts.exec);
  for (const auto& entry : node.work_log()) {
    std::cerr << "fog node '" << node.name() << "': record "
              << entry.record_id.substr(0, 12) << "... on " << entry.when
              << " -> " << decrypt_status_name(entry.status) << " ("
              << entry.millis << " ms)\n";
  }
  return finish_decrypt(result, out_path);
}

int run_sizes(const std::string& params_path, const std::string& key_path,
              const std::string& record_path, bool as_json) {
  int rc = kExitOk;
  auto pp = load_artifact<PublicParams>(params_path, "public parameters", rc);
  if (!pp) return rc;
  auto sk = load_artifact<AttributeKey>(key_path, "attribute key", rc);
  if (!sk) return rc;
  auto record_bytes = read_file(record_path);
  if (!record_bytes) {
    std::cerr << "error: cannot read record " << record_path << "\n";
    return kExitUsage;
  }
  auto rec = SealedRecord::from_bytes(*record_bytes);
  if (!rec.ok()) return fail(rec.error());

  SizeReport report = size_report(*pp, *sk, rec.value());
  if (as_json) {
    json out = json::array();
    for (const auto& e : report.entries) {
      out.push_back({{"artifact", e.artifact},
                     {"elements", e.elements},
                     {"bytes", e.bytes},
                     {"composition", e.formula}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << size_report_to_text(report);
  }
  return kExitOk;
}

int run_bench_cmd(BenchConfig cfg, const std::string& out_path, bool as_json,
                  bool quiet) {
  auto on_row = [&](const BenchRow& row) {
    if (quiet) return;
    std::fprintf(stderr, "  %-8s n=%-3u median %10.1f us (+/- %.1f)\n",
                 row.phase.c_str(), row.attrs, row.median_us, row.stddev_us);
  };
  if (!quiet) {
    std::fprintf(stderr, "sweep: %s policies, counts",
                 policy_shape_name(cfg.shape));
    for (auto n : cfg.counts) std::fprintf(stderr, " %u", n);
    std::fprintf(stderr, ", %u reps (%u warmup), %s\n", cfg.reps, cfg.warmup,
                 cfg.exec.parallel ? "parallel" : "serial");
  }
  std::vector<BenchRow> rows = run_bench(cfg, on_row);

  std::string output;
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"phase", r.phase},
                     {"attrs", r.attrs},
                     {"median_us", r.median_us},
                     {"mean_us", r.mean_us},
                     {"stddev_us", r.stddev_us},
                     {"elements", r.elements}});
    }
    output = out.dump(2) + "\n";
  } else {
    output = bench_csv(rows);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << output;
  } else if (!write_file(out_path,
                         std::span<const std::uint8_t>(
                             reinterpret_cast<const std::uint8_t*>(
                                 output.data()),
                             output.size()))) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  if (!quiet) {
    for (const char* phase : {"keygen", "encrypt", "decrypt"}) {
      LinearFit fit = fit_phase(rows, phase);
      std::fprintf(stderr,
                   "fit %-8s median_us ~ %.1f * n %+.1f   (r^2 = %.4f)\n",
                   phase, fit.slope, fit.intercept, fit.r2);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phrfog: attribute-based encryption for personal health records,\n"
      "with fog-node delegation, signed ciphertexts and time-limited keys"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // setup ---------------------------------------------------------------
  std::string params_path = "phrfog.pp";
  std::string master_path = "phrfog.mk";
  RngOptions setup_rng;
  auto* setup_cmd =
      app.add_subcommand("setup", "generate public parameters + master key");
  setup_cmd->add_option("--params", params_path, "output: public parameters")
      ->capture_default_str();
  setup_cmd->add_option("--master", master_path, "output: master key")
      ->capture_default_str();
  setup_rng.attach(setup_cmd);
  setup_cmd->callback(
      [&] { rc = run_setup(params_path, master_path, setup_rng); });

  // keygen --------------------------------------------------------------
  std::string kg_params = "phrfog.pp", kg_master = "phrfog.mk";
  std::string kg_out = "user.key";
  std::vector<std::string> kg_attrs;
  std::string kg_from, kg_to;
  RngOptions kg_rng;
  auto* kg_cmd =
      app.add_subcommand("keygen", "issue a time-limited attribute key");
  kg_cmd->add_option("--params", kg_params, "public parameters")
      ->capture_default_str();
  kg_cmd->add_option("--master", kg_master, "master key")
      ->capture_default_str();
  kg_cmd->add_option("--out", kg_out, "output key file")
      ->capture_default_str();
  kg_cmd->add_option("--attr", kg_attrs, "attribute (repeatable)")
      ->required()
      ->take_all();
  kg_cmd->add_option("--valid-from", kg_from,
                     "first valid day, YYYY-MM-DD (default: today)");
  kg_cmd->add_option("--valid-to", kg_to,
                     "last valid day inclusive (default: --valid-from)");
  kg_rng.attach(kg_cmd);
  kg_cmd->callback([&] {
    rc = run_keygen(kg_params, kg_master, kg_out, kg_attrs, kg_from, kg_to,
                    kg_rng);
  });

  // encrypt -------------------------------------------------------------
  std::string en_params = "phrfog.pp", en_policy, en_in, en_out = "record.phr";
  std::string en_owner = "owner", en_created;
  RngOptions en_rng;
  ExecOptions en_exec;
  auto* en_cmd =
      app.add_subcommand("encrypt", "seal a record under an access policy");
  en_cmd->add_option("--params", en_params, "public parameters")
      ->capture_default_str();
  en_cmd->add_option("--policy", en_policy,
                     "access policy, e.g. \"a and (b or c)\"")
      ->required();
  en_cmd->add_option("--in", en_in, "plaintext file")->required();
  en_cmd->add_option("--out", en_out, "output record file")
      ->capture_default_str();
  en_cmd->add_option("--owner", en_owner, "record owner id")
      ->capture_default_str();
  en_cmd->add_option("--created", en_created,
                     "creation date YYYY-MM-DD (default: today)");
  en_rng.attach(en_cmd);
  en_exec.attach(en_cmd);
  en_cmd->callback([&] {
    rc = run_encrypt(en_params, en_policy, en_in, en_out, en_owner,
                     en_created, en_rng, en_exec);
  });

  // decrypt -------------------------------------------------------------
  std::string de_params = "phrfog.pp", de_key = "user.key", de_in, de_out;
  std::string de_now;
  ExecOptions de_exec;
  auto* de_cmd = app.add_subcommand("decrypt", "open a sealed record");
  de_cmd->add_option("--params", de_params, "public parameters")
      ->capture_default_str();
  de_cmd->add_option("--key", de_key, "attribute key")->capture_default_str();
  de_cmd->add_option("--in", de_in, "record file")->required();
  de_cmd->add_option("--out", de_out, "output file (default: stdout)");
  de_cmd->add_option("--now", de_now,
                     "date to evaluate key validity at (default: today)");
  de_exec.attach(de_cmd);
  de_cmd->callback([&] {
    rc = run_decrypt(de_params, de_key, de_in, de_out, de_now, de_exec);
  });

  // publish -------------------------------------------------------------
  std::string pu_params = "phrfog.pp", pu_store = "store", pu_policy, pu_in;
  std::string pu_owner = "owner", pu_created;
  bool pu_json = false;
  RngOptions pu_rng;
  ExecOptions pu_exec;
  auto* pu_cmd = app.add_subcommand(
      "publish", "seal a record and file it in a record store");
  pu_cmd->add_option("--params", pu_params, "public parameters")
      ->capture_default_str();
  pu_cmd->add_option("--store", pu_store, "record store directory")
      ->capture_default_str();
  pu_cmd->add_option("--policy", pu_policy, "access policy")->required();
  pu_cmd->add_option("--in", pu_in, "plaintext file")->required();
  pu_cmd->add_option("--owner", pu_owner, "record owner id")
      ->capture_default_str();
  pu_cmd->add_option("--created", pu_created,
                     "creation date YYYY-MM-DD (default: today)");
  pu_cmd->add_flag("--json", pu_json, "machine-readable output");
  pu_rng.attach(pu_cmd);
  pu_exec.attach(pu_cmd);
  pu_cmd->callback([&] {
    rc = run_publish(pu_params, pu_store, pu_policy, pu_in, pu_owner,
                     pu_created, pu_json, pu_rng, pu_exec);
  });

  // fetch ---------------------------------------------------------------
  std::string fe_params = "phrfog.pp", fe_key = "user.key";
  std::string fe_store = "store", fe_id, fe_out, fe_now;
  ExecOptions fe_exec;
  auto* fe_cmd = app.add_subcommand(
      "fetch", "fetch a record from a store and open it");
  fe_cmd->add_option("--params", fe_params, "public parameters")
      ->capture_default_str();
  fe_cmd->add_option("--key", fe_key, "attribute key")->capture_default_str();
  fe_cmd->add_option("--store", fe_store, "record store directory")
      ->capture_default_str();
  fe_cmd->add_option("--id", fe_id, "record id (hex digest)")->required();
  fe_cmd->add_option("--out", fe_out, "output file (default: stdout)");
  fe_cmd->add_option("--now", fe_now,
                     "date to evaluate key validity at (default: today)");
  fe_exec.attach(fe_cmd);
  fe_cmd->callback([&] {
    rc = run_fetch(fe_params, fe_key, fe_store, fe_id, fe_out, fe_now,
                   fe_exec);
  });

  // delegate ------------------------------------------------------------
  std::string dl_params = "phrfog.pp", dl_key = "fog.key";
  std::string dl_store = "store", dl_id, dl_out, dl_now;
  std::string dl_name = "fog-node";
  ExecOptions dl_exec;
  auto* dl_cmd = app.add_subcommand(
      "delegate", "open a record through a fog node's delegated key");
  dl_cmd->add_option("--params", dl_params, "public parameters")
      ->capture_default_str();
  dl_cmd->add_option("--key", dl_key, "fog node's delegated attribute key")
      ->capture_default_str();
  dl_cmd->add_option("--store", dl_store, "record store directory")
      ->capture_default_str();
  dl_cmd->add_option("--id", dl_id, "record id (hex digest)")->required();
  dl_cmd->add_option("--name", dl_name, "fog node name")
      ->capture_default_str();
  dl_cmd->add_option("--out", dl_out, "output file (default: stdout)");
  dl_cmd->add_option("--now", dl_now,
                     "date to evaluate key validity at (default: today)");
  dl_exec.attach(dl_cmd);
  dl_cmd->callback([&] {
    rc = run_delegate(dl_params, dl_key, dl_store, dl_id, dl_name, dl_out,
                      dl_now, dl_exec);
  });

  // sizes ---------------------------------------------------------------
  std::string sz_params = "phrfog.pp", sz_key = "user.key", sz_record;
  bool sz_json = false;
  auto* sz_cmd = app.add_subcommand(
      "sizes", "report element counts and byte sizes of artifacts");
  sz_cmd->add_option("--params", sz_params, "public parameters")
      ->capture_default_str();
  sz_cmd->add_option("--key", sz_key, "attribute key")->capture_default_str();
  sz_cmd->add_option("--record", sz_record, "sealed record")->required();
  sz_cmd->add_flag("--json", sz_json, "machine-readable output");
  sz_cmd->callback(
      [&] { rc = run_sizes(sz_params, sz_key, sz_record, sz_json); });

  // bench ---------------------------------------------------------------
  BenchConfig bench_cfg;
  std::string be_out, be_shape = "and";
  bool be_json = false, be_quiet = false;
  auto* be_cmd = app.add_subcommand(
      "bench", "attribute-sweep timings for keygen/encrypt/decrypt");
  be_cmd->add_option("--counts", bench_cfg.counts,
                     "attribute counts to sweep")
      ->delimiter(',')
      ->capture_default_str();
  be_cmd->add_option("--reps", bench_cfg.reps, "repetitions per point")
      ->capture_default_str();
  be_cmd->add_option("--warmup", bench_cfg.warmup,
                     "discarded warmup repetitions")
      ->capture_default_str();
  be_cmd->add_option("--shape", be_shape, "policy shape: and, or, threshold")
      ->check(CLI::IsMember({"and", "or", "threshold"}))
      ->capture_default_str();
  be_cmd->add_option("--seed", bench_cfg.seed, "randomness seed")
      ->capture_default_str();
  be_cmd->add_option("--payload", bench_cfg.payload_bytes,
                     "payload size in bytes")
      ->capture_default_str();
  be_cmd->add_option("--out", be_out, "CSV output file (default: stdout)");
  be_cmd->add_flag("--json", be_json, "JSON rows instead of CSV");
  be_cmd->add_flag("--quiet", be_quiet, "suppress progress and fit summary");
  be_cmd->add_flag("--parallel", bench_cfg.exec.parallel,
                   "run per-attribute work across cores");
  be_cmd->add_option("--threads", bench_cfg.exec.threads,
                     "thread count for --parallel (0 = all cores)");
  be_cmd->callback([&] {
    if (be_shape == "or") {
      bench_cfg.shape = PolicyShape::kOrChain;
    } else if (be_shape == "threshold") {
      bench_cfg.shape = PolicyShape::kThreshold;
    } else {
      bench_cfg.shape = PolicyShape::kAndChain;
    }
    rc = run_bench_cmd(bench_cfg, be_out, be_json, be_quiet);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
