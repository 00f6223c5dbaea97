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

#include "phrfog/kernels.hpp"

#ifdef PHRFOG_HAVE_OPENMP
#include <omp.h>
#endif

namespace phrfog {

bool kernels_have_openmp() {
#ifdef PHRFOG_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

#ifdef PHRFOG_HAVE_OPENMP
int clamp_threads(int threads, std::size_t work) {
  int max = omp_get_max_threads();
  if (threads <= 0 || threads > max) threads = max;
  if (static_cast<std::size_t>(threads) > work) {
    threads = static_cast<int>(work);
  }
  return threads < 1 ? 1 : threads;
}
#endif

KeyComponentPair keygen_one(std::string_view hash_domain,
                            const SourceElement& g_r, const KeygenItem& item) {
  SourceElement h = hash_to_group(hash_domain, item.attribute);
  KeyComponentPair out;
  out.d = g_r.mul(h.exp(item.rj)).value();  // same side; cannot fail
  out.dp = SourceElement::generator(Side::kB).exp(item.rj);
  return out;
}

EncryptedLeaf encrypt_one(std::string_view hash_domain,
                          const LeafShare& leaf) {
  EncryptedLeaf out;
  out.cy = SourceElement::generator(Side::kB).exp(leaf.share);
  out.cyp = hash_to_group(hash_domain, leaf.attribute).exp(leaf.share);
  return out;
}

}  // namespace

// ---- key extraction ---------------------------------------------------------

Result<std::vector<KeyComponentPair>> keygen_components_serial(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items) {
  if (g_r.side() != Side::kA) {
    return Result<std::vector<KeyComponentPair>>::failure(
        Errc::kSideMismatch, "g_r must live on side A");
  }
  std::vector<KeyComponentPair> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    out[i] = keygen_one(hash_domain, g_r, items[i]);
  }
  return out;
}

Result<std::vector<KeyComponentPair>> keygen_components_parallel(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items, int threads) {
#ifdef PHRFOG_HAVE_OPENMP
  if (g_r.side() != Side::kA) {
    return Result<std::vector<KeyComponentPair>>::failure(
        Errc::kSideMismatch, "g_r must live on side A");
  }
  std::vector<KeyComponentPair> out(items.size());
  const int nt = clamp_threads(threads, items.size());
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(items.size());
       ++i) {
    out[static_cast<std::size_t>(i)] =
        keygen_one(hash_domain, g_r, items[static_cast<std::size_t>(i)]);
  }
  return out;
#else
  (void)threads;
  return keygen_components_serial(hash_domain, g_r, items);
#endif
}

Result<std::vector<KeyComponentPair>> keygen_components(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items, const ExecPolicy& exec) {
  return exec.parallel
             ? keygen_components_parallel(hash_domain, g_r, items,
                                          exec.threads)
             : keygen_components_serial(hash_domain, g_r, items);
}

// ---- encryption leaves --------------------------------------------------------

std::vector<EncryptedLeaf> encrypt_leaves_serial(
    std::string_view hash_domain, const std::vector<LeafShare>& shares) {
  std::vector<EncryptedLeaf> out(shares.size());
  for (std::size_t i = 0; i < shares.size(); ++i) {
    out[i] = encrypt_one(hash_domain, shares[i]);
  }
  return out;
}

std::vector<EncryptedLeaf> encrypt_leaves_parallel(
    std::string_view hash_domain, const std::vector<LeafShare>& shares,
    int threads) {
#ifdef PHRFOG_HAVE_OPENMP
  std::vector<EncryptedLeaf> out(shares.size());
  const int nt = clamp_threads(threads, shares.size());
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(shares.size());
       ++i) {
    out[static_cast<std::size_t>(i)] =
        encrypt_one(hash_domain, shares[static_cast<std::size_t>(i)]);
  }
  return out;
#else
  (void)threads;
  return encrypt_leaves_serial(hash_domain, shares);
#endif
}

std::vector<EncryptedLeaf> encrypt_leaves(std::string_view hash_domain,
                                          const std::vector<LeafShare>& shares,
                                          const ExecPolicy& exec) {
  return exec.parallel
             ? encrypt_leaves_parallel(hash_domain, shares, exec.threads)
             : encrypt_leaves_serial(hash_domain, shares);
}

// ---- decryption leaves ---------------------------------------------------------

namespace {

Status check_pairing_sides(const std::vector<LeafPairing>& pairs) {
  for (const auto& p : pairs) {
    if (p.d.side() != Side::kA || p.cy.side() != Side::kB ||
        p.cyp.side() != Side::kA || p.dp.side() != Side::kB) {
      return Status::failure(Errc::kSideMismatch,
                             "leaf pairing arguments on wrong sides");
    }
  }
  return ok_status();
}

}  // namespace

Result<std::vector<TargetElement>> decrypt_leaves_serial(
    const std::vector<LeafPairing>& pairs) {
  if (auto s = check_pairing_sides(pairs); !s.ok()) {
    return Result<std::vector<TargetElement>>(s.error());
  }
  std::vector<TargetElement> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    out[i] = pair_ratio(p.d, p.cy, p.cyp, p.dp).take();
  }
  return out;
}

Result<std::vector<TargetElement>> decrypt_leaves_parallel(
    const std::vector<LeafPairing>& pairs, int threads) {
#ifdef PHRFOG_HAVE_OPENMP
  if (auto s = check_pairing_sides(pairs); !s.ok()) {
    return Result<std::vector<TargetElement>>(s.error());
  }
  std::vector<TargetElement> out(pairs.size());
  const int nt = clamp_threads(threads, pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size());
       ++i) {
    const auto& p = pairs[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = pair_ratio(p.d, p.cy, p.cyp, p.dp).take();
  }
  return out;
#else
  (void)threads;
  return decrypt_leaves_serial(pairs);
#endif
}

Result<std::vector<TargetElement>> decrypt_leaves(
    const std::vector<LeafPairing>& pairs, const ExecPolicy& exec) {
  return exec.parallel ? decrypt_leaves_parallel(pairs, exec.threads)
                       : decrypt_leaves_serial(pairs);
}

}  // namespace phrfog
