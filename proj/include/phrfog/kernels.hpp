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
// Per-attribute compute kernels.  Key extraction, encryption and decryption
// all spend their time in loops that do independent group work per
// attribute; these kernels isolate those loops so they can run either on a
// single core (the reference lane) or across cores with OpenMP.  Both lanes
// compute bit-identical results: all randomness is drawn by the caller
// before the loop, so parallelism never changes an output.  Built without
// OpenMP, the parallel lane falls back to the serial one.

#ifndef PHRFOG_KERNELS_HPP_
#define PHRFOG_KERNELS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "phrfog/group.hpp"
#include "phrfog/result.hpp"

namespace phrfog {

// How a kernel invocation should execute.
struct ExecPolicy {
  bool parallel = false;
  int threads = 0;  // 0 = runtime default
};

// True when the library was compiled with OpenMP support.
bool kernels_have_openmp();

// ---- key extraction ---------------------------------------------------------
// For each attribute j with blinder r_j:
//   d  = g_r * H(j)^{r_j}   on side A   (g_r = g1^r, precomputed by caller)
//   dp = g2^{r_j}           on side B

struct KeygenItem {
  std::string attribute;  // normalized
  Scalar rj;
};

struct KeyComponentPair {
  SourceElement d;   // side A
  SourceElement dp;  // side B
};

Result<std::vector<KeyComponentPair>> keygen_components_serial(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items);
Result<std::vector<KeyComponentPair>> keygen_components_parallel(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items, int threads);
Result<std::vector<KeyComponentPair>> keygen_components(
    std::string_view hash_domain, const SourceElement& g_r,
    const std::vector<KeygenItem>& items, const ExecPolicy& exec);

// ---- encryption leaves --------------------------------------------------------
// For each policy leaf y carrying attribute att(y) and share q_y(0):
//   cy  = g2^{q_y(0)}        on side B
//   cyp = H(att(y))^{q_y(0)} on side A

struct LeafShare {
  std::string attribute;  // normalized
  Scalar share;
};

struct EncryptedLeaf {
  SourceElement cy;   // side B
  SourceElement cyp;  // side A
};

std::vector<EncryptedLeaf> encrypt_leaves_serial(
    std::string_view hash_domain, const std::vector<LeafShare>& shares);
std::vector<EncryptedLeaf> encrypt_leaves_parallel(
    std::string_view hash_domain, const std::vector<LeafShare>& shares,
    int threads);
std::vector<EncryptedLeaf> encrypt_leaves(std::string_view hash_domain,
                                          const std::vector<LeafShare>& shares,
                                          const ExecPolicy& exec);

// ---- decryption leaves ---------------------------------------------------------
// For each matched leaf: e(d, cy) * e(cyp, dp)^-1, which collapses the
// attribute blinder and leaves e(g1, g2)^{r * q_y(0)}.

struct LeafPairing {
  SourceElement d;    // side A (key component)
  SourceElement cy;   // side B (ciphertext leaf)
  SourceElement cyp;  // side A (ciphertext leaf)
  SourceElement dp;   // side B (key component)
};

Result<std::vector<TargetElement>> decrypt_leaves_serial(
    const std::vector<LeafPairing>& pairs);
Result<std::vector<TargetElement>> decrypt_leaves_parallel(
    const std::vector<LeafPairing>& pairs, int threads);
Result<std::vector<TargetElement>> decrypt_leaves(
    const std::vector<LeafPairing>& pairs, const ExecPolicy& exec);

}  // namespace phrfog

#endif  // PHRFOG_KERNELS_HPP_
