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
// Attribute-sweep benchmark: times key extraction, sealing and opening as
// the attribute count grows, the measurement the construction's cost model
// predicts to be linear (each phase does a fixed amount of per-attribute
// group work).

#ifndef PHRFOG_BENCH_HPP_
#define PHRFOG_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phrfog/kernels.hpp"

namespace phrfog {

// Shape of the generated policy over n attributes.
enum class PolicyShape {
  kAndChain,   // all n required: the worst case, n leaves used
  kOrChain,    // any single attribute suffices
  kThreshold,  // ceil(n/2) of n
};

const char* policy_shape_name(PolicyShape s);

struct BenchConfig {
  std::vector<std::uint32_t> counts{5, 10, 15, 20, 25, 30, 35, 40};
  std::uint32_t reps = 5;
  std::uint32_t warmup = 1;  // discarded leading repetitions
  PolicyShape shape = PolicyShape::kAndChain;
  std::uint64_t seed = 42;
  ExecPolicy exec;
  std::uint32_t payload_bytes = 256;
};

struct BenchRow {
  std::string phase;  // "keygen", "encrypt" or "decrypt"
  std::uint32_t attrs = 0;
  double median_us = 0.0;
  double mean_us = 0.0;
  double stddev_us = 0.0;
  std::uint32_t elements = 0;  // group elements in the produced artifact
};

// Runs the sweep; `on_row` (optional) streams rows as they finish.
std::vector<BenchRow> run_bench(
    const BenchConfig& cfg,
    const std::function<void(const BenchRow&)>& on_row = {});

// CSV with header "phase,attrs,median_us,mean_us,stddev_us,elements".
std::string bench_csv(const std::vector<BenchRow>& rows);

// Least-squares line fit and its coefficient of determination.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LinearFit fit_linear(const std::vector<std::pair<double, double>>& points);

// Fit of median time against attribute count for one phase.
LinearFit fit_phase(const std::vector<BenchRow>& rows, std::string_view phase);

// The policy text the sweep seals under for a given count and shape;
// exposed so tests can pin the generated family.
std::string bench_policy_text(std::uint32_t n, PolicyShape shape);
std::vector<std::string> bench_attributes(std::uint32_t n);

}  // namespace phrfog

#endif  // PHRFOG_BENCH_HPP_
