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

#include "phrfog/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "phrfog/cpabe.hpp"

namespace phrfog {

namespace {

using Clock = std::chrono::steady_clock;

double us_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start)
      .count();
}

struct Stats {
  double median = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
};

Stats summarize(std::vector<double> samples) {
  Stats out;
  if (samples.empty()) return out;
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  out.median = (n % 2 == 1) ? samples[n / 2]
                            : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
  for (double v : samples) out.mean += v;
  out.mean /= static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : samples) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return out;
}

// Times `body` cfg.warmup + cfg.reps times, keeping the last cfg.reps.
template <class Body>
Stats time_phase(const BenchConfig& cfg, Body&& body) {
  std::vector<double> samples;
  samples.reserve(cfg.reps);
  for (std::uint32_t rep = 0; rep < cfg.warmup + cfg.reps; ++rep) {
    auto start = Clock::now();
    body();
    double us = us_since(start);
    if (rep >= cfg.warmup) samples.push_back(us);
  }
  return summarize(std::move(samples));
}

BenchRow make_row(std::string phase, std::uint32_t attrs, const Stats& st,
                  std::uint32_t elements) {
  BenchRow row;
  row.phase = std::move(phase);
  row.attrs = attrs;
  row.median_us = st.median;
  row.mean_us = st.mean;
  row.stddev_us = st.stddev;
  row.elements = elements;
  return row;
}

}  // namespace

const char* policy_shape_name(PolicyShape s) {
  switch (s) {
    case PolicyShape::kAndChain:
      return "and-chain";
    case PolicyShape::kOrChain:
      return "or-chain";
    case PolicyShape::kThreshold:
      return "threshold";
  }
  return "unknown";
}

std::vector<std::string> bench_attributes(std::uint32_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "attr%02u", i);
    out.emplace_back(buf);
  }
  return out;
}

std::string bench_policy_text(std::uint32_t n, PolicyShape shape) {
  std::vector<std::string> attrs = bench_attributes(n);
  if (n == 1) return attrs[0];
  std::string out;
  switch (shape) {
    case PolicyShape::kAndChain:
    case PolicyShape::kOrChain: {
      const char* op = shape == PolicyShape::kAndChain ? " and " : " or ";
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i) out += op;
        out += attrs[i];
      }
      return out;
    }
    case PolicyShape::kThreshold: {
      out = std::to_string((n + 1) / 2) + " of (";
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        out += attrs[i];
      }
      out += ')';
      return out;
    }
  }
  return out;
}

std::vector<BenchRow> run_bench(
    const BenchConfig& cfg, const std::function<void(const BenchRow&)>& on_row) {
  std::vector<BenchRow> rows;
  DeterministicRandom rng(cfg.seed);
  SetupResult keys = setup(rng);

  // Fixed dates: the key is valid on the opening date.
  CivilDate created = CivilDate::parse("2026-06-15").take();
  std::vector<DateInterval> window{
      {CivilDate::parse("2026-01-01").take(),
       CivilDate::parse("2026-12-31").take()}};
  ValiditySet validity = ValiditySet::from_intervals(window).take();

  Bytes payload(cfg.payload_bytes, 0xa5);

  auto emit = [&](BenchRow row) {
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  };

  for (std::uint32_t n : cfg.counts) {
    std::vector<std::string> attrs = bench_attributes(n);
    AccessTree tree =
        parse_policy(bench_policy_text(n, cfg.shape)).take();

    // Key extraction: fresh randomness every repetition.
    Stats kg = time_phase(cfg, [&] {
      keygen(keys.pp, keys.mk, attrs, validity, rng, cfg.exec).take();
    });
    emit(make_row("keygen", n, kg, sk_element_count(n)));

    // Sealing: same tree every repetition, fresh exponents inside.
    Stats en = time_phase(cfg, [&] {
      encrypt(keys.pp, tree, payload, "bench-owner", created, rng, cfg.exec)
          .take();
    });
    emit(make_row("encrypt", n, en, ct_element_count(n)));

    // Opening: one key and one record, opened repeatedly.
    AttributeKey sk =
        keygen(keys.pp, keys.mk, attrs, validity, rng, cfg.exec).take();
    SealedRecord rec =
        encrypt(keys.pp, tree, payload, "bench-owner", created, rng, cfg.exec)
            .take();
    Stats de = time_phase(cfg, [&] {
      DecryptResult r = decrypt(keys.pp, sk, rec, created, cfg.exec);
      if (!r.ok()) std::abort();  // benchmark invariant, not user input
    });
    emit(make_row("decrypt", n, de, ct_element_count(n)));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "phase,attrs,median_us,mean_us,stddev_us,elements\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%u,%.3f,%.3f,%.3f,%u\n",
                  r.phase.c_str(), r.attrs, r.median_us, r.mean_us,
                  r.stddev_us, r.elements);
    out += buf;
  }
  return out;
}

LinearFit fit_linear(const std::vector<std::pair<double, double>>& points) {
  LinearFit fit;
  const std::size_t n = points.size();
  if (n < 2) return fit;
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r2 = 1.0;  // constant data: the fit is exact
    return fit;
  }
  double ss_res = 0;
  for (const auto& [x, y] : points) {
    double e = y - (fit.intercept + fit.slope * x);
    ss_res += e * e;
  }
  fit.r2 = 1.0 - ss_res / syy;
  return fit;
}

LinearFit fit_phase(const std::vector<BenchRow>& rows,
                    std::string_view phase) {
  std::vector<std::pair<double, double>> points;
  for (const auto& r : rows) {
    if (r.phase == phase) {
      points.emplace_back(static_cast<double>(r.attrs), r.median_us);
    }
  }
  return fit_linear(points);
}

}  // namespace phrfog
