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

#include "phrfog/dates.hpp"

#include <algorithm>
#include <cstdio>

namespace phrfog {

namespace {

bool is_leap(std::int32_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

std::uint32_t days_in_month(std::int32_t y, std::uint32_t m) {
  static constexpr std::uint8_t kDays[] = {31, 28, 31, 30, 31, 30,
                                           31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

}  // namespace

Result<CivilDate> CivilDate::make(std::int32_t year, std::uint32_t month,
                                  std::uint32_t day) {
  if (year < 0 || year > 9999) {
    return Result<CivilDate>::failure(Errc::kInvalidArgument,
                                      "year out of range 0..9999");
  }
  if (month < 1 || month > 12) {
    return Result<CivilDate>::failure(Errc::kInvalidArgument,
                                      "month out of range 1..12");
  }
  if (day < 1 || day > days_in_month(year, month)) {
    return Result<CivilDate>::failure(Errc::kInvalidArgument,
                                      "day out of range for month");
  }
  CivilDate d;
  d.year = year;
  d.month = static_cast<std::uint8_t>(month);
  d.day = static_cast<std::uint8_t>(day);
  return d;
}

Result<CivilDate> CivilDate::parse(std::string_view text) {
  auto bad = [] {
    return Result<CivilDate>::failure(Errc::kParseError,
                                      "expected date as YYYY-MM-DD");
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return bad();
  auto digits = [&](std::size_t off, std::size_t len,
                    std::uint32_t& out) -> bool {
    out = 0;
    for (std::size_t i = 0; i < len; ++i) {
      char c = text[off + i];
      if (c < '0' || c > '9') return false;
      out = out * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return true;
  };
  std::uint32_t y, m, d;
  if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) return bad();
  return make(static_cast<std::int32_t>(y), m, d);
}

std::string CivilDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year,
                static_cast<unsigned>(month), static_cast<unsigned>(day));
  return buf;
}

std::int64_t CivilDate::serial_day() const {
  // Howard Hinnant's days_from_civil.
  std::int64_t y = year;
  std::int64_t m = month;
  std::int64_t d = day;
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;                          // [0, 399]
  const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;  // [0,146096]
  return era * 146097 + doe - 719468;
}

Result<ValiditySet> ValiditySet::from_intervals(
    const std::vector<DateInterval>& intervals) {
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) {
      return Result<ValiditySet>::failure(
          Errc::kInvalidArgument, "interval end precedes interval start");
    }
  }
  std::vector<DateInterval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const DateInterval& a, const DateInterval& b) {
              if (a.lo.serial_day() != b.lo.serial_day()) {
                return a.lo < b.lo;
              }
              return a.hi < b.hi;
            });
  ValiditySet out;
  for (const auto& iv : sorted) {
    if (!out.intervals_.empty()) {
      DateInterval& last = out.intervals_.back();
      // Merge overlap and adjacency ([a,b] + [b+1,c]).
      if (iv.lo.serial_day() <= last.hi.serial_day() + 1) {
        if (last.hi < iv.hi) last.hi = iv.hi;
        continue;
      }
    }
    out.intervals_.push_back(iv);
  }
  return out;
}

bool ValiditySet::contains(const CivilDate& d) const {
  std::int64_t s = d.serial_day();
  // Canonical form is sorted, so binary search on interval start.
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), s,
      [](std::int64_t v, const DateInterval& iv) {
        return v < iv.lo.serial_day();
      });
  if (it == intervals_.begin()) return false;
  --it;
  return s <= it->hi.serial_day();
}

void ValiditySet::write(ByteWriter& w) const {
  w.u32(static_cast<std::uint32_t>(intervals_.size()));
  for (const auto& iv : intervals_) {
    w.str(iv.lo.to_string());
    w.str(iv.hi.to_string());
  }
}

Result<ValiditySet> ValiditySet::read(ByteReader& r) {
  auto bad = [](const char* why) {
    return Result<ValiditySet>::failure(Errc::kMalformed, why);
  };
  std::uint32_t n = 0;
  if (!r.u32(n)) return bad("truncated validity set");
  if (n > 4096) return bad("validity set too large");
  std::vector<DateInterval> intervals;
  intervals.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string lo_s, hi_s;
    if (!r.str(lo_s, 10) || !r.str(hi_s, 10)) {
      return bad("truncated validity interval");
    }
    auto lo = CivilDate::parse(lo_s);
    auto hi = CivilDate::parse(hi_s);
    if (!lo.ok() || !hi.ok()) return bad("invalid date in validity set");
    intervals.push_back(DateInterval{lo.value(), hi.value()});
  }
  auto set = from_intervals(intervals);
  if (!set.ok()) return bad("invalid interval in validity set");
  // Reject non-canonical input so every day set has one byte form.
  if (set.value().intervals() != intervals) {
    return bad("validity set not in canonical form");
  }
  return set;
}

}  // namespace phrfog
