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
// Calendar dates and validity windows for time-limited keys.
//
// Keys are valid on whole civil days: a key issued for the interval
// 2020-06-20 .. 2020-06-22 decrypts records on any of those three days and
// on no other day.  A ValiditySet is a set of such inclusive intervals kept
// in a canonical form (sorted, pairwise disjoint, non-adjacent) so that two
// sets describing the same days always serialize to identical bytes.

#ifndef PHRFOG_DATES_HPP_
#define PHRFOG_DATES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phrfog/bytes.hpp"
#include "phrfog/result.hpp"

namespace phrfog {

// A date in the proleptic Gregorian calendar.
struct CivilDate {
  std::int32_t year = 1970;
  std::uint8_t month = 1;  // 1..12
  std::uint8_t day = 1;    // 1..days_in_month

  // Validates the component ranges (including leap years).
  static Result<CivilDate> make(std::int32_t year, std::uint32_t month,
                                std::uint32_t day);

  // Parses the "YYYY-MM-DD" form used everywhere in this library.
  static Result<CivilDate> parse(std::string_view text);

  // Formats as "YYYY-MM-DD" (zero-padded, years 0..9999).
  std::string to_string() const;

  // Days since 1970-01-01 (negative before); total order for comparisons.
  std::int64_t serial_day() const;

  friend bool operator==(const CivilDate& a, const CivilDate& b) {
    return a.year == b.year && a.month == b.month && a.day == b.day;
  }
  friend bool operator!=(const CivilDate& a, const CivilDate& b) {
    return !(a == b);
  }
  friend bool operator<(const CivilDate& a, const CivilDate& b) {
    return a.serial_day() < b.serial_day();
  }
  friend bool operator<=(const CivilDate& a, const CivilDate& b) {
    return a.serial_day() <= b.serial_day();
  }
  friend bool operator>(const CivilDate& a, const CivilDate& b) {
    return b < a;
  }
  friend bool operator>=(const CivilDate& a, const CivilDate& b) {
    return b <= a;
  }
};

// An inclusive range of days, lo <= hi.
struct DateInterval {
  CivilDate lo;
  CivilDate hi;

  bool contains(const CivilDate& d) const {
    return lo <= d && d <= hi;
  }
  friend bool operator==(const DateInterval& a, const DateInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// A canonical union of inclusive date intervals.
//
// Canonical means: intervals sorted ascending, pairwise disjoint, and never
// adjacent (so [a,b] followed by [b+1,c] has been merged into [a,c]).  The
// representation is therefore the unique minimum cover of the day set.
class ValiditySet {
 public:
  ValiditySet() = default;

  // Builds the canonical form from arbitrary intervals (overlapping,
  // unsorted, adjacent — all fine).  Fails if any interval has lo > hi.
  static Result<ValiditySet> from_intervals(
      const std::vector<DateInterval>& intervals);

  bool contains(const CivilDate& d) const;
  bool empty() const { return intervals_.empty(); }
  const std::vector<DateInterval>& intervals() const { return intervals_; }

  friend bool operator==(const ValiditySet& a, const ValiditySet& b) {
    return a.intervals_ == b.intervals_;
  }

  // Serializes the canonical interval list.  read() rejects inputs whose
  // interval list is not canonical, so the byte form is unique per day set.
  void write(ByteWriter& w) const;
  static Result<ValiditySet> read(ByteReader& r);

 private:
  std::vector<DateInterval> intervals_;
};

}  // namespace phrfog

#endif  // PHRFOG_DATES_HPP_
