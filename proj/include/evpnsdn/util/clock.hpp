/*
 * Copyright 2026 The evpnsdn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EVPNSDN_UTIL_CLOCK_HPP
#define EVPNSDN_UTIL_CLOCK_HPP

#include <chrono>
#include <cstdint>
#include <string>

namespace evpnsdn {

/// Monotonic timestamp in milliseconds (sub-millisecond resolution).
/// All internal timing uses this clock; wall-clock time appears only in
/// exported reports.
inline double now_ms() {
  using namespace std::chrono;
  return duration_cast<duration<double, std::milli>>(
             steady_clock::now().time_since_epoch())
      .count();
}

/// Wall-clock time, ISO 8601 UTC, for report metadata.
std::string wallclock_iso8601();

}  // namespace evpnsdn

#endif  // EVPNSDN_UTIL_CLOCK_HPP
