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

#ifndef EVPNSDN_UTIL_LOGGING_HPP
#define EVPNSDN_UTIL_LOGGING_HPP

#include <sstream>
#include <string>

namespace evpnsdn::logging {

enum class Level { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

Level level();
void set_level(Level level);
void emit(Level level, const std::string& message);

}  // namespace evpnsdn::logging

#define EVPNSDN_LOG(lvl, expr)                                      \
  do {                                                              \
    if (static_cast<int>(lvl) >=                                    \
        static_cast<int>(::evpnsdn::logging::level())) {            \
      std::ostringstream os_;                                       \
      os_ << expr;                                                  \
      ::evpnsdn::logging::emit(lvl, os_.str());                     \
    }                                                               \
  } while (0)

#define LOG_DEBUG(expr) EVPNSDN_LOG(::evpnsdn::logging::Level::kDebug, expr)
#define LOG_INFO(expr) EVPNSDN_LOG(::evpnsdn::logging::Level::kInfo, expr)
#define LOG_WARN(expr) EVPNSDN_LOG(::evpnsdn::logging::Level::kWarn, expr)
#define LOG_ERROR(expr) EVPNSDN_LOG(::evpnsdn::logging::Level::kError, expr)

#endif  // EVPNSDN_UTIL_LOGGING_HPP
