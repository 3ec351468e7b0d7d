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

#ifndef EVPNSDN_CORE_ERRORS_HPP
#define EVPNSDN_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evpnsdn {

class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidState : public std::logic_error {
 public:
  explicit InvalidState(const std::string& what) : std::logic_error(what) {}
};

class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

class AlreadyAllocated : public std::runtime_error {
 public:
  explicit AlreadyAllocated(const std::string& what) : std::runtime_error(what) {}
};

/// A BGP message that cannot be decoded. The owning session must answer
/// with a NOTIFICATION and reset.
class MalformedMessage : public std::runtime_error {
 public:
  explicit MalformedMessage(const std::string& what) : std::runtime_error(what) {}
};

class EmptyReport : public std::runtime_error {
 public:
  explicit EmptyReport(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evpnsdn

#endif  // EVPNSDN_CORE_ERRORS_HPP
