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

#ifndef EVPNSDN_CORE_LABEL_ALLOCATOR_HPP
#define EVPNSDN_CORE_LABEL_ALLOCATOR_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace evpnsdn {

/// Per-EVI MPLS label pool. Hands out the lowest free label in
/// [base, base + size); released labels are reusable. Safe for
/// concurrent callers.
class LabelAllocator {
 public:
  LabelAllocator(uint32_t base, uint32_t size);

  /// Allocates a label for evi_id. Throws AlreadyAllocated if the EVI
  /// already holds one, ResourceExhausted when the pool is empty.
  uint32_t allocate(uint32_t evi_id);

  /// Idempotent form: returns the existing label or allocates one.
  uint32_t ensure(uint32_t evi_id);

  /// Releases the EVI's label back to the pool (no-op when absent).
  void release(uint32_t evi_id);

  std::optional<uint32_t> lookup(uint32_t evi_id) const;
  size_t in_use() const;

  /// Current evi -> label map, for full-scan soundness checks.
  std::map<uint32_t, uint32_t> snapshot() const;

 private:
  uint32_t allocate_locked(uint32_t evi_id);

  mutable std::mutex mutex_;
  const uint32_t base_;
  const uint32_t size_;
  uint32_t watermark_ = 0;        // next never-used offset
  std::set<uint32_t> released_;   // freed labels, min-first
  std::map<uint32_t, uint32_t> by_evi_;
};

}  // namespace evpnsdn

#endif  // EVPNSDN_CORE_LABEL_ALLOCATOR_HPP
