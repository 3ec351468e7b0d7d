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

#include "evpnsdn/core/label_allocator.hpp"

#include "evpnsdn/core/errors.hpp"

namespace evpnsdn {

namespace {
constexpr uint32_t kMaxLabel = (1u << 20) - 1;
}

LabelAllocator::LabelAllocator(uint32_t base, uint32_t size) : base_(base), size_(size) {
  if (base > kMaxLabel || size == 0 || base + size - 1 > kMaxLabel)
    throw InvalidArgument("label pool must fit in the 20-bit label space");
}

uint32_t LabelAllocator::allocate(uint32_t evi_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (by_evi_.contains(evi_id))
    throw AlreadyAllocated("evi " + std::to_string(evi_id) + " already holds a label");
  return allocate_locked(evi_id);
}

uint32_t LabelAllocator::ensure(uint32_t evi_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (const auto it = by_evi_.find(evi_id); it != by_evi_.end()) return it->second;
  return allocate_locked(evi_id);
}

uint32_t LabelAllocator::allocate_locked(uint32_t evi_id) {
  uint32_t label;
  if (!released_.empty() && (*released_.begin() < base_ + watermark_ || watermark_ >= size_)) {
    label = *released_.begin();
    released_.erase(released_.begin());
  } else if (watermark_ < size_) {
    label = base_ + watermark_;
    ++watermark_;
  } else {
    throw ResourceExhausted("label pool exhausted (" + std::to_string(size_) + " labels)");
  }
  by_evi_.emplace(evi_id, label);
  return label;
}

void LabelAllocator::release(uint32_t evi_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = by_evi_.find(evi_id);
  if (it == by_evi_.end()) return;
  released_.insert(it->second);
  by_evi_.erase(it);
}

std::optional<uint32_t> LabelAllocator::lookup(uint32_t evi_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = by_evi_.find(evi_id);
  if (it == by_evi_.end()) return std::nullopt;
  return it->second;
}

size_t LabelAllocator::in_use() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return by_evi_.size();
}

std::map<uint32_t, uint32_t> LabelAllocator::snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return by_evi_;
}

}  // namespace evpnsdn
