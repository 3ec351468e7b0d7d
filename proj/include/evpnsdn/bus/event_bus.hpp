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

#ifndef EVPNSDN_BUS_EVENT_BUS_HPP
#define EVPNSDN_BUS_EVENT_BUS_HPP

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>

#include "evpnsdn/util/clock.hpp"

namespace evpnsdn {

/// Ordered in-process message queue standing in for the controller's
/// data-store bus. Every item is stamped on enqueue and dequeue; the
/// difference is the message-passing overhead reported by the whitebox
/// instrumentation. Multi-producer, single ordered consumer.
template <typename T>
class InstrumentedBus {
 public:
  /// Stamps item.bus_enqueue_ms. Returns false after close().
  bool post(T item) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (closed_) return false;
      item.bus_enqueue_ms = now_ms();
      queue_.push_back(std::move(item));
      ++posted_;
    }
    cv_.notify_one();
    return true;
  }

  /// Blocks until an item arrives or the bus closes; stamps
  /// item.bus_dequeue_ms on delivery.
  std::optional<T> wait_pop() {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_.wait(lock, [this] { return closed_ || !queue_.empty(); });
    if (queue_.empty()) return std::nullopt;
    T item = std::move(queue_.front());
    queue_.pop_front();
    item.bus_dequeue_ms = now_ms();
    return item;
  }

  /// Marks one item fully handled (for idle detection).
  void mark_processed() { std::lock_guard<std::mutex> lock(mutex_); ++processed_; }

  /// True when every posted item has been consumed and handled.
  bool idle() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return queue_.empty() && posted_ == processed_;
  }

  size_t pending() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return queue_.size();
  }

  uint64_t posted() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return posted_;
  }

  void close() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      closed_ = true;
    }
    cv_.notify_all();
  }

 private:
  mutable std::mutex mutex_;
  std::condition_variable cv_;
  std::deque<T> queue_;
  uint64_t posted_ = 0;
  uint64_t processed_ = 0;
  bool closed_ = false;
};

}  // namespace evpnsdn

#endif  // EVPNSDN_BUS_EVENT_BUS_HPP
