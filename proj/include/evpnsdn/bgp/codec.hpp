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

#ifndef EVPNSDN_BGP_CODEC_HPP
#define EVPNSDN_BGP_CODEC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evpnsdn/bgp/route.hpp"

namespace evpnsdn::bgp {

// BGP over TCP, messages <= 4096 bytes, 19-byte header.
constexpr size_t kHeaderSize = 19;
constexpr size_t kMaxMessageSize = 4096;
constexpr uint16_t kAfiL2vpn = 25;
constexpr uint8_t kSafiEvpn = 70;

enum MessageType : uint8_t {
  kOpen = 1,
  kUpdate = 2,
  kNotification = 3,
  kKeepalive = 4,
};

struct MessageHeader {
  uint16_t length = 0;  // total, header included
  uint8_t type = 0;
};

/// Parses and validates the 19-byte header (marker, length bounds).
/// Throws MalformedMessage.
MessageHeader parse_header(std::span<const uint8_t> bytes);

struct OpenMessage {
  uint8_t version = 4;
  uint16_t asn = 0;
  uint16_t hold_time = 0;
  std::array<uint8_t, 4> bgp_id{};
  bool evpn_capability = false;  // MP capability AFI 25 / SAFI 70
};

std::vector<uint8_t> make_open(uint16_t asn, uint16_t hold_time,
                               const std::array<uint8_t, 4>& bgp_id);
OpenMessage parse_open(std::span<const uint8_t> message);

std::vector<uint8_t> make_keepalive();
std::vector<uint8_t> make_notification(uint8_t code, uint8_t subcode);

struct ParsedUpdate {
  std::vector<EvpnRoute> advertisements;
  std::vector<EvpnRoute> withdrawals;
  PathAttributes attrs;
  size_t skipped_unknown = 0;  // NLRI entries with unsupported route type
};

/// Decodes one complete UPDATE message: MP_REACH_NLRI entries become
/// advertisements, MP_UNREACH_NLRI entries withdrawals. Unknown route
/// types are skipped and counted; anything truncated or inconsistent
/// throws MalformedMessage.
ParsedUpdate parse_update(std::span<const uint8_t> message);

/// Encodes advertisements sharing one attribute set. Splits into
/// several messages when the 4096-byte ceiling would be exceeded.
/// Throws InvalidArgument on an empty route list or a route violating
/// its per-type field layout.
std::vector<std::vector<uint8_t>> serialize_update(std::span<const EvpnRoute> routes,
                                                   const PathAttributes& attrs);

/// Encodes withdrawals (MP_UNREACH_NLRI only).
std::vector<std::vector<uint8_t>> serialize_withdraw(std::span<const EvpnRoute> routes);

/// Wire bytes of a single NLRI entry (route type, length octet, body).
std::vector<uint8_t> serialize_nlri(const EvpnRoute& route);

/// Per-type field presence check; throws InvalidArgument.
void validate_route(const EvpnRoute& route);

}  // namespace evpnsdn::bgp

#endif  // EVPNSDN_BGP_CODEC_HPP
