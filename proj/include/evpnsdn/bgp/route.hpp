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

#ifndef EVPNSDN_BGP_ROUTE_HPP
#define EVPNSDN_BGP_ROUTE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "evpnsdn/core/types.hpp"

namespace evpnsdn::bgp {

enum RouteType : uint8_t {
  kEthernetAutoDiscovery = 1,
  kMacIpAdvertisement = 2,
  kInclusiveMulticast = 3,
  kEthernetSegment = 4,
};

/// A decoded EVPN NLRI entry. Field presence depends on route_type;
/// fields a type does not carry stay value-initialized:
///   type 1: rd, esi, eth_tag, labels[1]
///   type 2: rd, esi, eth_tag, mac, ip (optional), labels[1..2]
///   type 3: rd, eth_tag, originating_ip
///   type 4: rd, esi, originating_ip
struct EvpnRoute {
  uint8_t route_type = kMacIpAdvertisement;
  RouteDistinguisher rd;
  EthernetSegmentId esi;
  uint32_t eth_tag = 0;
  MacAddress mac;
  IpAddress ip;
  std::vector<uint32_t> labels;
  IpAddress originating_ip;

  auto operator<=>(const EvpnRoute&) const = default;

  std::string str() const;
};

/// Path attributes shared by all routes of one UPDATE.
struct PathAttributes {
  uint8_t origin = 0;                 // 0=IGP 1=EGP 2=INCOMPLETE
  std::vector<uint16_t> as_path;      // one AS_SEQUENCE, 2-byte ASNs
  std::array<uint8_t, 4> next_hop{};  // IPv4, carried inside MP_REACH
  std::vector<std::array<uint8_t, 8>> extended_communities;

  auto operator<=>(const PathAttributes&) const = default;

  void add_route_target(const RouteTarget& rt);
  std::vector<RouteTarget> route_targets() const;
};

}  // namespace evpnsdn::bgp

#endif  // EVPNSDN_BGP_ROUTE_HPP
