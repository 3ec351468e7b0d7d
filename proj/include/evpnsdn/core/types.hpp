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

#ifndef EVPNSDN_CORE_TYPES_HPP
#define EVPNSDN_CORE_TYPES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace evpnsdn {

/// Route Distinguisher, Type 0 form only: 2-byte ASN : 4-byte number.
struct RouteDistinguisher {
  uint16_t type_field = 0;
  uint16_t asn = 0;
  uint32_t assigned_number = 0;

  auto operator<=>(const RouteDistinguisher&) const = default;

  std::string str() const;  // "asn:number"
  std::array<uint8_t, 8> encode() const;
  static RouteDistinguisher decode(const uint8_t* bytes);
  static std::optional<RouteDistinguisher> parse(const std::string& text);
};

/// Route Target extended community (type 0x00, subtype 0x02).
struct RouteTarget {
  uint16_t asn = 0;
  uint32_t local_admin = 0;

  auto operator<=>(const RouteTarget&) const = default;

  std::string str() const;  // "asn:local_admin"
  std::array<uint8_t, 8> encode() const;
  static std::optional<RouteTarget> decode(const uint8_t* bytes);
  static std::optional<RouteTarget> parse(const std::string& text);
};

struct EthernetSegmentId {
  std::array<uint8_t, 10> bytes{};

  auto operator<=>(const EthernetSegmentId&) const = default;

  /// All-zero ESI: single-homed segment.
  bool is_zero() const;
  std::string str() const;
};

struct MacAddress {
  std::array<uint8_t, 6> bytes{};

  auto operator<=>(const MacAddress&) const = default;

  std::string str() const;  // "aa:bb:cc:dd:ee:ff"
  static std::optional<MacAddress> parse(const std::string& text);
  static MacAddress from_u64(uint64_t value);  // low 48 bits
  uint64_t to_u64() const;
};

/// IPv4/IPv6 address or "absent" (len 0).
struct IpAddress {
  uint8_t len = 0;  // 0, 4 or 16
  std::array<uint8_t, 16> bytes{};

  auto operator<=>(const IpAddress&) const = default;

  bool empty() const { return len == 0; }
  std::string str() const;  // dotted quad / hex groups / ""
  static IpAddress v4(uint8_t a, uint8_t b, uint8_t c, uint8_t d);
  static std::optional<IpAddress> parse(const std::string& text);
};

enum class EviState { kPending, kDeployed, kFailed, kDeleting };

const char* to_string(EviState state);

enum class EntryOrigin { kLocal, kRemote };

const char* to_string(EntryOrigin origin);

/// One EVPN instance as tracked by the controller.
struct EviRecord {
  uint32_t evi_id = 0;
  std::string customer_id;
  std::string virtual_network_id;
  std::string sap_id;
  std::set<std::string> network_ids;
  std::set<std::string> pe_ids;
  RouteDistinguisher rd;
  RouteTarget rt;
  uint32_t mpls_label = 0;
  std::optional<uint32_t> rp_id;  // at most one policy per EVI
  EviState state = EviState::kPending;
  std::string failure_reason;
};

/// Advertisement gating and import/export rules; one policy may be
/// shared by any number of EVIs.
struct RoutingPolicy {
  uint32_t rp_id = 0;
  std::string name;
  bool allow_mac_advertisement = false;
  std::set<RouteTarget> import_rts;
  std::set<RouteTarget> export_rts;
  std::optional<uint32_t> max_mac_routes;
};

/// Row of the main MAC table: (mac, evi_id) is the unique key.
struct MacTableEntry {
  MacAddress mac;
  IpAddress ip;  // optional
  uint32_t evi_id = 0;
  EntryOrigin origin = EntryOrigin::kLocal;
  uint32_t mpls_label = 0;
  EthernetSegmentId esi;
  std::vector<std::string> path_list;  // remote next-hop PEs, kept sorted
  double learned_at_ms = 0;            // monotonic
  bool advertised = false;             // currently announced to peers
};

struct LocalEncap {
  enum class Kind { kNone, kVlan, kVxlan };
  Kind kind = Kind::kNone;
  uint32_t value = 0;  // 12-bit VLAN tag or 24-bit VNI
};

/// Auxiliary table row: VNI <-> EVI binding plus remote participation.
struct AuxMapping {
  uint32_t vni = 0;  // 24-bit VXLAN segment id
  uint32_t evi_id = 0;
  std::set<std::string> participating_pes;
  LocalEncap local_encap;
};

/// Deterministic, injective RD/RT derivation: assigned_number and
/// local_admin both carry the EVI id directly.
std::pair<RouteDistinguisher, RouteTarget> derive_rd_rt(uint64_t evi_id, uint16_t controller_asn);

}  // namespace evpnsdn

#endif  // EVPNSDN_CORE_TYPES_HPP
