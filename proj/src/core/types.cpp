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

#include "evpnsdn/core/types.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>

#include "evpnsdn/core/errors.hpp"

namespace evpnsdn {
namespace {

void put_u16(uint8_t* p, uint16_t v) {
  p[0] = static_cast<uint8_t>(v >> 8);
  p[1] = static_cast<uint8_t>(v);
}

void put_u32(uint8_t* p, uint32_t v) {
  p[0] = static_cast<uint8_t>(v >> 24);
  p[1] = static_cast<uint8_t>(v >> 16);
  p[2] = static_cast<uint8_t>(v >> 8);
  p[3] = static_cast<uint8_t>(v);
}

uint16_t get_u16(const uint8_t* p) { return static_cast<uint16_t>(p[0] << 8 | p[1]); }

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) << 24 | static_cast<uint32_t>(p[1]) << 16 |
         static_cast<uint32_t>(p[2]) << 8 | static_cast<uint32_t>(p[3]);
}

// Parses "asn:number" with 16-bit asn and 32-bit number.
std::optional<std::pair<uint16_t, uint32_t>> parse_asn_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) return std::nullopt;
  uint64_t asn = 0, num = 0;
  for (size_t i = 0; i < colon; ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    asn = asn * 10 + static_cast<uint64_t>(text[i] - '0');
    if (asn > 0xFFFF) return std::nullopt;
  }
  for (size_t i = colon + 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    num = num * 10 + static_cast<uint64_t>(text[i] - '0');
    if (num > 0xFFFFFFFFULL) return std::nullopt;
  }
  return std::make_pair(static_cast<uint16_t>(asn), static_cast<uint32_t>(num));
}

}  // namespace

std::string RouteDistinguisher::str() const {
  return std::to_string(asn) + ":" + std::to_string(assigned_number);
}

std::array<uint8_t, 8> RouteDistinguisher::encode() const {
  std::array<uint8_t, 8> out{};
  put_u16(out.data(), type_field);
  put_u16(out.data() + 2, asn);
  put_u32(out.data() + 4, assigned_number);
  return out;
}

RouteDistinguisher RouteDistinguisher::decode(const uint8_t* bytes) {
  RouteDistinguisher rd;
  rd.type_field = get_u16(bytes);
  rd.asn = get_u16(bytes + 2);
  rd.assigned_number = get_u32(bytes + 4);
  return rd;
}

std::optional<RouteDistinguisher> RouteDistinguisher::parse(const std::string& text) {
  const auto pair = parse_asn_pair(text);
  if (!pair) return std::nullopt;
  return RouteDistinguisher{0, pair->first, pair->second};
}

std::string RouteTarget::str() const {
  return std::to_string(asn) + ":" + std::to_string(local_admin);
}

std::array<uint8_t, 8> RouteTarget::encode() const {
  std::array<uint8_t, 8> out{};
  out[0] = 0x00;  // type: 2-byte-ASN specific
  out[1] = 0x02;  // subtype: route target
  put_u16(out.data() + 2, asn);
  put_u32(out.data() + 4, local_admin);
  return out;
}

std::optional<RouteTarget> RouteTarget::decode(const uint8_t* bytes) {
  if (bytes[0] != 0x00 || bytes[1] != 0x02) return std::nullopt;
  return RouteTarget{get_u16(bytes + 2), get_u32(bytes + 4)};
}

std::optional<RouteTarget> RouteTarget::parse(const std::string& text) {
  const auto pair = parse_asn_pair(text);
  if (!pair) return std::nullopt;
  return RouteTarget{pair->first, pair->second};
}

bool EthernetSegmentId::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
}

std::string EthernetSegmentId::str() const {
  char buf[3 * 10];
  char* p = buf;
  for (size_t i = 0; i < bytes.size(); ++i)
    p += std::snprintf(p, 4, i ? ":%02x" : "%02x", bytes[i]);
  return buf;
}

std::string MacAddress::str() const {
  char buf[18];
  std::snprintf(buf, sizeof(buf), "%02x:%02x:%02x:%02x:%02x:%02x", bytes[0], bytes[1],
                bytes[2], bytes[3], bytes[4], bytes[5]);
  return buf;
}

std::optional<MacAddress> MacAddress::parse(const std::string& text) {
  MacAddress mac;
  unsigned int v[6];
  if (std::sscanf(text.c_str(), "%x:%x:%x:%x:%x:%x", &v[0], &v[1], &v[2], &v[3], &v[4],
                  &v[5]) != 6)
    return std::nullopt;
  for (int i = 0; i < 6; ++i) {
    if (v[i] > 0xFF) return std::nullopt;
    mac.bytes[static_cast<size_t>(i)] = static_cast<uint8_t>(v[i]);
  }
  return mac;
}

MacAddress MacAddress::from_u64(uint64_t value) {
  MacAddress mac;
  for (int i = 5; i >= 0; --i) {
    mac.bytes[static_cast<size_t>(i)] = static_cast<uint8_t>(value & 0xFF);
    value >>= 8;
  }
  return mac;
}

uint64_t MacAddress::to_u64() const {
  uint64_t v = 0;
  for (const uint8_t b : bytes) v = v << 8 | b;
  return v;
}

std::string IpAddress::str() const {
  if (len == 0) return "";
  if (len == 4) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", bytes[0], bytes[1], bytes[2], bytes[3]);
    return buf;
  }
  char buf[40];
  char* p = buf;
  for (int i = 0; i < 16; i += 2)
    p += std::snprintf(p, 6, i ? ":%02x%02x" : "%02x%02x", bytes[static_cast<size_t>(i)],
                       bytes[static_cast<size_t>(i + 1)]);
  return buf;
}

IpAddress IpAddress::v4(uint8_t a, uint8_t b, uint8_t c, uint8_t d) {
  IpAddress ip;
  ip.len = 4;
  ip.bytes[0] = a;
  ip.bytes[1] = b;
  ip.bytes[2] = c;
  ip.bytes[3] = d;
  return ip;
}

std::optional<IpAddress> IpAddress::parse(const std::string& text) {
  if (text.empty()) return IpAddress{};
  unsigned int v[4];
  if (std::sscanf(text.c_str(), "%u.%u.%u.%u", &v[0], &v[1], &v[2], &v[3]) == 4) {
    for (int i = 0; i < 4; ++i)
      if (v[i] > 255) return std::nullopt;
    return v4(static_cast<uint8_t>(v[0]), static_cast<uint8_t>(v[1]),
              static_cast<uint8_t>(v[2]), static_cast<uint8_t>(v[3]));
  }
  return std::nullopt;
}

const char* to_string(EviState state) {
  switch (state) {
    case EviState::kPending: return "pending";
    case EviState::kDeployed: return "deployed";
    case EviState::kFailed: return "failed";
    case EviState::kDeleting: return "deleting";
  }
  return "unknown";
}

const char* to_string(EntryOrigin origin) {
  return origin == EntryOrigin::kLocal ? "local" : "remote";
}

std::pair<RouteDistinguisher, RouteTarget> derive_rd_rt(uint64_t evi_id, uint16_t controller_asn) {
  if (evi_id == 0 || evi_id > 0xFFFFFFFFULL)
    throw InvalidArgument("evi_id must be a positive 32-bit integer");
  const auto id = static_cast<uint32_t>(evi_id);
  return {RouteDistinguisher{0, controller_asn, id}, RouteTarget{controller_asn, id}};
}

}  // namespace evpnsdn
