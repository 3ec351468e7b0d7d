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

#include "evpnsdn/bgp/codec.hpp"

#include <cstring>

#include "evpnsdn/core/errors.hpp"

namespace evpnsdn::bgp {
namespace {

constexpr uint8_t kAttrOrigin = 1;
constexpr uint8_t kAttrAsPath = 2;
constexpr uint8_t kAttrMpReach = 14;
constexpr uint8_t kAttrMpUnreach = 15;
constexpr uint8_t kAttrExtCommunities = 16;

constexpr uint8_t kFlagOptional = 0x80;
constexpr uint8_t kFlagTransitive = 0x40;
constexpr uint8_t kFlagExtendedLength = 0x10;

constexpr uint32_t kMaxLabel = (1u << 20) - 1;

class Reader {
 public:
  Reader(const uint8_t* data, size_t size) : data_(data), size_(size) {}

  size_t remaining() const { return size_ - pos_; }

  const uint8_t* take(size_t n) {
    if (remaining() < n) throw MalformedMessage("truncated field");
    const uint8_t* p = data_ + pos_;
    pos_ += n;
    return p;
  }

  uint8_t u8() { return *take(1); }

  uint16_t u16() {
    const uint8_t* p = take(2);
    return static_cast<uint16_t>(p[0] << 8 | p[1]);
  }

  uint32_t u32() {
    const uint8_t* p = take(4);
    return static_cast<uint32_t>(p[0]) << 24 | static_cast<uint32_t>(p[1]) << 16 |
           static_cast<uint32_t>(p[2]) << 8 | static_cast<uint32_t>(p[3]);
  }

 private:
  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;
};

class Writer {
 public:
  std::vector<uint8_t>& out() { return buf_; }

  void u8(uint8_t v) { buf_.push_back(v); }

  void u16(uint16_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
  }

  void u32(uint32_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 24));
    buf_.push_back(static_cast<uint8_t>(v >> 16));
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
  }

  void raw(const uint8_t* p, size_t n) { buf_.insert(buf_.end(), p, p + n); }

 private:
  std::vector<uint8_t> buf_;
};

// 20-bit label in the high-order bits of 3 octets.
void write_label(Writer& w, uint32_t label) {
  const uint32_t v = label << 4;
  w.u8(static_cast<uint8_t>(v >> 16));
  w.u8(static_cast<uint8_t>(v >> 8));
  w.u8(static_cast<uint8_t>(v));
}

uint32_t read_label(Reader& r) {
  const uint8_t* p = r.take(3);
  const uint32_t v =
      static_cast<uint32_t>(p[0]) << 16 | static_cast<uint32_t>(p[1]) << 8 | p[2];
  return (v >> 4) & kMaxLabel;
}

IpAddress read_ip(Reader& r, uint8_t bit_len, const char* what) {
  IpAddress ip;
  switch (bit_len) {
    case 0: return ip;
    case 32: ip.len = 4; break;
    case 128: ip.len = 16; break;
    default: throw MalformedMessage(std::string(what) + ": bad address bit length");
  }
  std::memcpy(ip.bytes.data(), r.take(ip.len), ip.len);
  return ip;
}

EvpnRoute parse_nlri_body(uint8_t route_type, Reader& r) {
  EvpnRoute route;
  route.route_type = route_type;
  route.rd = RouteDistinguisher::decode(r.take(8));
  switch (route_type) {
    case kEthernetAutoDiscovery: {
      std::memcpy(route.esi.bytes.data(), r.take(10), 10);
      route.eth_tag = r.u32();
      route.labels.push_back(read_label(r));
      break;
    }
    case kMacIpAdvertisement: {
      std::memcpy(route.esi.bytes.data(), r.take(10), 10);
      route.eth_tag = r.u32();
      if (r.u8() != 48) throw MalformedMessage("type-2 MAC length must be 48 bits");
      std::memcpy(route.mac.bytes.data(), r.take(6), 6);
      route.ip = read_ip(r, r.u8(), "type-2 IP");
      route.labels.push_back(read_label(r));
      if (r.remaining() == 3) route.labels.push_back(read_label(r));
      break;
    }
    case kInclusiveMulticast: {
      route.eth_tag = r.u32();
      route.originating_ip = read_ip(r, r.u8(), "type-3 originating IP");
      if (route.originating_ip.empty())
        throw MalformedMessage("type-3 originating IP is mandatory");
      break;
    }
    case kEthernetSegment: {
      std::memcpy(route.esi.bytes.data(), r.take(10), 10);
      route.originating_ip = read_ip(r, r.u8(), "type-4 originating IP");
      if (route.originating_ip.empty())
        throw MalformedMessage("type-4 originating IP is mandatory");
      break;
    }
    default: throw MalformedMessage("unreachable");
  }
  return route;
}

// Parses the NLRI list of an MP_REACH/MP_UNREACH attribute.
void parse_nlri_list(Reader& r, std::vector<EvpnRoute>& out, size_t& skipped) {
  while (r.remaining() > 0) {
    const uint8_t route_type = r.u8();
    const uint8_t body_len = r.u8();
    if (route_type < 1 || route_type > 4) {
      r.take(body_len);  // skip, keep parsing the rest of the message
      ++skipped;
      continue;
    }
    Reader body(r.take(body_len), body_len);
    out.push_back(parse_nlri_body(route_type, body));
    if (body.remaining() != 0)
      throw MalformedMessage("NLRI length octet does not match its body");
  }
}

void append_attr_header(Writer& w, uint8_t flags, uint8_t type, size_t len) {
  if (flags & kFlagExtendedLength) {
    w.u8(flags);
    w.u8(type);
    w.u16(static_cast<uint16_t>(len));
  } else {
    if (len > 255) throw InvalidArgument("attribute too long for 1-byte length");
    w.u8(flags);
    w.u8(type);
    w.u8(static_cast<uint8_t>(len));
  }
}

std::vector<uint8_t> serialize_shared_attrs(const PathAttributes& attrs) {
  Writer w;
  append_attr_header(w, kFlagTransitive, kAttrOrigin, 1);
  w.u8(attrs.origin);

  const size_t as_path_len = attrs.as_path.empty() ? 0 : 2 + 2 * attrs.as_path.size();
  append_attr_header(w, kFlagTransitive, kAttrAsPath, as_path_len);
  if (!attrs.as_path.empty()) {
    w.u8(2);  // AS_SEQUENCE
    w.u8(static_cast<uint8_t>(attrs.as_path.size()));
    for (const uint16_t asn : attrs.as_path) w.u16(asn);
  }
  return w.out();
}

std::vector<uint8_t> serialize_ext_communities(const PathAttributes& attrs) {
  Writer w;
  if (attrs.extended_communities.empty()) return w.out();
  append_attr_header(w, kFlagOptional | kFlagTransitive, kAttrExtCommunities,
                     8 * attrs.extended_communities.size());
  for (const auto& community : attrs.extended_communities) w.raw(community.data(), 8);
  return w.out();
}

std::vector<uint8_t> frame_message(uint8_t type, const std::vector<uint8_t>& body) {
  std::vector<uint8_t> msg(kHeaderSize + body.size());
  std::memset(msg.data(), 0xFF, 16);
  const uint16_t total = static_cast<uint16_t>(msg.size());
  msg[16] = static_cast<uint8_t>(total >> 8);
  msg[17] = static_cast<uint8_t>(total);
  msg[18] = type;
  std::memcpy(msg.data() + kHeaderSize, body.data(), body.size());
  return msg;
}

// Builds one UPDATE around a batch of NLRI blobs. `reach` selects
// MP_REACH (with attrs) vs MP_UNREACH.
std::vector<uint8_t> build_update(const std::vector<std::vector<uint8_t>>& nlris, bool reach,
                                  const PathAttributes& attrs) {
  size_t nlri_total = 0;
  for (const auto& n : nlris) nlri_total += n.size();

  Writer attr;
  if (reach) {
    const auto shared = serialize_shared_attrs(attrs);
    attr.raw(shared.data(), shared.size());
    // MP_REACH_NLRI: afi, safi, next-hop, reserved, NLRI list.
    const size_t len = 2 + 1 + 1 + 4 + 1 + nlri_total;
    append_attr_header(attr, kFlagOptional | kFlagExtendedLength, kAttrMpReach, len);
    attr.u16(kAfiL2vpn);
    attr.u8(kSafiEvpn);
    attr.u8(4);
    attr.raw(attrs.next_hop.data(), 4);
    attr.u8(0);
    for (const auto& n : nlris) attr.raw(n.data(), n.size());
    const auto ext = serialize_ext_communities(attrs);
    attr.raw(ext.data(), ext.size());
  } else {
    const size_t len = 2 + 1 + nlri_total;
    append_attr_header(attr, kFlagOptional | kFlagExtendedLength, kAttrMpUnreach, len);
    attr.u16(kAfiL2vpn);
    attr.u8(kSafiEvpn);
    for (const auto& n : nlris) attr.raw(n.data(), n.size());
  }

  Writer body;
  body.u16(0);  // no legacy withdrawn routes
  body.u16(static_cast<uint16_t>(attr.out().size()));
  body.raw(attr.out().data(), attr.out().size());
  return frame_message(kUpdate, body.out());
}

std::vector<std::vector<uint8_t>> serialize_batched(std::span<const EvpnRoute> routes,
                                                    bool reach, const PathAttributes& attrs) {
  if (routes.empty()) throw InvalidArgument("nothing to advertise");
  for (const auto& route : routes) validate_route(route);
  if (reach && attrs.route_targets().empty())
    throw InvalidArgument("EVPN advertisement requires at least one route target");

  // Fixed per-message overhead: header + withdrawn/attr lengths + attrs.
  const size_t fixed = kHeaderSize + 4 +
                       (reach ? serialize_shared_attrs(attrs).size() + 4 + 9 +
                                    serialize_ext_communities(attrs).size()
                              : 4 + 3);

  std::vector<std::vector<uint8_t>> messages;
  std::vector<std::vector<uint8_t>> batch;
  size_t batch_bytes = 0;
  for (const auto& route : routes) {
    auto nlri = serialize_nlri(route);
    if (!batch.empty() && fixed + batch_bytes + nlri.size() > kMaxMessageSize) {
      messages.push_back(build_update(batch, reach, attrs));
      batch.clear();
      batch_bytes = 0;
    }
    batch_bytes += nlri.size();
    batch.push_back(std::move(nlri));
  }
  if (!batch.empty()) messages.push_back(build_update(batch, reach, attrs));
  return messages;
}

}  // namespace

MessageHeader parse_header(std::span<const uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw MalformedMessage("short header");
  for (size_t i = 0; i < 16; ++i)
    if (bytes[i] != 0xFF) throw MalformedMessage("bad marker");
  MessageHeader header;
  header.length = static_cast<uint16_t>(bytes[16] << 8 | bytes[17]);
  header.type = bytes[18];
  if (header.length < kHeaderSize || header.length > kMaxMessageSize)
    throw MalformedMessage("message length out of range");
  return header;
}

std::vector<uint8_t> make_open(uint16_t asn, uint16_t hold_time,
                               const std::array<uint8_t, 4>& bgp_id) {
  Writer body;
  body.u8(4);  // version
  body.u16(asn);
  body.u16(hold_time);
  body.raw(bgp_id.data(), 4);
  // One optional parameter: capabilities, with the EVPN MP capability.
  body.u8(8);
  body.u8(2);  // param type: capabilities
  body.u8(6);
  body.u8(1);  // capability: multiprotocol
  body.u8(4);
  body.u16(kAfiL2vpn);
  body.u8(0);
  body.u8(kSafiEvpn);
  return frame_message(kOpen, body.out());
}

OpenMessage parse_open(std::span<const uint8_t> message) {
  const auto header = parse_header(message);
  if (header.type != kOpen) throw MalformedMessage("not an OPEN");
  if (message.size() < header.length) throw MalformedMessage("truncated OPEN");
  Reader r(message.data() + kHeaderSize, header.length - kHeaderSize);
  OpenMessage open;
  open.version = r.u8();
  open.asn = r.u16();
  open.hold_time = r.u16();
  std::memcpy(open.bgp_id.data(), r.take(4), 4);
  const uint8_t opt_len = r.u8();
  Reader opts(r.take(opt_len), opt_len);
  while (opts.remaining() > 0) {
    const uint8_t param_type = opts.u8();
    const uint8_t param_len = opts.u8();
    Reader param(opts.take(param_len), param_len);
    if (param_type != 2) continue;
    while (param.remaining() > 0) {
      const uint8_t cap = param.u8();
      const uint8_t cap_len = param.u8();
      Reader cap_body(param.take(cap_len), cap_len);
      if (cap == 1 && cap_len == 4 && cap_body.u16() == kAfiL2vpn) {
        cap_body.u8();
        if (cap_body.u8() == kSafiEvpn) open.evpn_capability = true;
      }
    }
  }
  return open;
}

std::vector<uint8_t> make_keepalive() { return frame_message(kKeepalive, {}); }

std::vector<uint8_t> make_notification(uint8_t code, uint8_t subcode) {
  Writer body;
  body.u8(code);
  body.u8(subcode);
  return frame_message(kNotification, body.out());
}

ParsedUpdate parse_update(std::span<const uint8_t> message) {
  const auto header = parse_header(message);
  if (header.type != kUpdate) throw MalformedMessage("not an UPDATE");
  if (message.size() < header.length) throw MalformedMessage("truncated UPDATE");
  Reader r(message.data() + kHeaderSize, header.length - kHeaderSize);

  ParsedUpdate parsed;
  const uint16_t withdrawn_len = r.u16();
  r.take(withdrawn_len);  // legacy IPv4 withdrawals, unused with EVPN
  const uint16_t attrs_len = r.u16();
  Reader attrs(r.take(attrs_len), attrs_len);

  while (attrs.remaining() > 0) {
    const uint8_t flags = attrs.u8();
    const uint8_t type = attrs.u8();
    const size_t len = (flags & kFlagExtendedLength) ? attrs.u16() : attrs.u8();
    Reader value(attrs.take(len), len);
    switch (type) {
      case kAttrOrigin:
        parsed.attrs.origin = value.u8();
        break;
      case kAttrAsPath:
        while (value.remaining() > 0) {
          value.u8();  // segment type
          const uint8_t count = value.u8();
          for (uint8_t i = 0; i < count; ++i) parsed.attrs.as_path.push_back(value.u16());
        }
        break;
      case kAttrMpReach: {
        if (value.u16() != kAfiL2vpn || value.u8() != kSafiEvpn)
          throw MalformedMessage("unexpected AFI/SAFI in MP_REACH");
        const uint8_t nh_len = value.u8();
        if (nh_len != 4) throw MalformedMessage("only IPv4 next hops supported");
        std::memcpy(parsed.attrs.next_hop.data(), value.take(4), 4);
        value.u8();  // reserved
        parse_nlri_list(value, parsed.advertisements, parsed.skipped_unknown);
        break;
      }
      case kAttrMpUnreach: {
        if (value.u16() != kAfiL2vpn || value.u8() != kSafiEvpn)
          throw MalformedMessage("unexpected AFI/SAFI in MP_UNREACH");
        parse_nlri_list(value, parsed.withdrawals, parsed.skipped_unknown);
        break;
      }
      case kAttrExtCommunities: {
        if (len % 8 != 0) throw MalformedMessage("extended communities not 8-byte aligned");
        while (value.remaining() > 0) {
          std::array<uint8_t, 8> community;
          std::memcpy(community.data(), value.take(8), 8);
          parsed.attrs.extended_communities.push_back(community);
        }
        break;
      }
      default:
        break;  // tolerate unknown attributes
    }
  }
  return parsed;
}

std::vector<std::vector<uint8_t>> serialize_update(std::span<const EvpnRoute> routes,
                                                   const PathAttributes& attrs) {
  return serialize_batched(routes, true, attrs);
}

std::vector<std::vector<uint8_t>> serialize_withdraw(std::span<const EvpnRoute> routes) {
  return serialize_batched(routes, false, PathAttributes{});
}

std::vector<uint8_t> serialize_nlri(const EvpnRoute& route) {
  Writer body;
  const auto rd = route.rd.encode();
  body.raw(rd.data(), rd.size());
  switch (route.route_type) {
    case kEthernetAutoDiscovery:
      body.raw(route.esi.bytes.data(), 10);
      body.u32(route.eth_tag);
      write_label(body, route.labels.at(0));
      break;
    case kMacIpAdvertisement:
      body.raw(route.esi.bytes.data(), 10);
      body.u32(route.eth_tag);
      body.u8(48);
      body.raw(route.mac.bytes.data(), 6);
      body.u8(static_cast<uint8_t>(route.ip.len * 8));
      body.raw(route.ip.bytes.data(), route.ip.len);
      for (const uint32_t label : route.labels) write_label(body, label);
      break;
    case kInclusiveMulticast:
      body.u32(route.eth_tag);
      body.u8(static_cast<uint8_t>(route.originating_ip.len * 8));
      body.raw(route.originating_ip.bytes.data(), route.originating_ip.len);
      break;
    case kEthernetSegment:
      body.raw(route.esi.bytes.data(), 10);
      body.u8(static_cast<uint8_t>(route.originating_ip.len * 8));
      body.raw(route.originating_ip.bytes.data(), route.originating_ip.len);
      break;
    default:
      throw InvalidArgument("unknown route type " + std::to_string(route.route_type));
  }
  Writer nlri;
  nlri.u8(route.route_type);
  nlri.u8(static_cast<uint8_t>(body.out().size()));
  nlri.raw(body.out().data(), body.out().size());
  return nlri.out();
}

void validate_route(const EvpnRoute& route) {
  const bool mac_zero = route.mac == MacAddress{};
  const bool esi_zero = route.esi.is_zero();
  for (const uint32_t label : route.labels)
    if (label > kMaxLabel) throw InvalidArgument("label exceeds 20 bits");
  switch (route.route_type) {
    case kEthernetAutoDiscovery:
      if (route.labels.size() != 1) throw InvalidArgument("type 1 carries exactly one label");
      if (!mac_zero || !route.ip.empty() || !route.originating_ip.empty())
        throw InvalidArgument("type 1 carries no MAC/IP fields");
      break;
    case kMacIpAdvertisement:
      if (route.labels.empty() || route.labels.size() > 2)
        throw InvalidArgument("type 2 carries one or two labels");
      if (route.ip.len != 0 && route.ip.len != 4 && route.ip.len != 16)
        throw InvalidArgument("type 2 IP must be absent, IPv4 or IPv6");
      if (!route.originating_ip.empty())
        throw InvalidArgument("type 2 carries no originating IP");
      break;
    case kInclusiveMulticast:
      if (route.originating_ip.len != 4 && route.originating_ip.len != 16)
        throw InvalidArgument("type 3 requires an originating IP");
      if (!route.labels.empty() || !mac_zero || !esi_zero || !route.ip.empty())
        throw InvalidArgument("type 3 carries only RD, tag and originating IP");
      break;
    case kEthernetSegment:
      if (route.originating_ip.len != 4 && route.originating_ip.len != 16)
        throw InvalidArgument("type 4 requires an originating IP");
      if (!route.labels.empty() || !mac_zero || route.eth_tag != 0 || !route.ip.empty())
        throw InvalidArgument("type 4 carries only RD, ESI and originating IP");
      break;
    default:
      throw InvalidArgument("unknown route type " + std::to_string(route.route_type));
  }
}

}  // namespace evpnsdn::bgp
