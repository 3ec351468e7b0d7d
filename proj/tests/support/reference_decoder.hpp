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

// Independent EVPN UPDATE decoder used as a double-implementation check.
// Written directly from the wire layout:
//   message  = marker(16x 0xFF) len(2) type(2=UPDATE)
//              withdrawn_len(2) withdrawn(..) attrs_len(2) attrs(..)
//   attr     = flags(1) type(1) len(1|2 when flags&0x10) value
//   MP_REACH (type 14)   = afi(2)=25 safi(1)=70 nhlen(1)=4 nh(4) rsv(1) nlri*
//   MP_UNREACH (type 15) = afi(2)=25 safi(1)=70 nlri*
//   EXT_COMM (type 16)   = n * 8 bytes; RT when byte0=0x00 byte1=0x02
//   nlri     = route_type(1) length(1) body
//     t1 = rd(8) esi(10) tag(4) label(3)
//     t2 = rd(8) esi(10) tag(4) maclen(1)=48 mac(6) iplen(1) ip(0|4|16)
//          label1(3) [label2(3)]
//     t3 = rd(8) tag(4) iplen(1) ip(4|16)
//     t4 = rd(8) esi(10) iplen(1) ip(4|16)
//   labels sit in the top 20 bits of their 3 octets; ip lengths are in bits.
// It shares no code with the production codec on purpose.

#ifndef EVPNSDN_TESTS_REFERENCE_DECODER_HPP
#define EVPNSDN_TESTS_REFERENCE_DECODER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace refdec {

struct RefRoute {
  int route_type = 0;
  uint16_t rd_type = 0;
  uint16_t rd_asn = 0;
  uint32_t rd_number = 0;
  uint8_t esi[10] = {};
  uint32_t eth_tag = 0;
  uint8_t mac[6] = {};
  int ip_len = 0;  // bytes: 0, 4 or 16
  uint8_t ip[16] = {};
  std::vector<uint32_t> labels;
  int orig_ip_len = 0;
  uint8_t orig_ip[16] = {};
};

struct RefUpdate {
  std::vector<RefRoute> reach;
  std::vector<RefRoute> unreach;
  uint8_t origin = 0;
  std::vector<uint16_t> as_path;
  uint8_t next_hop[4] = {};
  std::vector<std::pair<uint16_t, uint32_t>> route_targets;  // (asn, admin)
};

struct RefDecodeError : std::runtime_error {
  explicit RefDecodeError(const std::string& what) : std::runtime_error(what) {}
};

RefUpdate decode_update(const std::vector<uint8_t>& message);

}  // namespace refdec

#endif  // EVPNSDN_TESTS_REFERENCE_DECODER_HPP
