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

#include <doctest.h>

#include <random>

#include "evpnsdn/bgp/codec.hpp"
#include "evpnsdn/core/errors.hpp"
#include "support/reference_decoder.hpp"
#include "support/route_gen.hpp"

using namespace evpnsdn;
using namespace evpnsdn::bgp;

namespace {

// Wraps hand-assembled NLRI bytes into a minimal UPDATE:
// ORIGIN + AS_PATH(empty) + MP_REACH + one export RT.
std::vector<uint8_t> hand_update(const std::vector<uint8_t>& nlri) {
  std::vector<uint8_t> attrs = {
      0x40, 0x01, 0x01, 0x00,  // ORIGIN igp
      0x40, 0x02, 0x00,        // AS_PATH empty
  };
  // MP_REACH, extended length: afi 25, safi 70, nh 192.0.2.1.
  const size_t mp_len = 9 + nlri.size();
  attrs.insert(attrs.end(), {0x90, 0x0E, static_cast<uint8_t>(mp_len >> 8),
                             static_cast<uint8_t>(mp_len), 0x00, 0x19, 0x46, 0x04, 192, 0, 2,
                             1, 0x00});
  attrs.insert(attrs.end(), nlri.begin(), nlri.end());
  // EXT_COMMUNITIES with RT 64512:100.
  attrs.insert(attrs.end(),
               {0xC0, 0x10, 0x08, 0x00, 0x02, 0xFC, 0x00, 0x00, 0x00, 0x00, 0x64});

  std::vector<uint8_t> msg(16, 0xFF);
  const uint16_t total = static_cast<uint16_t>(19 + 4 + attrs.size());
  msg.push_back(static_cast<uint8_t>(total >> 8));
  msg.push_back(static_cast<uint8_t>(total));
  msg.push_back(2);  // UPDATE
  msg.insert(msg.end(), {0x00, 0x00});
  msg.push_back(static_cast<uint8_t>(attrs.size() >> 8));
  msg.push_back(static_cast<uint8_t>(attrs.size()));
  msg.insert(msg.end(), attrs.begin(), attrs.end());
  return msg;
}

}  // namespace

TEST_CASE("hand-assembled type-2 NLRI decodes to the expected route") {
  // RD 64512:100, zero ESI, tag 0, MAC aa:bb:cc:dd:ee:01, no IP,
  // label 100000. Laid out by hand: RD(8) ESI(10) tag(4) maclen(1)=48
  // mac(6) iplen(1)=0 label(3); label 100000 = 0x186A0, shifted left 4.
  const std::vector<uint8_t> nlri = {
      0x02, 33,                                                    // type, length
      0x00, 0x00, 0xFC, 0x00, 0x00, 0x00, 0x00, 0x64,              // RD 64512:100
      0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,  // ESI
      0x00, 0x00, 0x00, 0x00,                                      // eth tag
      48, 0xAA, 0xBB, 0xCC, 0xDD, 0xEE, 0x01,                      // mac
      0,                                                           // no IP
      0x18, 0x6A, 0x00,                                            // label
  };
  const auto parsed = parse_update(hand_update(nlri));
  REQUIRE(parsed.advertisements.size() == 1);
  const auto& route = parsed.advertisements.front();
  CHECK(route.route_type == kMacIpAdvertisement);
  CHECK(route.rd.str() == "64512:100");
  CHECK(route.esi.is_zero());
  CHECK(route.eth_tag == 0);
  CHECK(route.mac.str() == "aa:bb:cc:dd:ee:01");
  CHECK(route.ip.empty());
  REQUIRE(route.labels.size() == 1);
  CHECK(route.labels[0] == 100000);
  CHECK(parsed.attrs.route_targets().size() == 1);
  CHECK(parsed.attrs.route_targets()[0].str() == "64512:100");

  // And the codec emits the identical bytes.
  CHECK(serialize_nlri(route) == nlri);
}

TEST_CASE("type-3 NLRI is 19 bytes for an IPv4 originating address") {
  EvpnRoute route;
  route.route_type = kInclusiveMulticast;
  route.rd = *RouteDistinguisher::parse("64512:100");
  route.eth_tag = 0;
  route.originating_ip = IpAddress::v4(10, 0, 0, 1);
  const auto nlri = serialize_nlri(route);
  // type(1) + len(1) + RD(8) + tag(4) + iplen(1) + ip(4)
  CHECK(nlri.size() == 19);
  CHECK(nlri[0] == 3);
  CHECK(nlri[1] == 17);
}

TEST_CASE("serialize then parse a round of randomized routes") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    const auto route = testsupport::random_route(rng);
    const auto attrs = testsupport::random_attrs(rng);
    const auto messages = serialize_update(std::span(&route, 1), attrs);
    REQUIRE(messages.size() == 1);
    const auto parsed = parse_update(messages[0]);
    REQUIRE(parsed.advertisements.size() == 1);
    CHECK(parsed.advertisements[0] == route);
    CHECK(parsed.attrs == attrs);
    CHECK(parsed.withdrawals.empty());
  }
}

TEST_CASE("independent reference decoder agrees with the codec") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 500; ++i) {
    const auto route = testsupport::random_route(rng);
    const auto attrs = testsupport::random_attrs(rng);
    const auto messages = serialize_update(std::span(&route, 1), attrs);
    const auto ref = refdec::decode_update(messages[0]);
    REQUIRE(ref.reach.size() == 1);
    const auto& r = ref.reach[0];
    CHECK(r.route_type == route.route_type);
    CHECK(r.rd_asn == route.rd.asn);
    CHECK(r.rd_number == route.rd.assigned_number);
    CHECK(r.eth_tag == route.eth_tag);
    CHECK(r.labels == route.labels);
    if (route.route_type == kMacIpAdvertisement) {
      CHECK(std::equal(route.mac.bytes.begin(), route.mac.bytes.end(), r.mac));
      CHECK(r.ip_len == route.ip.len);
    }
    if (route.route_type == kInclusiveMulticast || route.route_type == kEthernetSegment)
      CHECK(r.orig_ip_len == route.originating_ip.len);
    CHECK(ref.route_targets.size() == attrs.route_targets().size());
  }
}

TEST_CASE("withdrawals ride MP_UNREACH and round-trip") {
  std::mt19937_64 rng(9);
  std::vector<EvpnRoute> routes;
  for (int i = 0; i < 5; ++i) routes.push_back(testsupport::random_route(rng));
  const auto messages = serialize_withdraw(routes);
  REQUIRE(messages.size() == 1);
  const auto parsed = parse_update(messages[0]);
  CHECK(parsed.advertisements.empty());
  REQUIRE(parsed.withdrawals.size() == routes.size());
  for (size_t i = 0; i < routes.size(); ++i) CHECK(parsed.withdrawals[i] == routes[i]);
}

TEST_CASE("NLRI length exceeding remaining bytes is malformed") {
  std::vector<uint8_t> nlri = {0x02, 60};  // claims 60 bytes, provides 3
  nlri.insert(nlri.end(), {0x01, 0x02, 0x03});
  CHECK_THROWS_AS(parse_update(hand_update(nlri)), MalformedMessage);
}

TEST_CASE("bad marker and short header are malformed") {
  std::vector<uint8_t> msg(19, 0x00);
  CHECK_THROWS_AS(parse_header(msg), MalformedMessage);
  std::vector<uint8_t> shorty(5, 0xFF);
  CHECK_THROWS_AS(parse_header(shorty), MalformedMessage);
}

TEST_CASE("unknown route type is skipped, the rest still parses") {
  // A type-9 entry followed by a valid type-3.
  std::vector<uint8_t> nlri = {0x09, 0x04, 1, 2, 3, 4};
  EvpnRoute imet;
  imet.route_type = kInclusiveMulticast;
  imet.rd = *RouteDistinguisher::parse("64512:5");
  imet.eth_tag = 5000;
  imet.originating_ip = IpAddress::v4(10, 0, 0, 2);
  const auto tail = serialize_nlri(imet);
  nlri.insert(nlri.end(), tail.begin(), tail.end());

  const auto parsed = parse_update(hand_update(nlri));
  CHECK(parsed.skipped_unknown == 1);
  REQUIRE(parsed.advertisements.size() == 1);
  CHECK(parsed.advertisements[0] == imet);
}

TEST_CASE("empty route list is rejected") {
  CHECK_THROWS_AS(serialize_update({}, PathAttributes{}), InvalidArgument);
}

TEST_CASE("advertisement without a route target is rejected") {
  std::mt19937_64 rng(3);
  const auto route = testsupport::random_route(rng);
  PathAttributes attrs;  // no extended communities
  CHECK_THROWS_AS(serialize_update(std::span(&route, 1), attrs), InvalidArgument);
}

TEST_CASE("route violating per-type field presence is rejected") {
  EvpnRoute bad;
  bad.route_type = kInclusiveMulticast;  // missing originating IP
  bad.rd = *RouteDistinguisher::parse("1:1");
  PathAttributes attrs;
  attrs.add_route_target(RouteTarget{1, 1});
  CHECK_THROWS_AS(serialize_update(std::span(&bad, 1), attrs), InvalidArgument);

  EvpnRoute two_labels;
  two_labels.route_type = kEthernetAutoDiscovery;
  two_labels.rd = *RouteDistinguisher::parse("1:1");
  two_labels.labels = {1, 2};
  CHECK_THROWS_AS(serialize_update(std::span(&two_labels, 1), attrs), InvalidArgument);
}

TEST_CASE("two routes sharing attributes fit one UPDATE") {
  std::mt19937_64 rng(21);
  std::vector<EvpnRoute> routes = {testsupport::random_route(rng),
                                   testsupport::random_route(rng)};
  const auto attrs = testsupport::random_attrs(rng);
  const auto messages = serialize_update(routes, attrs);
  REQUIRE(messages.size() == 1);
  const auto parsed = parse_update(messages[0]);
  CHECK(parsed.advertisements.size() == 2);
  CHECK(parsed.advertisements[0] == routes[0]);
  CHECK(parsed.advertisements[1] == routes[1]);
}

TEST_CASE("oversized batches split at the 4096-byte ceiling") {
  // ~49-byte NLRIs (type 2 with IPv6 + 2 labels): 200 of them cannot fit
  // one message.
  std::vector<EvpnRoute> routes;
  for (int i = 0; i < 200; ++i) {
    EvpnRoute route;
    route.route_type = kMacIpAdvertisement;
    route.rd = RouteDistinguisher{0, 64512, static_cast<uint32_t>(i + 1)};
    route.mac = MacAddress::from_u64(static_cast<uint64_t>(i) + 1);
    route.ip.len = 16;
    route.ip.bytes[15] = static_cast<uint8_t>(i);
    route.labels = {100, 200};
    routes.push_back(route);
  }
  PathAttributes attrs;
  attrs.add_route_target(RouteTarget{64512, 1});
  const auto messages = serialize_update(routes, attrs);
  CHECK(messages.size() >= 2);
  size_t total = 0;
  for (const auto& msg : messages) {
    CHECK(msg.size() <= kMaxMessageSize);
    total += parse_update(msg).advertisements.size();
  }
  CHECK(total == routes.size());
}

TEST_CASE("open handshake messages round-trip") {
  const auto open_bytes = make_open(64512, 90, {10, 0, 0, 1});
  const auto open = parse_open(open_bytes);
  CHECK(open.version == 4);
  CHECK(open.asn == 64512);
  CHECK(open.hold_time == 90);
  CHECK(open.evpn_capability);
  CHECK(open.bgp_id == std::array<uint8_t, 4>{10, 0, 0, 1});

  const auto ka = make_keepalive();
  CHECK(parse_header(ka).type == kKeepalive);
  CHECK(parse_header(ka).length == 19);
}
