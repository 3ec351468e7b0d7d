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

#include "evpnsdn/bgp/route.hpp"

#include <sstream>

namespace evpnsdn::bgp {

std::string EvpnRoute::str() const {
  std::ostringstream os;
  os << "evpn[" << static_cast<int>(route_type) << "] rd=" << rd.str();
  switch (route_type) {
    case kMacIpAdvertisement:
      os << " mac=" << mac.str();
      if (!ip.empty()) os << " ip=" << ip.str();
      if (!labels.empty()) os << " label=" << labels.front();
      break;
    case kInclusiveMulticast:
      os << " tag=" << eth_tag << " orig=" << originating_ip.str();
      break;
    case kEthernetAutoDiscovery:
      os << " esi=" << esi.str() << " tag=" << eth_tag;
      break;
    case kEthernetSegment:
      os << " esi=" << esi.str() << " orig=" << originating_ip.str();
      break;
    default:
      break;
  }
  return os.str();
}

void PathAttributes::add_route_target(const RouteTarget& rt) {
  extended_communities.push_back(rt.encode());
}

std::vector<RouteTarget> PathAttributes::route_targets() const {
  std::vector<RouteTarget> rts;
  for (const auto& community : extended_communities)
    if (const auto rt = RouteTarget::decode(community.data())) rts.push_back(*rt);
  return rts;
}

}  // namespace evpnsdn::bgp
