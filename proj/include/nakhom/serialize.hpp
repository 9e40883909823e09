#pragma once

// JSON views of the library types.  Key order is fixed (ordered_json
// everywhere) so identical inputs serialize byte-identically; infinite
// dimensions render as null.

#include <json.hpp>

#include "nakhom/homext.hpp"
#include "nakhom/kupisch.hpp"
#include "nakhom/modrep.hpp"

namespace nakhom {

using json = nlohmann::ordered_json;

inline json json_dim(const std::optional<int>& d) {
  return d ? json(*d) : json(nullptr);
}

inline void to_json(json& j, const KupischSeries& A) { j = to_string(A); }

inline void to_json(json& j, const Indecomposable& M) { j = to_string(M); }

inline void to_json(json& j, const ExtProfile& p) {
  j = json{{"source", to_string(p.source)},
           {"target", to_string(p.target)},
           {"horizon", p.horizon},
           {"dims", p.dims},
           {"support", p.support},
           {"pd", json_dim(p.source_pd)},
           {"periodic", p.source_pd
                            ? json(nullptr)
                            : json{{"rho", p.preperiod}, {"pi", p.period}}},
           {"infinite", !p.source_pd.has_value()}};
}

inline void to_json(json& j, const SelfExtCertificate& c) {
  j = json{{"infinite", c.infinite},
           {"rho", json_dim(c.preperiod)},
           {"pi", json_dim(c.period)},
           {"witness_degree", json_dim(c.witness_degree)},
           {"horizon", c.horizon},
           {"support", c.support}};
}

inline void to_json(json& j, const GorensteinInfo& g) {
  j = json{{"right_injdim", json_dim(g.right_injdim)},
           {"left_injdim", json_dim(g.left_injdim)},
           {"is_gorenstein", g.is_gorenstein}};
}

}  // namespace nakhom
