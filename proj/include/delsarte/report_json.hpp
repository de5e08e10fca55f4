#pragma once

#include <json.hpp>

#include "delsarte/catalog.hpp"
#include "delsarte/polygon.hpp"

namespace delsarte {

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);

/// Keys: family, family_n, representative, n, group_order, lambda, euler, h2, rho_triv, rank, checks[].
void to_json(nlohmann::json& j, const RankReport& r);
void from_json(const nlohmann::json& j, RankReport& r);

void to_json(nlohmann::json& j, const LatticePoint& p);
void to_json(nlohmann::json& j, const IntegralPolygon& p);
void to_json(nlohmann::json& j, const UnimodularAffineMap& m);

}  // namespace delsarte
