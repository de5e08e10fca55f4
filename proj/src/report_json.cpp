#include "delsarte/report_json.hpp"

namespace delsarte {

void to_json(nlohmann::json& j, const Check& c) { j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

void from_json(const nlohmann::json& j, Check& c) {
    j.at("name").get_to(c.name);
    j.at("pass").get_to(c.pass);
    j.at("detail").get_to(c.detail);
}

void to_json(nlohmann::json& j, const RankReport& r) {
    j = nlohmann::json{{"family", r.family},
                       {"family_n", r.family_n},
                       {"representative", r.representative},
                       {"n", r.n},
                       {"group_order", r.group_order},
                       {"lambda", r.lambda},
                       {"euler", r.euler},
                       {"h2", r.h2},
                       {"rho_triv", r.rho_triv},
                       {"rank", r.rank},
                       {"checks", r.checks}};
}

void from_json(const nlohmann::json& j, RankReport& r) {
    j.at("family").get_to(r.family);
    j.at("family_n").get_to(r.family_n);
    j.at("representative").get_to(r.representative);
    j.at("n").get_to(r.n);
    j.at("group_order").get_to(r.group_order);
    j.at("lambda").get_to(r.lambda);
    j.at("euler").get_to(r.euler);
    j.at("h2").get_to(r.h2);
    j.at("rho_triv").get_to(r.rho_triv);
    j.at("rank").get_to(r.rank);
    j.at("checks").get_to(r.checks);
}

void to_json(nlohmann::json& j, const LatticePoint& p) { j = nlohmann::json::array({p.x, p.y}); }

void to_json(nlohmann::json& j, const IntegralPolygon& p) {
    j = nlohmann::json::array();
    for (const auto& v : p.vertices()) j.push_back(v);
}

void to_json(nlohmann::json& j, const UnimodularAffineMap& m) {
    j = {{"matrix", m.matrix}, {"shift", m.shift}};
}

}  // namespace delsarte
