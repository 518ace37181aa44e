#pragma once

#include <json.hpp>

#include "modplab/gamma.hpp"
#include "modplab/profile.hpp"
#include "modplab/weights.hpp"

namespace modplab {

using Json = nlohmann::ordered_json;

Json to_json(const AffineTerm& a);
Json to_json(const FTuple& t);
Json to_json(const SerreWeight& w);
Json to_json(const HChar& c);
Json to_json(const TildeTuple& t);

template <class T>
Json layers_to_json(const Layered<T>& prof) {
    Json layers = Json::array();
    for (auto& layer : prof.layers) {
        Json l = Json::array();
        for (auto& x : layer) l.push_back(to_json(x));
        layers.push_back(std::move(l));
    }
    return Json{{"layers", std::move(layers)}};
}

FTuple ftuple_from_json(const Json& j);
SerreWeight weight_from_json(const Json& j, const Params& P);
HChar hchar_from_json(const Json& j, const Params& P);
TildeTuple tilde_from_json(const Json& j);

}  // namespace modplab
