#include "modplab/json_io.hpp"

namespace modplab {

Json to_json(const AffineTerm& a) { return Json{{"sign", a.sign}, {"offset", a.offset}}; }

Json to_json(const FTuple& t) {
    Json r = Json::array();
    for (auto& a : t.t) r.push_back(to_json(a));
    return r;
}

Json to_json(const SerreWeight& w) { return Json{{"r", w.r}, {"twist", w.twist}}; }

Json to_json(const HChar& c) { return Json{{"a", c.a}, {"b", c.b}}; }

Json to_json(const TildeTuple& t) {
    Json tag;
    if (t.tagged)
        tag = Json{{"i", t.tag_i}, {"sign", t.tag_sign}};
    else
        tag = nullptr;
    return Json{{"lambda", to_json(t.lambda)}, {"tag", std::move(tag)}};
}

FTuple ftuple_from_json(const Json& j) {
    FTuple t;
    for (auto& a : j) t.t.push_back(AffineTerm{a.at("sign").get<int>(), a.at("offset").get<long>()});
    return t;
}

SerreWeight weight_from_json(const Json& j, const Params& P) {
    return SerreWeight(j.at("r").get<std::vector<long>>(), j.at("twist").get<long>(), P);
}

HChar hchar_from_json(const Json& j, const Params& P) {
    return HChar(j.at("a").get<long>(), j.at("b").get<long>(), P);
}

TildeTuple tilde_from_json(const Json& j) {
    TildeTuple t;
    t.lambda = ftuple_from_json(j.at("lambda"));
    if (!j.at("tag").is_null()) {
        t.tagged = true;
        t.tag_i = j.at("tag").at("i").get<int>();
        t.tag_sign = j.at("tag").at("sign").get<int>();
    }
    return t;
}

}  // namespace modplab
