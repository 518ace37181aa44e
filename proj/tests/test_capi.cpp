#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <cstring>
#include <string>

#include "modplab/capi.h"

using Json = nlohmann::ordered_json;

TEST_CASE("run a suite through the C surface") {
    mpl_result* res = nullptr;
    int rc = mpl_run(R"({"p": 11, "f": 1, "r": [3], "suite": "all"})", &res);
    REQUIRE(rc == MPL_OK);
    REQUIRE(res != nullptr);
    CHECK(mpl_result_all_pass(res) == 1);
    CHECK(mpl_result_record_count(res) > 10);
    auto parsed = Json::parse(mpl_result_json(res));
    CHECK(parsed.at("all_pass").get<bool>());
    CHECK(parsed.at("records").size() == mpl_result_record_count(res));
    std::string csv = mpl_result_csv(res);
    CHECK(csv.rfind("id,verdict", 0) == 0);
    mpl_result_free(res);
}

TEST_CASE("error codes") {
    mpl_result* res = nullptr;
    CHECK(mpl_run(nullptr, &res) == MPL_ERR_ARGUMENT);
    CHECK(mpl_run("{not json", &res) == MPL_ERR_ARGUMENT);
    CHECK(std::strlen(mpl_last_error()) > 0);
    CHECK(mpl_run(R"({"p": 6, "f": 1})", &res) == MPL_ERR_CONFIG);
    CHECK(res == nullptr);
    CHECK(std::strlen(mpl_last_error()) > 0);
}

TEST_CASE("determinism across calls") {
    const char* cfg = R"({"p": 7, "f": 1, "r": [3], "suite": "koszul", "cutoff": 8, "seed": 9})";
    mpl_result *a = nullptr, *b = nullptr;
    REQUIRE(mpl_run(cfg, &a) == MPL_OK);
    REQUIRE(mpl_run(cfg, &b) == MPL_OK);
    CHECK(std::string(mpl_result_json(a)) == mpl_result_json(b));
    mpl_result_free(a);
    mpl_result_free(b);
}

TEST_CASE("version string") { CHECK(std::string(mpl_version()).rfind("modp-lab", 0) == 0); }
