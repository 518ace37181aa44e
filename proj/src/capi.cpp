#include "modplab/capi.h"

#include <string>

#include "modplab/report.hpp"

using namespace modplab;

struct mpl_result {
    Report report;
    std::string json_cache;
    std::string csv_cache;
};

namespace {
thread_local std::string g_last_error;
}

extern "C" {

int mpl_run(const char* config_json, mpl_result** out) {
    g_last_error.clear();
    if (!config_json || !out) {
        g_last_error = "null argument";
        return MPL_ERR_ARGUMENT;
    }
    *out = nullptr;
    Json cfg_json;
    try {
        cfg_json = Json::parse(config_json);
    } catch (const std::exception& e) {
        g_last_error = std::string("malformed JSON: ") + e.what();
        return MPL_ERR_ARGUMENT;
    }
    try {
        RunConfig cfg = config_from_json(cfg_json);
        auto res = new mpl_result;
        res->report = run_suite(cfg);
        res->json_cache = res->report.to_json(cfg.include_timing).dump(2) + "\n";
        res->csv_cache = res->report.to_csv(cfg.include_timing);
        *out = res;
        return MPL_OK;
    } catch (const ConfigError& e) {
        g_last_error = e.what();
        return MPL_ERR_CONFIG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MPL_ERR_RUNTIME;
    }
}

const char* mpl_result_json(const mpl_result* res) { return res ? res->json_cache.c_str() : ""; }

const char* mpl_result_csv(const mpl_result* res) { return res ? res->csv_cache.c_str() : ""; }

int mpl_result_all_pass(const mpl_result* res) { return res && res->report.all_pass() ? 1 : 0; }

size_t mpl_result_record_count(const mpl_result* res) { return res ? res->report.records.size() : 0; }

void mpl_result_free(mpl_result* res) { delete res; }

const char* mpl_last_error(void) { return g_last_error.c_str(); }

const char* mpl_version(void) { return "modp-lab 1.0.0"; }

}  // extern "C"
