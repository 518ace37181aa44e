#pragma once

#include <functional>
#include <optional>
#include <string>

#include "modplab/json_io.hpp"

namespace modplab {

// Run configuration for the suites; validated before dispatch.
struct RunConfig {
    long p = 7;
    int f = 1;
    std::vector<long> r;       // inertial exponents; empty = derived default
    std::set<int> jrho;        // subset of S
    bool ss = false;           // split (semisimple) rho
    bool tilde = true;
    unsigned long seed = 0;
    int cutoff = 12;
    std::string suite = "all";  // weights | d0 | iwahori | koszul | defring | all
    std::string kind = "";      // koszul kind, empty = all six
    std::optional<std::pair<long, long>> chi;  // iwahori base character exponents
    std::string op = "wbar3";                  // iwahori op: wbar3 | theta | tauj
    std::string format = "json";               // json | csv
    bool include_timing = false;
    int threads = 1;

    // defring targeting; empty selections run the full sweep
    std::set<int> srho;
    std::set<int> defring_J;
    std::map<int, int> defring_I;  // index -> +-1
    std::string check = "";        // tangent | divis | cyclic, empty = all
};

// one verification record; failures carry a minimal counterexample witness
struct Record {
    std::string id;
    Json params;
    bool pass = false;
    Json witness;  // null when passing
    long ms = 0;
};

struct Report {
    int version = 1;
    Json config;
    std::vector<Record> records;

    bool all_pass() const {
        for (auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    Json to_json(bool with_timing) const;
    std::string to_csv(bool with_timing) const;
};

RunConfig config_from_json(const Json& j);
Report run_suite(const RunConfig& cfg);
void emit(const Report& rep, const std::string& path, const std::string& format, bool with_timing);

// worker-count resolution: explicit config value, else MODP_LAB_THREADS, else 1
int resolve_threads(int configured);

}  // namespace modplab
