// modp-lab command line front end; all work goes through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

#include "modplab/capi.h"

namespace {

using Json = nlohmann::ordered_json;

struct CommonOpts {
    long p = 11;
    int f = 1;
    std::string r;
    std::string jrho;
    bool ss = false;
    bool tilde = false;
    unsigned long seed = 0;
    int cutoff = 12;
    std::string emit_path;
    std::string format = "json";
    bool timing = false;
    int threads = 0;
};

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--p", o.p, "prime p");
    app->add_option("--f", o.f, "degree f");
    app->add_option("--r", o.r, "inertial exponents r0,..,rf-1");
    app->add_option("--jrho", o.jrho, "indices of J_rho, comma separated");
    app->add_flag("--ss", o.ss, "semisimple (split) rho");
    app->add_flag("--tilde", o.tilde, "use the tilde-Gamma variant");
    app->add_option("--seed", o.seed, "random seed");
    app->add_option("--cutoff", o.cutoff, "degree cutoff");
    app->add_option("--emit", o.emit_path, "write the report to this file");
    app->add_option("--format", o.format, "output format: json or csv");
    app->add_flag("--timing", o.timing, "include timings in the report");
    app->add_option("--threads", o.threads, "worker count (or MODP_LAB_THREADS)");
}

Json config_of(const CommonOpts& o, const std::string& suite) {
    Json cfg{{"p", o.p}, {"f", o.f}, {"suite", suite}, {"seed", o.seed}, {"cutoff", o.cutoff},
             {"ss", o.ss}, {"tilde", o.tilde}, {"format", o.format}, {"timing", o.timing},
             {"threads", o.threads}};
    if (!o.r.empty()) cfg["r"] = parse_longs(o.r);
    if (!o.jrho.empty()) cfg["jrho"] = parse_longs(o.jrho);
    return cfg;
}

int run_and_emit(const Json& cfg, const CommonOpts& o) {
    mpl_result* res = nullptr;
    int rc = mpl_run(cfg.dump().c_str(), &res);
    if (rc != MPL_OK) {
        std::cerr << "error: " << mpl_last_error() << "\n";
        return rc == MPL_ERR_CONFIG ? 2 : 1;
    }
    std::string text = o.format == "csv" ? mpl_result_csv(res) : mpl_result_json(res);
    if (!o.emit_path.empty()) {
        FILE* fp = std::fopen(o.emit_path.c_str(), "wb");
        if (!fp) {
            std::cerr << "error: cannot open " << o.emit_path << "\n";
            mpl_result_free(res);
            return 1;
        }
        std::fwrite(text.data(), 1, text.size(), fp);
        std::fclose(fp);
    } else {
        std::cout << text;
    }
    int ok = mpl_result_all_pass(res);
    mpl_result_free(res);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modp-lab: exact verification of Serre-weight combinatorics, "
                 "graded Koszul complexes and deformation-ring algebra"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string chi_str, op = "wbar3", kind, check, srho, Jopt, Iopt, suite_sel = "all";

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite_sel, "weights | d0 | iwahori | koszul | defring | all");
    verify->add_option("suite_arg", suite_sel, "same as --suite, as a positional");
    add_common(verify, o);

    auto* d0 = app.add_subcommand("d0", "Serre-weight set and D_0/D_1 data of rho");
    add_common(d0, o);

    auto* iw = app.add_subcommand("iwahori", "Iwahori character profiles");
    iw->add_option("--chi", chi_str, "character exponents a,b")->required();
    iw->add_option("--op", op, "wbar3 | theta | tauj");
    add_common(iw, o);

    auto* ko = app.add_subcommand("koszul", "graded complexes over the enveloping algebra");
    ko->add_option("--kind", kind, "koszul_e|koszul_f|koszul_0|type_e|type_f|type_0|all");
    add_common(ko, o);

    auto* dr = app.add_subcommand("defring", "deformation-ring slice checks");
    dr->add_option("--srho", srho, "indices of S_rho (default: the full set)");
    dr->add_option("--J", Jopt, "indices of J");
    dr->add_option("--I", Iopt, "signed members of I, e.g. +0,-2");
    dr->add_option("--check", check, "tangent | divis | cyclic (all run)");
    add_common(dr, o);

    CLI11_PARSE(app, argc, argv);

    Json cfg;
    if (verify->parsed()) {
        cfg = config_of(o, suite_sel);
    } else if (d0->parsed()) {
        cfg = config_of(o, "d0");
    } else if (iw->parsed()) {
        cfg = config_of(o, "iwahori");
        auto ab = parse_longs(chi_str);
        if (ab.size() != 2) {
            std::cerr << "error: --chi needs two exponents\n";
            return 2;
        }
        cfg["chi"] = Json::array({ab[0], ab[1]});
        cfg["op"] = op;
    } else if (ko->parsed()) {
        cfg = config_of(o, "koszul");
        if (!kind.empty()) cfg["kind"] = kind;
    } else if (dr->parsed()) {
        cfg = config_of(o, "defring");
        if (!srho.empty()) cfg["srho"] = parse_longs(srho);
        if (!Jopt.empty()) cfg["J"] = parse_longs(Jopt);
        if (!Iopt.empty()) {
            Json I = Json::object();
            std::string cur;
            for (char c : Iopt + ",") {
                if (c == ',') {
                    if (!cur.empty()) {
                        int sign = cur[0] == '-' ? -1 : +1;
                        I[cur.substr(1)] = sign;
                    }
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            cfg["I"] = I;
        }
        if (!check.empty()) cfg["check"] = check;
    }
    return run_and_emit(cfg, o);
}
