#include "modplab/report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "modplab/complexes.hpp"
#include "modplab/defring.hpp"
#include "modplab/iwahori.hpp"
#include "modplab/modm3.hpp"
#include "modplab/rho.hpp"

namespace modplab {

int resolve_threads(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("MODP_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

Json Report::to_json(bool with_timing) const {
    Json recs = Json::array();
    for (auto& r : records) {
        Json jr{{"id", r.id}, {"params", r.params}, {"verdict", r.pass ? "pass" : "fail"}, {"witness", r.witness}};
        if (with_timing) jr["ms"] = r.ms;
        recs.push_back(std::move(jr));
    }
    return Json{{"version", version}, {"config", config}, {"all_pass", all_pass()}, {"records", std::move(recs)}};
}

std::string Report::to_csv(bool with_timing) const {
    std::ostringstream os;
    os << "id,verdict,params,witness" << (with_timing ? ",ms" : "") << "\n";
    auto esc = [](std::string s) {
        std::string o = "\"";
        for (char c : s) {
            if (c == '"') o += "\"\"";
            o += c;
        }
        return o + "\"";
    };
    for (auto& r : records) {
        os << r.id << "," << (r.pass ? "pass" : "fail") << "," << esc(r.params.dump()) << ","
           << esc(r.witness.is_null() ? "" : r.witness.dump());
        if (with_timing) os << "," << r.ms;
        os << "\n";
    }
    return os.str();
}

RunConfig config_from_json(const Json& j) {
    RunConfig c;
    if (j.contains("p")) c.p = j.at("p").get<long>();
    if (j.contains("f")) c.f = j.at("f").get<int>();
    if (j.contains("r")) c.r = j.at("r").get<std::vector<long>>();
    if (j.contains("jrho"))
        for (auto& x : j.at("jrho")) c.jrho.insert(x.get<int>());
    if (j.contains("ss")) c.ss = j.at("ss").get<bool>();
    if (j.contains("tilde")) c.tilde = j.at("tilde").get<bool>();
    if (j.contains("seed")) c.seed = j.at("seed").get<unsigned long>();
    if (j.contains("cutoff")) c.cutoff = j.at("cutoff").get<int>();
    if (j.contains("suite")) c.suite = j.at("suite").get<std::string>();
    if (j.contains("kind")) c.kind = j.at("kind").get<std::string>();
    if (j.contains("chi")) c.chi = {j.at("chi").at(0).get<long>(), j.at("chi").at(1).get<long>()};
    if (j.contains("op")) c.op = j.at("op").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("srho"))
        for (auto& x : j.at("srho")) c.srho.insert(x.get<int>());
    if (j.contains("J"))
        for (auto& x : j.at("J")) c.defring_J.insert(x.get<int>());
    if (j.contains("I"))
        for (auto& [k, v] : j.at("I").items()) c.defring_I[std::stoi(k)] = v.get<int>();
    if (j.contains("check")) c.check = j.at("check").get<std::string>();
    if (j.contains("timing")) c.include_timing = j.at("timing").get<bool>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    return c;
}

namespace {

Json config_echo(const RunConfig& c) {
    Json jrho = Json::array();
    for (int x : c.jrho) jrho.push_back(x);
    return Json{{"p", c.p},       {"f", c.f},           {"r", c.r},     {"jrho", jrho},
                {"ss", c.ss},     {"tilde", c.tilde},   {"seed", c.seed}, {"cutoff", c.cutoff},
                {"suite", c.suite}, {"kind", c.kind}};
}

struct Runner {
    Report& rep;
    void add(const std::string& id, const Json& params, bool pass, Json witness = nullptr) {
        auto t0 = std::chrono::steady_clock::now();
        Record r;
        r.id = id;
        r.params = params;
        r.pass = pass;
        r.witness = pass ? Json(nullptr) : witness;
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        rep.records.push_back(std::move(r));
    }
    // guarded evaluation: a module error becomes a failed record, not a crash
    void add_eval(const std::string& id, const Json& params, const std::function<std::pair<bool, Json>()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Record r;
        r.id = id;
        r.params = params;
        try {
            auto [pass, witness] = fn();
            r.pass = pass;
            r.witness = pass ? Json(nullptr) : witness;
        } catch (const ModplabError& e) {
            r.pass = false;
            r.witness = Json{{"error", e.what()}};
        }
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        rep.records.push_back(std::move(r));
    }
};

RhoData rho_of(const RunConfig& cfg, const Params& P) {
    RhoData rho;
    rho.r = cfg.r;
    if (rho.r.empty()) rho.r.assign(P.f, 3);
    rho.J_rho = cfg.jrho;
    rho.split = cfg.ss;
    return rho;
}

void run_weights(const RunConfig&, const Params& P, Runner& R) {
    Json base{{"p", P.p}, {"f", P.f}};
    R.add_eval("L-compose-table", base, [&] {
        // spot-check the table through compose on all 36 pairs
        std::vector<AffineTerm> ts = {term_x(),          term_x_plus(-1),       term_x_plus(1),
                                      term_c_minus_x(P.p - 2), term_c_minus_x(P.p - 1), term_c_minus_x(P.p - 3)};
        for (auto& a : ts)
            for (auto& b : ts) {
                AffineTerm c = a.compose(b);
                if (c.sign != a.sign * b.sign || c.offset != a.offset + a.sign * b.offset)
                    return std::make_pair(false, Json{{"row", to_json(FTuple{{a}})}, {"col", to_json(FTuple{{b}})}});
            }
        return std::make_pair(true, Json(nullptr));
    });
    R.add_eval("C-I-count", base, [&] {
        long want = 1;
        for (int i = 0; i < P.f; ++i) want *= 3;
        long got = static_cast<long>(enumerate_I(P).size());
        return std::make_pair(got == want, Json{{"got", got}, {"want", want}});
    });
    R.add_eval("L-invert-identity", base, [&] {
        for (auto& lam : enumerate_I(P)) {
            if (!(compose(lam, invert(lam)) == identity_tuple(P.f)))
                return std::make_pair(false, Json{{"lambda", to_json(lam)}});
            if (S_of(invert(lam), P) != S_of(lam, P)) return std::make_pair(false, Json{{"lambda", to_json(lam)}});
        }
        return std::make_pair(true, Json(nullptr));
    });
    R.add_eval("L-e-integrality", base, [&] {
        for (auto& lam : enumerate_I(P)) e_of(lam, P);
        for (auto& lam : enumerate_RD(P)) e_of(lam, P);
        return std::make_pair(true, Json(nullptr));
    });
    R.add_eval("L-genericity-distinct", base, [&] {
        SerreWeight sigma(std::vector<long>(P.f, 4), 0, P);
        auto I = enumerate_I(P);
        for (size_t i = 0; i < I.size(); ++i)
            for (size_t j = i + 1; j < I.size(); ++j) {
                auto a = evaluate(I[i], sigma, P), b = evaluate(I[j], sigma, P);
                if (a && b && *a == *b)
                    return std::make_pair(false, Json{{"lambda", to_json(I[i])}, {"lambda2", to_json(I[j])}});
            }
        return std::make_pair(true, Json(nullptr));
    });
}

void run_d0(const RunConfig& cfg, const Params& P, Runner& R, Json* payload) {
    RhoData rho = rho_of(cfg, P);
    Json base{{"p", P.p}, {"f", P.f}, {"r", rho.r}, {"jrho", config_echo(cfg)["jrho"]}, {"ss", rho.split}};
    std::vector<SerreWeight> D;
    bool have_D = false;
    R.add_eval("C-D-cardinality", base, [&] {
        D = rho.split ? D_of_rho_ss(rho, P) : D_of_rho(rho, P);
        have_D = true;
        long want = 1L << (rho.split ? P.f : static_cast<int>(rho.J_rho.size()));
        return std::make_pair(static_cast<long>(D.size()) == want,
                              Json{{"got", D.size()}, {"want", want}});
    });
    if (!have_D) return;  // rho rejected; the failed record carries the error
    if (payload) {
        Json dlist = Json::array();
        for (auto& w : D) dlist.push_back(to_json(w));
        (*payload)["D"] = dlist;
    }
    if (!rho.split) {
        R.add_eval("T-tD0-multiplicity-free", base, [&]() -> std::pair<bool, Json> {
            std::vector<SerreWeight> all;
            Json per_sigma = Json::array();
            for (auto& sigma : D) {
                auto jh = jh_D0_sigma(rho, sigma, cfg.tilde, P);
                Json lst = Json::array();
                for (auto& w : jh) lst.push_back(to_json(w));
                per_sigma.push_back(Json{{"sigma", to_json(sigma)}, {"jh", lst}});
                all.insert(all.end(), jh.begin(), jh.end());
            }
            if (payload) (*payload)["D0"] = per_sigma;
            std::sort(all.begin(), all.end());
            auto dup = std::adjacent_find(all.begin(), all.end());
            if (dup != all.end()) return {false, Json{{"duplicate", to_json(*dup)}}};
            return {true, nullptr};
        });
        R.add_eval("L-ell-minimizer-unique", base, [&]() -> std::pair<bool, Json> {
            std::set<SerreWeight> taus;
            for (auto& sigma : D)
                for (auto& w : jh_inj_tilde(sigma, P)) taus.insert(w);
            for (auto& tau : taus) {
                if (!ell_rho(rho, tau, P)) continue;
                try {
                    argmin_sigma(rho, tau, P);
                } catch (const Unreachable&) {
                    return {false, Json{{"tau", to_json(tau)}}};
                }
            }
            return {true, nullptr};
        });
        R.add_eval("L-PD-set-relations", base, [&]() -> std::pair<bool, Json> {
            auto d1 = chars_D1(rho, P);
            if (payload) {
                Json lst = Json::array();
                for (auto& c : d1) lst.push_back(to_json(c));
                (*payload)["D1_chars"] = lst;
            }
            for (auto& chi : d1)
                for (int j = 0; j < P.f; ++j)
                    for (int dir : {-1, +1}) {
                        HChar cp = dir < 0 ? chi.mul(alpha_i(j, P).inv(P), P) : chi.mul(alpha_i(j, P), P);
                        if (std::find(d1.begin(), d1.end(), cp) == d1.end()) continue;
                        auto Jt = J_of_tau_chi_argmin(rho, chi, P);
                        auto Jtp = J_of_tau_chi_argmin(rho, cp, P);
                        int jm1 = P.cyc(j - 1);
                        bool ok;
                        if (dir < 0) {
                            auto u = Jt;
                            u.insert(jm1);
                            ok = !Jt.count(jm1) && u == Jtp;
                        } else {
                            auto u = Jtp;
                            u.insert(jm1);
                            ok = !Jtp.count(jm1) && u == Jt;
                        }
                        if (!ok) return {false, Json{{"chi", to_json(chi)}, {"j", j}, {"dir", dir}}};
                    }
            return {true, nullptr};
        });
        R.add_eval("R-onlyone-chi", base, [&]() -> std::pair<bool, Json> {
            auto d1 = chars_D1(rho, P);
            for (auto& chi : d1) {
                int n = 0;
                for (int j = 0; j < P.f; ++j)
                    for (int dir : {-1, +1}) {
                        HChar cp = dir < 0 ? chi.mul(alpha_i(j, P).inv(P), P) : chi.mul(alpha_i(j, P), P);
                        if (std::find(d1.begin(), d1.end(), cp) != d1.end()) ++n;
                    }
                if (n > 1) return {false, Json{{"chi", to_json(chi)}, {"neighbors", n}}};
            }
            return {true, nullptr};
        });
        R.add_eval("L-Jmax-consistency", base, [&]() -> std::pair<bool, Json> {
            for (auto& chi : chars_D1(rho, P))
                if (J_of_tau_chi_argmin(rho, chi, P) != J_of_tau_chi_jmax(rho, chi, P))
                    return {false, Json{{"chi", to_json(chi)}}};
            return {true, nullptr};
        });
        R.add_eval("T-tau-rho-consistency", base, [&]() -> std::pair<bool, Json> {
            auto rr = tau_rho_consistency(rho, P);
            if (!rr.applicable) return {true, nullptr};  // gate: nothing asserted
            Json inter = Json::array();
            for (auto& c : rr.intersection) inter.push_back(to_json(c));
            return {rr.pass(), Json{{"socle_matches", rr.socle_matches},
                                    {"chi_f_in", rr.chi_f_in},
                                    {"chi_f_s_out", rr.chi_f_s_out},
                                    {"intersection", inter}}};
        });
    }
}

void run_iwahori(const RunConfig& cfg, const Params& P, Runner& R, Json* payload) {
    HChar chi = cfg.chi ? HChar(cfg.chi->first, cfg.chi->second, P)
                        : char_of_weight(SerreWeight(std::vector<long>(P.f, 4), 0, P), P);
    Json base{{"p", P.p}, {"f", P.f}, {"chi", to_json(chi)}, {"op", cfg.op}};
    if (cfg.op == "wbar3") {
        auto prof = Wbar3_profile(chi, P);
        if (payload) (*payload)["profile"] = layers_to_json(prof);
        R.add_eval("L-barW-socle", base, [&] {
            long mult = 0;
            for (auto& c : prof.flatten())
                if (c == chi) ++mult;
            return std::make_pair(mult == 2 * P.f + 1 && prof.layers[0].size() == static_cast<size_t>(2 * P.f),
                                  Json{{"mult", mult}});
        });
    } else if (cfg.op == "theta") {
        SerreWeight tau = sigma_J(chi, {}, P);
        auto prof = theta_profile(tau, P);
        if (payload) (*payload)["profile"] = layers_to_json(prof);
        R.add_eval("P-Theta-twoparts", base, [&] {
            auto og = theta_ord_profile(tau, P);
            auto [tk1, ok1] = theta_K1_profiles(tau, P);
            auto lhs = multiset_union(as_multiset(prof.flatten()), as_multiset(ok1.flatten()));
            auto rhs = multiset_union(as_multiset(og.flatten()), as_multiset(tk1.flatten()));
            return std::make_pair(lhs == rhs, Json{{"tau", to_json(tau)}});
        });
    } else if (cfg.op == "tauj") {
        TauJSpec spec{cfg.jrho, chi};
        auto jh = tauJ_jh(spec, P);
        if (payload) {
            Json lst = Json::array();
            for (auto& c : jh) lst.push_back(to_json(c));
            (*payload)["jh"] = lst;
            Json socle = Json::array();
            for (auto& c : tauJ_socle(spec, P)) socle.push_back(to_json(c));
            (*payload)["socle"] = socle;
        }
        R.add_eval("L-tauJ-count", base, [&] {
            long J = static_cast<long>(spec.J.size());
            long want = 1;
            for (long k = 0; k < J; ++k) want *= 6;
            for (long k = 0; k < P.f - J; ++k) want *= 5;
            std::set<HChar> uniq(jh.begin(), jh.end());
            return std::make_pair(static_cast<long>(jh.size()) == want && uniq.size() == jh.size(),
                                  Json{{"got", jh.size()}, {"want", want}});
        });
    } else {
        throw ConfigError("unknown iwahori op: " + cfg.op);
    }
}

void run_koszul(const RunConfig& cfg, const Params& P, Runner& R, Json* payload) {
    std::vector<ComplexKind> kinds;
    if (cfg.kind.empty() || cfg.kind == "all")
        kinds = {ComplexKind::koszul_e, ComplexKind::koszul_f, ComplexKind::koszul_0,
                 ComplexKind::type_e,   ComplexKind::type_f,   ComplexKind::type_0};
    else
        kinds = {complex_kind_of(cfg.kind)};
    Json out = Json::array();
    for (auto k : kinds) {
        Json base{{"p", P.p}, {"kind", complex_kind_name(k)}, {"cutoff", cfg.cutoff}};
        auto C = build_complex(k, 0, P);
        R.add_eval("L-complex-" + complex_kind_name(k), base, [&]() -> std::pair<bool, Json> {
            if (!composites_vanish(C)) return {false, Json{{"reason", "d o d != 0"}}};
            if (!decorations_consistent(C)) return {false, Json{{"reason", "decorations"}}};
            auto rep = check_exact(C, cfg.cutoff);
            bool pole_ok = pole_criterion(C) ==
                           (k == ComplexKind::type_e || k == ComplexKind::type_f || k == ComplexKind::type_0 ? 0 : 1);
            bool min_ok = minimality_shift_check(C);
            Json degrees = Json::array();
            for (auto& d : rep.degrees)
                degrees.push_back(Json{{"n", d.n}, {"ranks", d.ranks}, {"homology_dims", d.homology}});
            Json entry{{"complex", complex_kind_name(k)},
                       {"degrees", degrees},
                       {"hilbert_check", pole_ok},
                       {"minimality", min_ok}};
            out.push_back(entry);
            if (!rep.internal_homology_vanishes) return {false, Json{{"reason", "internal homology"}}};
            return {pole_ok && min_ok, entry};
        });
    }
    if (payload) (*payload)["koszul"] = out;
}

void run_defring(const RunConfig& cfg, const Params& P, Runner& R) {
    const int f = P.f;
    auto Rle = le_ring(P.p, f);
    std::set<int> S_rho = cfg.srho;
    if (S_rho.empty())
        for (int i = 0; i < f; ++i) S_rho.insert(i);
    // J/I selection: explicit values target a single cell family, otherwise sweep
    bool targeted = !cfg.defring_J.empty() || !cfg.defring_I.empty();
    std::vector<std::set<int>> Js;
    if (targeted) {
        Js = {cfg.defring_J};
    } else {
        for (long jm = 0; jm < (1L << f); ++jm) {
            std::set<int> J;
            for (int i = 0; i < f; ++i)
                if ((jm >> i) & 1) J.insert(i);
            bool inside = true;
            for (int j : J)
                if (!S_rho.count(j)) inside = false;
            if (inside) Js.push_back(J);
        }
    }
    auto want = [&](const std::string& c) { return cfg.check.empty() || cfg.check == c; };
    Json base{{"p", P.p}, {"f", f}};
    if (want("divis")) R.add_eval("T-Le-divisibility", base, [&]() -> std::pair<bool, Json> {
        for (auto& J : Js) {
            SignedSet I0(cfg.defring_I.begin(), cfg.defring_I.end());
            for (int k = 0; k < f; ++k)
                for (int s : {0, +1, -1}) {
                    SignedSet Ip = I0;
                    if (s != 0) Ip[k] = s;
                    bool compat = true;
                    for (auto& [kk, ss] : I0)
                        if (Ip[kk] != ss) compat = false;
                    if (!compat) continue;
                    if (!le_divisibility(Rle, f, S_rho, J, I0, Ip))
                        return {false, Json{{"k", k}, {"s", s}}};
                }
        }
        return {true, nullptr};
    });
    if (want("tangent")) R.add_eval("C-tangent-dims", base, [&]() -> std::pair<bool, Json> {
        for (auto& J : Js) {
            auto g0 = le_relations(Rle, f, S_rho, J, {});
            if (tangent_dim(Rle, g0, le_pvar(f), 4) != 2 * f + 4) return {false, Json{{"which", 0}}};
            SignedSet IJ;
            for (int j : J) IJ[j] = +1;
            auto gJ = le_relations(Rle, f, S_rho, J, IJ);
            std::vector<TPoly> all = g0;
            all.insert(all.end(), gJ.begin(), gJ.end());
            if (tangent_dim(Rle, all, le_pvar(f), 4) != 2 * f + 4) return {false, Json{{"which", 1}}};
        }
        return {true, nullptr};
    });
    if (cfg.check.empty())
        R.add_eval("L-Uj-regular-params", base, [&] {
            return std::make_pair(regular_params_mod_primes(P.p, std::max(1, f)), Json(nullptr));
        });
    if (!want("cyclic")) return;
    R.add_eval("L-cyclicity", base, [&]() -> std::pair<bool, Json> {
        std::mt19937_64 rng(cfg.seed + 1);
        for (int it = 0; it < 40; ++it) {
            int nv = 2 + static_cast<int>(rng() % 2);
            TruncatedRing Rt(P.p, std::vector<std::string>(nv, "t"), 4);
            auto rnd_poly = [&]() {
                TPoly g(Rt);
                std::vector<int> m(nv, 0);
                int deg = 1 + static_cast<int>(rng() % 2);
                for (int d = 0; d < deg; ++d) m[rng() % nv]++;
                g.add_term(m, 1 + static_cast<long>(rng() % (P.p - 1)));
                return g;
            };
            std::vector<TPoly> I1 = {rnd_poly()}, I2 = {rnd_poly()};
            std::vector<TPoly> I0 = I1;
            I0.insert(I0.end(), I2.begin(), I2.end());
            if (rng() % 2) I0.push_back(rnd_poly());
            auto v = cyclicity_check(Rt, I0, I1, I2);
            if (v.cyclic != v.sum_equal) return {false, Json{{"iteration", it}}};
        }
        return {true, nullptr};
    });
}

}  // namespace

Report run_suite(const RunConfig& cfg) {
    Params P(cfg.p, cfg.f);  // throws ConfigError on bad input
    if (!cfg.r.empty() && static_cast<int>(cfg.r.size()) != cfg.f)
        throw ConfigError("r must have f entries");
    for (int j : cfg.jrho)
        if (j < 0 || j >= cfg.f) throw ConfigError("jrho indices must lie in [0,f)");
    if (cfg.suite != "weights" && cfg.suite != "d0" && cfg.suite != "iwahori" && cfg.suite != "koszul" &&
        cfg.suite != "defring" && cfg.suite != "all")
        throw ConfigError("unknown suite: " + cfg.suite);

    Report rep;
    rep.config = config_echo(cfg);
    Runner R{rep};
    Json payload;
    if (cfg.suite == "weights" || cfg.suite == "all") run_weights(cfg, P, R);
    if (cfg.suite == "d0" || cfg.suite == "all") run_d0(cfg, P, R, &payload);
    if (cfg.suite == "iwahori" || cfg.suite == "all") run_iwahori(cfg, P, R, &payload);
    if (cfg.suite == "koszul" || cfg.suite == "all") run_koszul(cfg, P, R, &payload);
    if (cfg.suite == "defring" || cfg.suite == "all") run_defring(cfg, P, R);
    if (!payload.is_null()) rep.config["payload"] = payload;
    return rep;
}

void emit(const Report& rep, const std::string& path, const std::string& format, bool with_timing) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ModplabError("cannot open output file: " + path);
    if (format == "json")
        os << rep.to_json(with_timing).dump(2) << "\n";
    else if (format == "csv")
        os << rep.to_csv(with_timing);
    else
        throw ConfigError("unknown format: " + format);
}

}  // namespace modplab
