#include "modplab/rho.hpp"

#include <algorithm>
#include <map>

namespace modplab {

AffineTerm rd_cell(bool own_up, bool pred_up, long p) {
    if (!own_up) return pred_up ? term_x_plus(1) : term_x();
    return pred_up ? term_c_minus_x(p - 3) : term_c_minus_x(p - 2);
}

std::vector<FTuple> enumerate_RD(const Params& P) {
    std::vector<FTuple> out;
    for (long mask = 0; mask < (1L << P.f); ++mask) {
        FTuple lam;
        lam.t.resize(P.f);
        for (int i = 0; i < P.f; ++i) {
            bool own = (mask >> i) & 1;
            bool pred = (mask >> P.cyc(i - 1)) & 1;
            lam.t[i] = rd_cell(own, pred, P.p);
        }
        out.push_back(lam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool rd_passes_filter(const FTuple& lambda, const std::set<int>& J_rho, const Params& P) {
    for (int j = 0; j < P.f; ++j) {
        const AffineTerm& a = lambda.t[j];
        if (a == term_c_minus_x(P.p - 3) || a == term_x_plus(1))
            if (!J_rho.count(j)) return false;
    }
    return true;
}

std::vector<SerreWeight> D_of_rho_ss(const RhoData& rho, const Params& P) {
    if (!rho.generic(P)) throw NotGeneric("rho is not generic");
    SerreWeight s0 = rho.sigma0(P);
    std::vector<SerreWeight> out;
    for (auto& lam : enumerate_RD(P)) {
        auto w = evaluate(lam, s0, P);
        if (!w) throw NotGeneric("RD evaluation undefined (should not happen for generic rho)");
        out.push_back(*w);
    }
    return out;
}

std::vector<SerreWeight> D_of_rho(const RhoData& rho, const Params& P) {
    if (rho.split) return D_of_rho_ss(rho, P);
    if (!rho.valid(P)) throw NotGeneric("rho is not generic (or J_rho not proper for nonsplit rho)");
    SerreWeight s0 = rho.sigma0(P);
    std::vector<SerreWeight> out;
    for (auto& lam : enumerate_RD(P)) {
        if (!rd_passes_filter(lam, rho.J_rho, P)) continue;
        auto w = evaluate(lam, s0, P);
        if (!w) throw NotGeneric("RD evaluation undefined");
        out.push_back(*w);
    }
    return out;
}

bool in_PD(const FTuple& lambda, const std::set<int>& J_rho, const Params& P) {
    const long p = P.p;
    auto lower = [&](const AffineTerm& a) {
        return a.sign == 1 && (a.offset == 0 || a.offset == 1 || a.offset == 2);
    };
    auto upper = [&](const AffineTerm& a) {
        return a.sign == -1 && (a.offset == p - 1 || a.offset == p - 2 || a.offset == p - 3);
    };
    for (int i = 0; i < P.f; ++i) {
        const AffineTerm& a = lambda.t[i];
        const AffineTerm& b = lambda.at(i + 1);
        if (!lower(a) && !upper(a)) return false;
        if (lower(a)) {
            if (!(b == term_x() || b == term_x_plus(2) || b == term_c_minus_x(p - 2))) return false;
        } else {
            if (!(b == term_c_minus_x(p - 1) || b == term_c_minus_x(p - 3) || b == term_x_plus(1))) return false;
        }
        if (a == term_c_minus_x(p - 3) || a == term_x_plus(2))
            if (!J_rho.count(i)) return false;
    }
    return true;
}

std::vector<FTuple> enumerate_PD(const RhoData& rho, const Params& P) {
    if (!rho.valid(P)) throw NotGeneric("rho is not generic (or J_rho not proper for nonsplit rho)");
    const long p = P.p;
    std::vector<AffineTerm> cand = {term_x(),
                                    term_x_plus(1),
                                    term_x_plus(2),
                                    term_c_minus_x(p - 3),
                                    term_c_minus_x(p - 2),
                                    term_c_minus_x(p - 1)};
    std::vector<FTuple> out;
    FTuple cur;
    cur.t.resize(P.f);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == P.f) {
            if (in_PD(cur, rho.J_rho, P)) out.push_back(cur);
            return;
        }
        for (auto& a : cand) {
            cur.t[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

SerreWeight pd_weight(const FTuple& lambda, const RhoData& rho, const Params& P) {
    auto w = evaluate(lambda, rho.sigma0(P), P);
    if (!w) throw NotGeneric("PD evaluation undefined");
    return *w;
}

HChar pd_char(const FTuple& lambda, const RhoData& rho, const Params& P) {
    return char_of_weight(pd_weight(lambda, rho, P), P);
}

std::vector<HChar> chars_D1(const RhoData& rho, const Params& P) {
    std::vector<HChar> out;
    for (auto& lam : enumerate_PD(rho, P)) out.push_back(pd_char(lam, rho, P));
    return out;
}

std::set<int> Jmax(const FTuple& lambda, const std::set<int>& J_rho, const Params& P) {
    std::set<int> A;
    for (int i = 0; i < P.f; ++i) {
        const AffineTerm& a = lambda.t[i];
        if (a == term_c_minus_x(P.p - 3) || a == term_x()) continue;
        if (a == term_c_minus_x(P.p - 2) && !J_rho.count(i)) continue;
        A.insert(i);
    }
    std::set<int> J;
    for (int i : A) J.insert(P.cyc(i - 1));
    return J;
}

bool is_dagger_tuple(const FTuple& lambda, const Params& P) {
    for (auto& a : lambda.t) {
        bool ok = a == term_x() || a == term_x_plus(2) || a == term_c_minus_x(P.p - 1) ||
                  a == term_c_minus_x(P.p - 3);
        if (!ok) return false;
    }
    return true;
}

bool is_dagger(const RhoData& rho, const HChar& chi, const Params& P) {
    for (auto& lam : enumerate_PD(rho, P))
        if (pd_char(lam, rho, P) == chi) return is_dagger_tuple(lam, P);
    throw ConfigError("chi is not a D_1 character");
}

std::vector<FTuple> enumerate_PD_dagger(const RhoData& rho, const Params& P) {
    std::vector<FTuple> out;
    for (auto& lam : enumerate_PD(rho, P))
        if (is_dagger_tuple(lam, P)) out.push_back(lam);
    return out;
}

std::vector<SerreWeight> jh_D0_sigma(const RhoData& rho, const SerreWeight& sigma, bool tilde, const Params& P) {
    auto D = D_of_rho(rho, P);
    if (std::find(D.begin(), D.end(), sigma) == D.end()) throw NotInD("sigma not in D(rho)");
    std::vector<SerreWeight> forbidden;
    for (auto& w : D)
        if (!(w == sigma)) forbidden.push_back(w);

    auto tuples = enumerate_tilde(P);
    // cache evaluations; drop undefined ones
    std::vector<std::pair<TildeTuple, SerreWeight>> evals;
    for (auto& t : tuples) {
        if (!tilde && t.tagged) continue;
        try {
            evals.push_back({t, tilde_eval(t, sigma, P)});
        } catch (const TauNotInInjective&) {
        }
    }
    auto bad = [&](const TildeTuple& t) {
        for (auto& [u, w] : evals)
            if (tilde_leq(u, t, P) && std::find(forbidden.begin(), forbidden.end(), w) != forbidden.end())
                return true;
        return false;
    };
    std::vector<SerreWeight> out;
    for (auto& [t, w] : evals) {
        if (bad(t)) continue;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

std::optional<int> ell_rho(const RhoData& rho, const SerreWeight& tau, const Params& P) {
    std::optional<int> best;
    for (auto& s : D_of_rho(rho, P)) {
        auto l = loewy_length(s, tau, P);
        if (l && (!best || *l < *best)) best = *l;
    }
    return best;
}

SerreWeight argmin_sigma(const RhoData& rho, const SerreWeight& tau, const Params& P) {
    std::optional<int> best;
    std::optional<SerreWeight> arg;
    int nbest = 0;
    for (auto& s : D_of_rho(rho, P)) {
        auto l = loewy_length(s, tau, P);
        if (!l) continue;
        if (!best || *l < *best) {
            best = *l;
            arg = s;
            nbest = 1;
        } else if (*l == *best) {
            ++nbest;
        }
    }
    if (!arg) throw Unreachable("ell(rho,tau) is infinite");
    if (nbest > 1) throw Unreachable("minimizer not unique (hypothesis violated)");
    return *arg;
}

}  // namespace modplab
