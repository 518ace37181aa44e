#include "modplab/iwahori.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace modplab {

std::vector<HChar> ext_neighbors(const HChar& chi, const Params& P) {
    std::vector<HChar> out;
    for (int i = 0; i < P.f; ++i)
        for (int sign : {+1, -1}) {
            HChar c = sign == 1 ? chi.mul(alpha_i(i, P), P) : chi.mul(alpha_i(i, P).inv(P), P);
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    return out;
}

Layered<HChar> W_profile(const HChar& chi, int n, const Params& P) {
    if (n < 1 || n > 3) throw ConfigError("W_profile supports n in {1,2,3}");
    Layered<HChar> prof;
    if (n == 1) {
        prof.layers = {{chi}};
        return prof;
    }
    std::vector<HChar> mid;
    for (int i = 0; i < P.f; ++i)
        for (int sign : {+1, -1}) mid.push_back(chi.mul(sign == 1 ? alpha_i(i, P) : alpha_i(i, P).inv(P), P));
    if (n == 2) {
        prof.layers = {mid, {chi}};
        return prof;
    }
    // socle of W_{chi,3}
    std::vector<HChar> soc;
    for (int k = 0; k < 2 * P.f; ++k) soc.push_back(chi);
    for (int i = 0; i < P.f; ++i)
        for (int j = i; j < P.f; ++j) soc.push_back(chi.mul(alpha_i(i, P), P).mul(alpha_i(j, P), P));
    for (int i = 0; i < P.f; ++i)
        for (int j = i; j < P.f; ++j)
            soc.push_back(chi.mul(alpha_i(i, P).inv(P), P).mul(alpha_i(j, P).inv(P), P));
    for (int i = 0; i < P.f; ++i)
        for (int j = 0; j < P.f; ++j)
            if (i != j) soc.push_back(chi.mul(alpha_i(i, P), P).mul(alpha_i(j, P).inv(P), P));
    prof.layers = {soc, mid, {chi}};
    return prof;
}

Layered<HChar> Wbar3_profile(const HChar& chi, const Params& P) {
    Layered<HChar> prof;
    std::vector<HChar> soc(2 * P.f, chi);
    std::vector<HChar> mid;
    for (int i = 0; i < P.f; ++i)
        for (int sign : {+1, -1}) mid.push_back(chi.mul(sign == 1 ? alpha_i(i, P) : alpha_i(i, P).inv(P), P));
    prof.layers = {soc, mid, {chi}};
    return prof;
}

FTuple lambda_P(const std::set<int>& J, const Params& P) {
    FTuple r;
    r.t.resize(P.f);
    for (int i = 0; i < P.f; ++i) {
        bool in = J.count(i) > 0, pred = J.count(P.cyc(i - 1)) > 0;
        if (!in)
            r.t[i] = pred ? term_x_plus(-1) : term_x();
        else
            r.t[i] = pred ? term_c_minus_x(P.p - 1) : term_c_minus_x(P.p - 2);
    }
    return r;
}

std::set<int> J_of_lambda_P(const FTuple& lambda, const Params& P) {
    std::set<int> J;
    for (int i = 0; i < P.f; ++i)
        if (lambda.t[i].sign == -1) J.insert(i);
    return J;
}

SerreWeight sigma_empty(const HChar& chi, const Params& P) {
    auto d = char_digits(chi, P);
    std::vector<long> rr(P.f);
    long r = P.mod_qm1(chi.a - chi.b);
    for (int i = 0; i < P.f; ++i) rr[i] = P.p - 1 - d[i];
    return SerreWeight(rr, r + chi.b, P);
}

SerreWeight sigma_J(const HChar& chi, const std::set<int>& J, const Params& P) {
    auto w = evaluate(lambda_P(J, P), sigma_empty(chi, P), P);
    if (!w) throw NotGeneric("sigma_J undefined; chi not generic enough");
    return *w;
}

std::vector<SerreWeight> jh_ind(const HChar& chi, const Params& P) {
    std::vector<SerreWeight> out;
    for (long mask = 0; mask < (1L << P.f); ++mask) {
        std::set<int> J;
        for (int i = 0; i < P.f; ++i)
            if ((mask >> i) & 1) J.insert(i);
        out.push_back(sigma_J(chi, J, P));
    }
    return out;
}

std::optional<std::set<int>> find_J(const HChar& chi, const SerreWeight& tau, const Params& P) {
    for (long mask = 0; mask < (1L << P.f); ++mask) {
        std::set<int> J;
        for (int i = 0; i < P.f; ++i)
            if ((mask >> i) & 1) J.insert(i);
        if (sigma_J(chi, J, P) == tau) return J;
    }
    return std::nullopt;
}

bool ext_occurrence(const HChar& chi, const HChar& chi_p, const SerreWeight& tau, const SerreWeight& tau_p,
                    const Params& P) {
    // determine j and the direction
    std::optional<int> j;
    int dir = 0;
    for (int i = 0; i < P.f; ++i) {
        if (chi_p == chi.mul(alpha_i(i, P).inv(P), P)) {
            j = i;
            dir = -1;
            break;
        }
        if (chi_p == chi.mul(alpha_i(i, P), P)) {
            j = i;
            dir = +1;
            break;
        }
    }
    if (!j) throw ConfigError("chi' is not an extension neighbor of chi");
    auto Jt = find_J(chi, tau, P);
    auto Jtp = find_J(chi_p, tau_p, P);
    if (!Jt || !Jtp) throw TauNotInInjective("tau/tau' not factors of the stated inductions");
    int jm1 = P.cyc(*j - 1);
    if (dir == -1) {
        if (Jt->count(jm1)) return false;
        auto u = *Jt;
        u.insert(jm1);
        return u == *Jtp;
    }
    if (Jtp->count(jm1)) return false;
    auto u = *Jtp;
    u.insert(jm1);
    return u == *Jt;
}

Layered<SerreWeight> theta_profile(const SerreWeight& tau, const Params& P) {
    Layered<SerreWeight> prof;
    prof.layers = {std::vector<SerreWeight>(2 * P.f, tau), E_of(tau, P), {tau}};
    return prof;
}

Layered<SerreWeight> theta_ord_profile(const SerreWeight& tau, const Params& P) {
    std::vector<SerreWeight> mid;
    for (int i = 0; i < P.f; ++i) {
        auto w = evaluate(mu_op(i, -1, P), tau, P);
        if (!w) throw NotGeneric("mu_i^-(tau) undefined");
        mid.push_back(*w);
    }
    Layered<SerreWeight> prof;
    prof.layers = {std::vector<SerreWeight>(P.f, tau), mid, {tau}};
    return prof;
}

std::pair<Layered<SerreWeight>, Layered<SerreWeight>> theta_K1_profiles(const SerreWeight& tau, const Params& P) {
    Layered<SerreWeight> theta_k1;
    theta_k1.layers = {std::vector<SerreWeight>(P.f, tau), E_of(tau, P), {tau}};
    std::vector<SerreWeight> mid;
    for (int i = 0; i < P.f; ++i) {
        auto w = evaluate(mu_op(i, -1, P), tau, P);
        if (!w) throw NotGeneric("mu_i^-(tau) undefined");
        mid.push_back(*w);
    }
    Layered<SerreWeight> ord_k1;
    ord_k1.layers = {mid, {tau}};
    return {theta_k1, ord_k1};
}

// enumerate the b-exponent boxes of JH(tau_J)
static void tauJ_boxes(const TauJSpec& spec, const Params& P,
                       const std::function<void(const std::set<int>&, const std::vector<long>&)>& fn) {
    std::vector<int> Jidx(spec.J.begin(), spec.J.end());
    for (long mask = 0; mask < (1L << Jidx.size()); ++mask) {
        std::set<int> J;
        for (size_t k = 0; k < Jidx.size(); ++k)
            if ((mask >> k) & 1) J.insert(Jidx[k]);
        std::vector<long> lo(P.f), hi(P.f);
        for (int i = 0; i < P.f; ++i) {
            if (!spec.J.count(i)) {
                lo[i] = -2;
                hi[i] = 2;
            } else if (!J.count(i)) {
                lo[i] = 0;
                hi[i] = 2;
            } else {
                lo[i] = -3;
                hi[i] = -1;
            }
        }
        std::vector<long> b(P.f);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == P.f) {
                fn(J, b);
                return;
            }
            for (long v = lo[i]; v <= hi[i]; ++v) {
                b[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
}

std::vector<HChar> tauJ_jh(const TauJSpec& spec, const Params& P) {
    std::vector<HChar> out;
    tauJ_boxes(spec, P, [&](const std::set<int>&, const std::vector<long>& b) {
        out.push_back(spec.chi.mul(alpha_pow(b, P), P));
    });
    return out;
}

std::vector<HChar> tauJ_socle(const TauJSpec& spec, const Params& P) {
    std::vector<HChar> out;
    std::vector<int> Jidx(spec.J.begin(), spec.J.end());
    for (long mask = 0; mask < (1L << Jidx.size()); ++mask) {
        std::vector<long> b(P.f, 0);
        for (size_t k = 0; k < Jidx.size(); ++k)
            if ((mask >> k) & 1) b[Jidx[k]] = -1;
        out.push_back(spec.chi.mul(alpha_pow(b, P), P));
    }
    return out;
}

std::vector<HChar> tauJ_m2(const TauJSpec& spec, const Params& P) {
    std::vector<HChar> out;
    tauJ_boxes(spec, P, [&](const std::set<int>& J, const std::vector<long>& b) {
        int extremal = 0;
        for (int i = 0; i < P.f; ++i) {
            if (!J.count(i)) {
                if (std::abs(b[i]) > 1) return;
                if (std::abs(b[i]) == 1) ++extremal;
            } else {
                if (b[i] < -2 || b[i] > -1) return;
                if (b[i] == -2) ++extremal;
            }
        }
        if (extremal > 1) return;
        out.push_back(spec.chi.mul(alpha_pow(b, P), P));
    });
    return out;
}

HChar chi0s(const RhoData& rho, const Params& P) {
    long r = 0;
    for (int i = 0; i < P.f; ++i) r += P.ppow(i) * rho.r[i];
    return HChar(0, r, P);
}

TauJSpec tau_rho_spec(const RhoData& rho, const Params& P) { return TauJSpec{rho.J_rho, chi0s(rho, P)}; }

TauRhoReport tau_rho_consistency(const RhoData& rho, const Params& P) {
    TauRhoReport rep;
    if (!rho.strongly_generic(P) || rho.split) return rep;
    rep.applicable = true;
    auto spec = tau_rho_spec(rho, P);
    auto jh = tauJ_jh(spec, P);
    auto soc = tauJ_socle(spec, P);
    auto d1 = chars_D1(rho, P);
    std::vector<HChar> inter;
    for (auto& c : jh)
        if (std::find(d1.begin(), d1.end(), c) != d1.end() &&
            std::find(inter.begin(), inter.end(), c) == inter.end())
            inter.push_back(c);
    rep.intersection = inter;
    std::sort(inter.begin(), inter.end());
    std::sort(soc.begin(), soc.end());
    rep.socle_matches = inter == soc;
    std::vector<long> ones(P.f, -1);
    HChar chi_f = spec.chi.mul(alpha_pow(ones, P), P);
    rep.chi_f_in = std::find(jh.begin(), jh.end(), chi_f) != jh.end();
    rep.chi_f_s_out = std::find(jh.begin(), jh.end(), chi_f.sconj(P)) == jh.end();
    return rep;
}

SerreWeight tau_of_chi(const RhoData& rho, const HChar& chi, const Params& P) {
    // the cosocle of Ind_I^K chi lies in D_{0,tau}; tau is the ell-minimizer
    std::set<int> all;
    for (int i = 0; i < P.f; ++i) all.insert(i);
    SerreWeight cosoc = sigma_J(chi, all, P);
    return argmin_sigma(rho, cosoc, P);
}

std::set<int> J_of_tau_chi_argmin(const RhoData& rho, const HChar& chi, const Params& P) {
    auto tau = tau_of_chi(rho, chi, P);
    auto J = find_J(chi, tau, P);
    if (!J) throw Unreachable("tau_of_chi does not occur in Ind chi");
    return *J;
}

std::set<int> J_of_tau_chi_jmax(const RhoData& rho, const HChar& chi, const Params& P) {
    // locate the PD tuple whose attached character is chi^s, then apply J^max
    for (auto& lam : enumerate_PD(rho, P)) {
        if (pd_char(lam, rho, P) == chi.sconj(P)) return Jmax(lam, rho.J_rho, P);
    }
    throw ConfigError("chi^s is not a D_1 character");
}

}  // namespace modplab

namespace modplab {

long n_chi(const HChar& chi, const RhoData& rho, const Params& P) {
    auto D = D_of_rho(rho, P);
    long n = 0;
    for (auto& w : jh_ind(chi, P))
        if (std::find(D.begin(), D.end(), w) != D.end()) ++n;
    return n;
}

}  // namespace modplab
