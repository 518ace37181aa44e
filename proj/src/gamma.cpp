#include "modplab/gamma.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace modplab {

// membership rules of I(x_0,...,x_{f-1}); for f=1 the listed triple, for f>1
// the chain rules (i)-(iii) with the cyclic convention
bool in_I(const FTuple& lambda, const Params& P) {
    const long p = P.p;
    const int f = P.f;
    auto lower = [&](const AffineTerm& a) { return a.sign == 1 && (a.offset == 0 || a.offset == 1 || a.offset == -1); };
    auto upper = [&](const AffineTerm& a) {
        return a.sign == -1 && (a.offset == p - 2 || a.offset == p - 1 || a.offset == p - 3);
    };
    if (f == 1) {
        const AffineTerm& a = lambda.t[0];
        return a == term_x() || a == term_c_minus_x(p - 1) || a == term_c_minus_x(p - 3);
    }
    for (int i = 0; i < f; ++i) {
        const AffineTerm& a = lambda.t[i];
        const AffineTerm& b = lambda.at(i + 1);
        if (!lower(a) && !upper(a)) return false;
        if (lower(a)) {
            if (!(b == term_x() || b == term_c_minus_x(p - 2))) return false;
        } else {
            if (!term_in_S(b, p)) return false;
        }
    }
    return true;
}

std::vector<FTuple> enumerate_I(const Params& P) {
    static std::mutex mtx;
    static std::map<std::pair<long, int>, std::vector<FTuple>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({P.p, P.f});
        if (it != cache.end()) return it->second;
    }
    const long p = P.p;
    std::vector<AffineTerm> cand = {term_x(),
                                    term_x_plus(1),
                                    term_x_plus(-1),
                                    term_c_minus_x(p - 2),
                                    term_c_minus_x(p - 1),
                                    term_c_minus_x(p - 3)};
    std::vector<FTuple> out;
    FTuple cur;
    cur.t.resize(P.f);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == P.f) {
            if (in_I(cur, P)) out.push_back(cur);
            return;
        }
        for (auto& a : cand) {
            cur.t[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(mtx);
    cache[{P.p, P.f}] = out;
    return out;
}

FTuple mu_op(int i, int sign, const Params& P) {
    i = P.cyc(i);
    FTuple r = identity_tuple(P.f);
    if (P.f == 1) {
        r.t[0] = sign == 1 ? term_c_minus_x(P.p - 3) : term_c_minus_x(P.p - 1);
        return r;
    }
    r.at(i) = term_x_plus(sign);
    r.at(i - 1) = term_c_minus_x(P.p - 2);
    return r;
}

FTuple delta_op(int i, int sign, const Params& P) {
    i = P.cyc(i);
    FTuple r = identity_tuple(P.f);
    r.at(i) = term_x_plus(2 * sign);
    return r;
}

static std::vector<SerreWeight> eval_family(const SerreWeight& sigma, const Params& P,
                                            FTuple (*op)(int, int, const Params&)) {
    std::vector<SerreWeight> out;
    for (int i = 0; i < P.f; ++i)
        for (int sign : {+1, -1}) {
            auto w = evaluate(op(i, sign, P), sigma, P);
            if (w) out.push_back(*w);
        }
    return out;
}

std::vector<SerreWeight> Delta_of(const SerreWeight& sigma, const Params& P) {
    return eval_family(sigma, P, &delta_op);
}

std::vector<SerreWeight> E_of(const SerreWeight& sigma, const Params& P) { return eval_family(sigma, P, &mu_op); }

std::optional<FTuple> find_lambda(const SerreWeight& sigma, const SerreWeight& tau, const Params& P) {
    for (auto& lam : enumerate_I(P)) {
        auto w = evaluate(lam, sigma, P);
        if (w && *w == tau) return lam;
    }
    return std::nullopt;
}

std::vector<SerreWeight> jh_I_gamma(const SerreWeight& sigma, const SerreWeight& tau, const Params& P) {
    auto lam = find_lambda(sigma, tau, P);
    if (!lam) throw TauNotInInjective("tau is not a Jordan-Holder factor of Inj_Gamma(sigma)");
    std::vector<SerreWeight> out;
    for (auto& mu : enumerate_I(P)) {
        if (!leq(mu, *lam, P)) continue;
        auto w = evaluate(mu, sigma, P);
        if (w) out.push_back(*w);
    }
    return out;
}

bool newweight_cond(const FTuple& lambda, int i, int sign, const Params& P) {
    const AffineTerm& a = lambda.at(i);
    const long p = P.p;
    return a == term_x() || a == term_x_plus(sign) || a == term_c_minus_x(p - 2) ||
           a == term_c_minus_x(p - 2 - sign);
}

FTuple lambda_shriek(const FTuple& lambda, int i, int sign, const Params& P) {
    if (!newweight_cond(lambda, i, sign, P)) throw NotNewWeight("lambda fails the newweight condition at (i,*)");
    i = P.cyc(i);
    auto S = S_of(lambda, P);
    if (S.count(i)) return lambda;
    // the unique element of I with support S(lambda) u {i}, compatible with
    // lambda and still satisfying the newweight condition at i
    S.insert(i);
    for (auto& cand : enumerate_I(P)) {
        if (S_of(cand, P) != S) continue;
        if (!is_compatible(cand, lambda, P)) continue;
        if (!newweight_cond(cand, i, sign, P)) continue;
        return cand;
    }
    throw NotNewWeight("no lambda_! found (unexpected)");
}

bool tilde_leq(const TildeTuple& a, const TildeTuple& b, const Params& P) {
    if (a.tagged && b.tagged) {
        if (a.tag_i != b.tag_i || a.tag_sign != b.tag_sign) return false;
        return leq(a.lambda, b.lambda, P);
    }
    if (!a.tagged && !b.tagged) return leq(a.lambda, b.lambda, P);
    if (!a.tagged && b.tagged) {
        FTuple shr = lambda_shriek(b.lambda, b.tag_i, b.tag_sign, P);
        return leq(a.lambda, shr, P);
    }
    return false;
}

int tilde_length(const TildeTuple& t, const Params& P) {
    int s = static_cast<int>(S_of(t.lambda, P).size());
    return t.tagged ? s + 2 : s;
}

SerreWeight tilde_eval(const TildeTuple& t, const SerreWeight& sigma, const Params& P) {
    if (!t.tagged) {
        auto w = evaluate(t.lambda, sigma, P);
        if (!w) throw TauNotInInjective("undefined evaluation");
        return *w;
    }
    auto d = evaluate(delta_op(t.tag_i, t.tag_sign, P), sigma, P);
    if (!d) throw TauNotInInjective("delta_i^*(sigma) undefined");
    auto w = evaluate(t.lambda, *d, P);
    if (!w) throw TauNotInInjective("undefined evaluation");
    return *w;
}

std::vector<TildeTuple> enumerate_tilde(const Params& P) {
    static std::mutex mtx;
    static std::map<std::pair<long, int>, std::vector<TildeTuple>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({P.p, P.f});
        if (it != cache.end()) return it->second;
    }
    std::vector<TildeTuple> out;
    auto I = enumerate_I(P);
    for (auto& lam : I) out.push_back(TildeTuple{lam, false, 0, +1});
    for (auto& lam : I)
        for (int i = 0; i < P.f; ++i)
            for (int sign : {+1, -1})
                if (newweight_cond(lam, i, sign, P)) out.push_back(TildeTuple{lam, true, i, sign});
    std::lock_guard<std::mutex> lock(mtx);
    cache[{P.p, P.f}] = out;
    return out;
}

bool is_new(const SerreWeight&, const FTuple& lambda, int i, int sign, const Params& P) {
    return newweight_cond(lambda, i, sign, P);
}

std::pair<int, int> unique_delta(const SerreWeight& sigma, const SerreWeight& tau, const Params& P) {
    std::optional<std::pair<int, int>> found;
    for (int i = 0; i < P.f; ++i)
        for (int sign : {+1, -1}) {
            auto dw = evaluate(delta_op(i, sign, P), sigma, P);
            if (!dw) continue;
            auto lam = find_lambda(*dw, tau, P);
            if (!lam) continue;
            if (!newweight_cond(*lam, i, sign, P)) continue;  // old in the tilde injective
            if (found && *found != std::make_pair(i, sign))
                throw NotNewWeight("delta not unique (non-generic input)");
            found = {i, sign};
        }
    if (!found) throw NotNewWeight("tau is not a new weight for sigma");
    return *found;
}

std::optional<TildeTuple> find_tilde(const SerreWeight& sigma, const SerreWeight& tau, const Params& P) {
    for (auto& t : enumerate_tilde(P)) {
        bool defined = true;
        SerreWeight w = sigma;
        try {
            w = tilde_eval(t, sigma, P);
        } catch (const TauNotInInjective&) {
            defined = false;
        }
        if (defined && w == tau) return t;
    }
    return std::nullopt;
}

bool tilde_exceptional(const SerreWeight& sigma, const TildeTuple& t, const Params& P) {
    if (P.f != 1 || sigma.dim() != 3) return false;
    return t.tagged && t.tag_sign == -1 && t.lambda == mu_op(0, -1, P);
}

std::vector<SerreWeight> jh_inj_tilde(const SerreWeight& sigma, const Params& P) {
    std::vector<SerreWeight> out;
    for (auto& t : enumerate_tilde(P)) {
        try {
            SerreWeight w = tilde_eval(t, sigma, P);
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        } catch (const TauNotInInjective&) {
        }
    }
    return out;
}

Layered<SerreWeight> socle_filtration_I_tilde(const SerreWeight& sigma, const TildeTuple& t, const Params& P) {
    bool except_case = tilde_exceptional(sigma, t, P);
    int len = except_case ? 2 : tilde_length(t, P);
    Layered<SerreWeight> prof;
    prof.layers.assign(len + 1, {});
    for (auto& u : enumerate_tilde(P)) {
        if (!tilde_leq(u, t, P)) continue;
        if (except_case && u.tagged && u.lambda == identity_tuple(1)) continue;  // forget delta_0^-(sigma)
        SerreWeight w = sigma;
        try {
            w = tilde_eval(u, sigma, P);
        } catch (const TauNotInInjective&) {
            continue;
        }
        int k = (except_case && u == t) ? 2 : tilde_length(u, P);
        prof.layers[k].push_back(w);
    }
    while (!prof.layers.empty() && prof.layers.back().empty()) prof.layers.pop_back();
    for (auto& l : prof.layers) std::sort(l.begin(), l.end());
    return prof;
}

std::optional<int> loewy_length(const SerreWeight& sigma, const SerreWeight& tau, const Params& P) {
    auto t = find_tilde(sigma, tau, P);
    if (!t) return std::nullopt;
    if (tilde_exceptional(sigma, *t, P)) return 3;
    return tilde_length(*t, P) + 1;
}

std::vector<SerreWeight> h1_tensor_jh(const SerreWeight& sigma, const Params& P) {
    for (long ri : sigma.r)
        if (ri > P.p - 3) throw NotGeneric("h1_tensor_jh needs 0 <= r_i <= p-3");
    std::vector<SerreWeight> out;
    for (int k = 0; k < P.f; ++k) out.push_back(sigma);
    auto d = Delta_of(sigma, P);
    out.insert(out.end(), d.begin(), d.end());
    return out;
}

FTuple meet_on_subset(const FTuple& a, const FTuple& b, const std::set<int>& S2, const Params& P) {
    auto Sa = S_of(a, P), Sb = S_of(b, P);
    for (int i : S2) {
        if (!Sa.count(i) || !Sb.count(i)) throw IncompatibleAt("S'' not inside S(lambda) n S(lambda')");
        if (!compatible_at(a, b, i, P)) throw IncompatibleAt("inputs incompatible at an index of S''");
    }
    for (auto& cand : enumerate_I(P)) {
        if (S_of(cand, P) != S2) continue;
        bool ok = true;
        for (int i : S2)
            if (!compatible_at(cand, a, i, P)) ok = false;
        if (ok) return cand;
    }
    throw IncompatibleAt("no meet found (unexpected)");
}

}  // namespace modplab
