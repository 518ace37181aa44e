#pragma once

#include <optional>
#include <vector>

#include "modplab/ftuple.hpp"
#include "modplab/params.hpp"

namespace modplab {

// (r_0,...,r_{f-1}) (x) det^twist, canonical on construction: 0 <= r_i <= p-1
// and twist reduced mod q-1, so equality is structural.
struct SerreWeight {
    std::vector<long> r;
    long twist;

    SerreWeight(std::vector<long> r_, long twist_, const Params& P) : r(std::move(r_)), twist(P.mod_qm1(twist_)) {
        for (long ri : r)
            if (ri < 0 || ri > P.p - 1) throw ConfigError("Serre weight entry out of [0,p-1]");
    }
    long dim() const {
        long d = 1;
        for (long ri : r) d *= ri + 1;
        return d;
    }
    bool operator==(const SerreWeight& o) const = default;
    bool operator<(const SerreWeight& o) const {
        if (r != o.r) return r < o.r;
        return twist < o.twist;
    }
};

inline bool weights_isomorphic(const SerreWeight& a, const SerreWeight& b) { return a == b; }

inline bool n_generic(const SerreWeight& s, long n, const Params& P) {
    for (long ri : s.r)
        if (ri < n || ri > P.p - 2 - n) return false;
    return true;
}

// Character of H by the exponents (a,b) of the two diagonal entries, mod q-1.
struct HChar {
    long a, b;

    HChar(long a_, long b_, const Params& P) : a(P.mod_qm1(a_)), b(P.mod_qm1(b_)) {}
    HChar mul(const HChar& o, const Params& P) const { return HChar(a + o.a, b + o.b, P); }
    HChar inv(const Params& P) const { return HChar(-a, -b, P); }
    HChar sconj(const Params& P) const { return HChar(b, a, P); }
    bool operator==(const HChar& o) const = default;
    bool operator<(const HChar& o) const { return a != o.a ? a < o.a : b < o.b; }
};

inline HChar alpha_i(int i, const Params& P) { return HChar(P.ppow(P.cyc(i)), -P.ppow(P.cyc(i)), P); }

inline HChar alpha_pow(const std::vector<long>& e, const Params& P) {
    long a = 0;
    for (int i = 0; i < P.f; ++i) a += e[i] * P.ppow(i);
    return HChar(a, -a, P);
}

// chi_sigma: the character of H on the I_1-invariants of sigma
inline HChar char_of_weight(const SerreWeight& s, const Params& P) {
    long rsum = 0;
    for (int i = 0; i < P.f; ++i) rsum += P.ppow(i) * s.r[i];
    return HChar(rsum + s.twist, s.twist, P);
}

// digits of a-b in base p, length f; defined when a != b as characters would
// require genericity, here we just expand the canonical representative
inline std::vector<long> char_digits(const HChar& c, const Params& P) {
    long r = P.mod_qm1(c.a - c.b);
    std::vector<long> d(P.f);
    for (int i = 0; i < P.f; ++i) {
        d[i] = r % P.p;
        r /= P.p;
    }
    return d;
}

inline bool char_n_generic(const HChar& c, long n, const Params& P) {
    auto d = char_digits(c, P);
    for (long di : d)
        if (di < n || di > P.p - 2 - n) return false;
    return true;
}

// lambda(sigma) = (lambda_i(r_i)) (x) det^{e(lambda)(r)} eta, when defined
inline std::optional<SerreWeight> evaluate(const FTuple& lambda, const SerreWeight& sigma, const Params& P) {
    std::vector<long> rr(P.f);
    for (int i = 0; i < P.f; ++i) {
        rr[i] = lambda.t[i].eval(sigma.r[i]);
        if (rr[i] < 0 || rr[i] > P.p - 1) return std::nullopt;
    }
    AffineForm e = e_of(lambda, P);
    long tw = e.eval(sigma.r) + sigma.twist;
    return SerreWeight(std::move(rr), tw, P);
}

}  // namespace modplab
