#pragma once

#include <optional>
#include <set>
#include <vector>

#include "modplab/params.hpp"

namespace modplab {

// The function offset + sign*x. Composition and formal inversion are exact.
struct AffineTerm {
    int sign;     // +1 or -1
    long offset;  // integer offset

    long eval(long x) const { return offset + sign * x; }

    // this(other(x))
    AffineTerm compose(const AffineTerm& other) const {
        return AffineTerm{sign * other.sign, offset + sign * other.offset};
    }
    AffineTerm inverse() const {
        if (sign == 1) return AffineTerm{1, -offset};
        return *this;  // c - x is an involution
    }
    bool operator==(const AffineTerm& o) const = default;
    bool operator<(const AffineTerm& o) const {
        if (sign != o.sign) return sign < o.sign;
        return offset < o.offset;
    }
};

inline AffineTerm term_x() { return {1, 0}; }
inline AffineTerm term_x_plus(long c) { return {1, c}; }
inline AffineTerm term_c_minus_x(long c) { return {-1, c}; }

// Length-f vector of affine terms, indexed cyclically.
struct FTuple {
    std::vector<AffineTerm> t;

    int f() const { return static_cast<int>(t.size()); }
    const AffineTerm& at(int i) const {
        int m = i % f();
        return t[m < 0 ? m + f() : m];
    }
    AffineTerm& at(int i) {
        int m = i % f();
        return t[m < 0 ? m + f() : m];
    }
    bool operator==(const FTuple& o) const = default;
    bool operator<(const FTuple& o) const { return t < o.t; }
};

inline FTuple identity_tuple(int f) {
    FTuple r;
    r.t.assign(f, term_x());
    return r;
}

// lambda o mu, termwise substitution lambda_i(mu_i(x_i))
inline FTuple compose(const FTuple& lambda, const FTuple& mu) {
    FTuple r;
    r.t.reserve(lambda.t.size());
    for (size_t i = 0; i < lambda.t.size(); ++i) r.t.push_back(lambda.t[i].compose(mu.t[i]));
    return r;
}

inline FTuple invert(const FTuple& lambda) {
    FTuple r;
    r.t.reserve(lambda.t.size());
    for (auto& a : lambda.t) r.t.push_back(a.inverse());
    return r;
}

// S(lambda) = { i : lambda_i in {x_i +- 1, p-2-x_i +- 1} }
inline bool term_in_S(const AffineTerm& a, long p) {
    if (a.sign == 1) return a.offset == 1 || a.offset == -1;
    return a.offset == p - 1 || a.offset == p - 3;
}

inline std::set<int> S_of(const FTuple& lambda, const Params& P) {
    std::set<int> s;
    for (int i = 0; i < lambda.f(); ++i)
        if (term_in_S(lambda.t[i], P.p)) s.insert(i);
    return s;
}

// the sign of the +-1 carried by a term of S-type; the upper family is read
// as p-2-x-(+-1), so p-3-x carries + and p-1-x carries -
inline int pm_sign(const AffineTerm& a, long p) {
    if (a.sign == 1) return a.offset == 1 ? +1 : -1;
    return a.offset == p - 3 ? +1 : -1;
}

inline bool compatible_at(const FTuple& a, const FTuple& b, int i, const Params& P) {
    const AffineTerm &x = a.at(i), &y = b.at(i);
    if (!term_in_S(x, P.p) || !term_in_S(y, P.p)) return true;
    return pm_sign(x, P.p) == pm_sign(y, P.p);
}

inline bool is_compatible(const FTuple& a, const FTuple& b, const Params& P) {
    for (int i = 0; i < a.f(); ++i)
        if (!compatible_at(a, b, i, P)) return false;
    return true;
}

// lambda <= mu : S(lambda) inside S(mu) and compatible
inline bool leq(const FTuple& lambda, const FTuple& mu, const Params& P) {
    if (!is_compatible(lambda, mu, P)) return false;
    auto sl = S_of(lambda, P), sm = S_of(mu, P);
    for (int i : sl)
        if (!sm.count(i)) return false;
    return true;
}

// Integer affine form c + sum coef_i * x_i; the value type of e(lambda).
struct AffineForm {
    long c = 0;
    std::vector<long> xcoef;

    long eval(const std::vector<long>& x) const {
        long v = c;
        for (size_t i = 0; i < xcoef.size(); ++i) v += xcoef[i] * x[i];
        return v;
    }
    bool operator==(const AffineForm& o) const = default;
};

// e(lambda), with checked halving; the branch depends on the sign of the
// last term. Throws NonIntegralExponent when the parity fails.
inline AffineForm e_of(const FTuple& lambda, const Params& P) {
    const int f = P.f;
    long c2 = 0;  // twice the constant term
    std::vector<long> xc2(f, 0);
    for (int i = 0; i < f; ++i) {
        const AffineTerm& a = lambda.t[i];
        // x_i - lambda_i(x_i)
        long pi = P.ppow(i);
        c2 -= pi * a.offset;
        xc2[i] += pi * (1 - a.sign);
    }
    if (lambda.t[f - 1].sign == -1) c2 += P.q() - 1;
    AffineForm r;
    r.xcoef.resize(f);
    if (c2 % 2 != 0) throw NonIntegralExponent("e(lambda) has non-integral constant term");
    r.c = c2 / 2;
    for (int i = 0; i < f; ++i) {
        if (xc2[i] % 2 != 0) throw NonIntegralExponent("e(lambda) has non-integral x-coefficient");
        r.xcoef[i] = xc2[i] / 2;
    }
    return r;
}

// Condition (cond-lambda): lambda_i = lambda'_i forces the signs at i-1 to agree.
inline bool check_cond_lambda(const FTuple& a, const FTuple& b, const Params& P) {
    for (int i = 0; i < P.f; ++i) {
        if (a.at(i) == b.at(i)) {
            if (a.at(i - 1).sign != b.at(i - 1).sign) return false;
        }
    }
    return true;
}

}  // namespace modplab
