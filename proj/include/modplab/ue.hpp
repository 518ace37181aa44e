#pragma once

#include <array>
#include <map>
#include <vector>

#include "modplab/params.hpp"

namespace modplab {

// ---------------------------------------------------------------------------
// The graded enveloping algebra U(g-bar) with [e,f]=h central, e,f in degree
// 1 and h in degree 2, and its f-fold tensor product over the embeddings.
// Normal form: f before h before e within each embedding; embeddings commute.
// ---------------------------------------------------------------------------

// exponents (a,b,c) of f^a h^b e^c in one embedding
using Mono1 = std::array<int, 3>;
// one exponent triple per embedding
using MonoF = std::vector<Mono1>;

inline int mono1_deg(const Mono1& m) { return m[0] + 2 * m[1] + m[2]; }
inline int monoF_deg(const MonoF& m) {
    int d = 0;
    for (auto& x : m) d += mono1_deg(x);
    return d;
}
// alpha_i-exponent vector (#e_i - #f_i per embedding)
inline std::vector<long> monoF_weight(const MonoF& m) {
    std::vector<long> w(m.size());
    for (size_t i = 0; i < m.size(); ++i) w[i] = m[i][2] - m[i][0];
    return w;
}

// Elements in normal form: monomial -> coefficient in F_p.
struct UElem {
    int f = 1;
    long p = 7;
    std::map<MonoF, long> terms;

    UElem() = default;
    UElem(int f_, long p_) : f(f_), p(p_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const MonoF& m, long c) {
        long v = ((terms.count(m) ? terms[m] : 0) + c) % p;
        v = v < 0 ? v + p : v;
        if (v == 0)
            terms.erase(m);
        else
            terms[m] = v;
    }
    UElem operator+(const UElem& o) const {
        UElem r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, c);
        return r;
    }
    UElem operator-(const UElem& o) const {
        UElem r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, -c);
        return r;
    }
    UElem scale(long c) const {
        UElem r(f, p);
        for (auto& [m, k] : terms) r.add_term(m, k * (((c % p) + p) % p));
        return r;
    }
    bool operator==(const UElem& o) const { return terms == o.terms; }

    // degree of a homogeneous element; -1 for 0, -2 if not homogeneous
    int degree() const {
        if (terms.empty()) return -1;
        int d = monoF_deg(terms.begin()->first);
        for (auto& [m, c] : terms)
            if (monoF_deg(m) != d) return -2;
        return d;
    }
    // weight vector of a weight-homogeneous element
    bool weight(std::vector<long>& out) const {
        if (terms.empty()) return false;
        out = monoF_weight(terms.begin()->first);
        for (auto& [m, c] : terms)
            if (monoF_weight(m) != out) return false;
        return true;
    }
};

UElem u_zero(int f, long p);
UElem u_one(int f, long p);
UElem u_gen(int f, long p, int embedding, int which);  // which: 0=f, 1=h, 2=e
UElem u_mono(int f, long p, const MonoF& m);
UElem u_mul(const UElem& x, const UElem& y);
UElem u_pow(const UElem& x, int n);

// monomial basis of the degree-n component of the f-fold algebra
std::vector<MonoF> u_basis(int f, long p, int n);
long u_graded_dim(int f, int n);

// ---------------------------------------------------------------------------
// Hilbert series: numerator polynomial over 1/(prod (1-t^{d_k}))
// ---------------------------------------------------------------------------
struct HilbertSeries {
    std::vector<long> num;  // num[k] = coefficient of t^k
    std::vector<int> den;   // factors (1 - t^d), sorted

    static HilbertSeries zero() { return {{}, {}}; }
    static HilbertSeries monomial(int a) {
        HilbertSeries h;
        h.num.assign(a + 1, 0);
        h.num[a] = 1;
        return h;
    }
    static HilbertSeries of_U(int f) {  // 1/((1-t)^2 (1-t^2))^f
        HilbertSeries h;
        h.num = {1};
        for (int i = 0; i < f; ++i) {
            h.den.push_back(1);
            h.den.push_back(1);
            h.den.push_back(2);
        }
        std::sort(h.den.begin(), h.den.end());
        return h;
    }

    void trim() {
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    bool is_zero() const {
        for (long c : num)
            if (c) return false;
        return true;
    }

    HilbertSeries mul(const HilbertSeries& o) const;
    HilbertSeries add(const HilbertSeries& o) const;
    HilbertSeries sub(const HilbertSeries& o) const;
    HilbertSeries shift(int a) const;  // multiply by t^a

    // first N+1 coefficients of the expansion
    std::vector<long> coefficients(int N) const;
    // order of the pole at t = 1 (negative = zero of that order)
    int pole_order_at_1() const;
    bool operator==(const HilbertSeries& o) const;
};

}  // namespace modplab
