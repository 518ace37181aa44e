#pragma once

#include <map>
#include <string>
#include <vector>

#include "modplab/fplinalg.hpp"
#include "modplab/params.hpp"

namespace modplab {

// Multivariate polynomials over F_p truncated at total degree >= cutoff.
// Complete local rings enter only through statements about m/m^2 or
// finite-length quotients, for which a fixed truncation is lossless.
struct TruncatedRing {
    long p;
    int nvars;
    int cutoff;  // degrees >= cutoff are dropped
    std::vector<std::string> names;

    TruncatedRing(long p_, std::vector<std::string> names_, int cutoff_)
        : p(p_), nvars(static_cast<int>(names_.size())), cutoff(cutoff_), names(std::move(names_)) {}

    // monomials of total degree < cutoff, sorted
    std::vector<std::vector<int>> monomials() const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(nvars, 0);
        auto rec = [&](auto&& self, int i, int rem) -> void {
            if (i == nvars) {
                out.push_back(cur);
                return;
            }
            for (int d = 0; d <= rem; ++d) {
                cur[i] = d;
                self(self, i + 1, rem - d);
            }
            cur[i] = 0;
        };
        rec(rec, 0, cutoff - 1);
        std::sort(out.begin(), out.end());
        return out;
    }
    long dim() const { return static_cast<long>(monomials().size()); }
};

struct TPoly {
    const TruncatedRing* R = nullptr;
    std::map<std::vector<int>, long> terms;

    TPoly() = default;
    explicit TPoly(const TruncatedRing& ring) : R(&ring) {}

    static TPoly zero(const TruncatedRing& ring) { return TPoly(ring); }
    static TPoly constant(const TruncatedRing& ring, long c) {
        TPoly r(ring);
        r.add_term(std::vector<int>(ring.nvars, 0), c);
        return r;
    }
    static TPoly var(const TruncatedRing& ring, int i) {
        TPoly r(ring);
        std::vector<int> m(ring.nvars, 0);
        m[i] = 1;
        r.add_term(m, 1);
        return r;
    }

    void add_term(const std::vector<int>& m, long c) {
        int d = 0;
        for (int e : m) d += e;
        if (d >= R->cutoff) return;
        long v = ((terms.count(m) ? terms[m] : 0) + c) % R->p;
        v = v < 0 ? v + R->p : v;
        if (v == 0)
            terms.erase(m);
        else
            terms[m] = v;
    }
    bool is_zero() const { return terms.empty(); }

    TPoly operator+(const TPoly& o) const {
        TPoly r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, c);
        return r;
    }
    TPoly operator-(const TPoly& o) const {
        TPoly r = *this;
        for (auto& [m, c] : o.terms) r.add_term(m, -c);
        return r;
    }
    TPoly operator*(const TPoly& o) const {
        TPoly r(*R);
        for (auto& [m1, c1] : terms)
            for (auto& [m2, c2] : o.terms) {
                std::vector<int> m(R->nvars);
                for (int i = 0; i < R->nvars; ++i) m[i] = m1[i] + m2[i];
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    TPoly scale(long c) const {
        TPoly r(*R);
        for (auto& [m, k] : terms) r.add_term(m, k * (((c % R->p) + R->p) % R->p));
        return r;
    }

    // substitute variable i by 0
    TPoly kill_var(int i) const {
        TPoly r(*R);
        for (auto& [m, c] : terms)
            if (m[i] == 0) r.add_term(m, c);
        return r;
    }

    // coefficient vector of the linear part
    std::vector<int32_t> linear_part() const {
        std::vector<int32_t> v(R->nvars, 0);
        for (auto& [m, c] : terms) {
            int d = 0, at = -1;
            for (int i = 0; i < R->nvars; ++i) {
                d += m[i];
                if (m[i]) at = i;
            }
            if (d == 1) v[at] = static_cast<int32_t>(c);
        }
        return v;
    }
    long constant_term() const {
        auto it = terms.find(std::vector<int>(R->nvars, 0));
        return it == terms.end() ? 0 : it->second;
    }

    std::vector<int32_t> to_vector(const std::vector<std::vector<int>>& basis) const {
        std::vector<int32_t> v(basis.size(), 0);
        for (size_t k = 0; k < basis.size(); ++k) {
            auto it = terms.find(basis[k]);
            if (it != terms.end()) v[k] = static_cast<int32_t>(it->second);
        }
        return v;
    }
};

// spanning vectors of the truncated ideal generated by gens
inline std::vector<std::vector<int32_t>> ideal_span(const TruncatedRing& R, const std::vector<TPoly>& gens) {
    auto basis = R.monomials();
    std::vector<std::vector<int32_t>> out;
    for (auto& g : gens)
        for (auto& m : basis) {
            TPoly mono(R);
            mono.add_term(m, 1);
            TPoly prod = mono * g;
            if (!prod.is_zero()) out.push_back(prod.to_vector(basis));
        }
    return out;
}

// exact divisibility in the truncated ring: does q exist with q*g = target
inline bool divides_trunc(const TruncatedRing& R, const TPoly& g, const TPoly& target) {
    auto basis = R.monomials();
    std::vector<std::vector<int32_t>> multiples;
    for (auto& m : basis) {
        TPoly mono(R);
        mono.add_term(m, 1);
        multiples.push_back((mono * g).to_vector(basis));
    }
    return in_span(R.p, multiples, target.to_vector(basis));
}

}  // namespace modplab
