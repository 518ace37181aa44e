#include "modplab/ue.hpp"

#include <algorithm>

namespace modplab {

UElem u_zero(int f, long p) { return UElem(f, p); }

UElem u_one(int f, long p) {
    UElem r(f, p);
    r.add_term(MonoF(f, Mono1{0, 0, 0}), 1);
    return r;
}

UElem u_gen(int f, long p, int embedding, int which) {
    UElem r(f, p);
    MonoF m(f, Mono1{0, 0, 0});
    m[embedding][which == 0 ? 0 : (which == 1 ? 1 : 2)] = 1;
    r.add_term(m, 1);
    return r;
}

UElem u_mono(int f, long p, const MonoF& m) {
    UElem r(f, p);
    r.add_term(m, 1);
    return r;
}

namespace {

// single-embedding reordering kernel: e^c f^a = sum coeff(a,c,k) f^{a-k} h^k e^{c-k},
// derived from e f^a = f^a e + a f^{a-1} h by peeling one e at a time
void ecfa(long p, int c, int a, std::vector<long>& out) {
    // out[k] = coefficient of f^{a-k} h^k e^{c-k}
    int kmax = std::min(a, c);
    out.assign(kmax + 1, 0);
    std::vector<long> prev = {1};  // c = 0
    for (int cc = 1; cc <= c; ++cc) {
        // e * (sum_k prev[k] f^{a-k} h^k e^{cc-1-k})
        //   = sum_k prev[k] [ f^{a-k} e + (a-k) f^{a-k-1} h ] h^k e^{cc-1-k}
        int km = std::min(a, cc);
        std::vector<long> cur(km + 1, 0);
        for (int k = 0; k < static_cast<int>(prev.size()); ++k) {
            if (prev[k] == 0) continue;
            cur[k] = (cur[k] + prev[k]) % p;
            if (k + 1 <= km) cur[k + 1] = (cur[k + 1] + prev[k] * ((a - k) % p)) % p;
        }
        prev = std::move(cur);
    }
    for (int k = 0; k <= kmax && k < static_cast<int>(prev.size()); ++k) out[k] = prev[k];
}

// product of two single-embedding monomials
void mono1_mul(long p, const Mono1& x, const Mono1& y, std::vector<std::pair<Mono1, long>>& out) {
    out.clear();
    std::vector<long> co;
    ecfa(p, x[2], y[0], co);
    for (int k = 0; k < static_cast<int>(co.size()); ++k) {
        if (co[k] == 0) continue;
        Mono1 m{x[0] + (y[0] - k), x[1] + y[1] + k, (x[2] - k) + y[2]};
        out.push_back({m, co[k]});
    }
}

}  // namespace

UElem u_mul(const UElem& x, const UElem& y) {
    UElem r(x.f, x.p);
    std::vector<std::pair<Mono1, long>> part;
    for (auto& [mx, cx] : x.terms)
        for (auto& [my, cy] : y.terms) {
            // accumulate embedding by embedding
            std::vector<std::pair<MonoF, long>> acc = {{MonoF(), cx * cy % x.p}};
            for (int i = 0; i < x.f; ++i) {
                mono1_mul(x.p, mx[i], my[i], part);
                std::vector<std::pair<MonoF, long>> next;
                for (auto& [pref, c0] : acc)
                    for (auto& [m1, c1] : part) {
                        MonoF m = pref;
                        m.push_back(m1);
                        next.push_back({std::move(m), c0 * c1 % x.p});
                    }
                acc = std::move(next);
            }
            for (auto& [m, c] : acc) r.add_term(m, c);
        }
    return r;
}

UElem u_pow(const UElem& x, int n) {
    UElem r = u_one(x.f, x.p);
    for (int i = 0; i < n; ++i) r = u_mul(r, x);
    return r;
}

std::vector<MonoF> u_basis(int f, long, int n) {
    std::vector<MonoF> out;
    MonoF cur(f, Mono1{0, 0, 0});
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == f) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int a = 0; a <= rem; ++a)
            for (int b = 0; 2 * b <= rem - a; ++b) {
                int c = 0;
                for (c = 0; a + 2 * b + c <= rem; ++c) {
                    cur[i] = {a, b, c};
                    self(self, i + 1, rem - a - 2 * b - c);
                }
            }
        cur[i] = {0, 0, 0};
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

long u_graded_dim(int f, int n) {
    // number of tuples (a_i,b_i,c_i) with sum of a+2b+c equal to n
    std::vector<long> dp(n + 1, 0);
    dp[0] = 1;
    for (int i = 0; i < f; ++i) {
        std::vector<long> nx(n + 1, 0);
        for (int d = 0; d <= n; ++d) {
            if (!dp[d]) continue;
            for (int a = 0; d + a <= n; ++a)
                for (int b = 0; d + a + 2 * b <= n; ++b)
                    for (int c = 0; d + a + 2 * b + c <= n; ++c) nx[d + a + 2 * b + c] += dp[d];
        }
        dp = std::move(nx);
    }
    return dp[n];
}

// ---------------------------------------------------------------------------

HilbertSeries HilbertSeries::mul(const HilbertSeries& o) const {
    HilbertSeries r;
    if (is_zero() || o.is_zero()) return zero();
    r.num.assign(num.size() + o.num.size() - 1, 0);
    for (size_t i = 0; i < num.size(); ++i)
        for (size_t j = 0; j < o.num.size(); ++j) r.num[i + j] += num[i] * o.num[j];
    r.den = den;
    r.den.insert(r.den.end(), o.den.begin(), o.den.end());
    std::sort(r.den.begin(), r.den.end());
    r.trim();
    return r;
}

namespace {
std::vector<long> poly_mul_factor(const std::vector<long>& a, int d) {
    // multiply by (1 - t^d)
    std::vector<long> r(a.size() + d, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + d] -= a[i];
    }
    return r;
}
}  // namespace

HilbertSeries HilbertSeries::add(const HilbertSeries& o) const {
    // common denominator: multiset max per factor value
    std::map<int, int> ca, cb, cm;
    for (int d : den) ++ca[d];
    for (int d : o.den) ++cb[d];
    for (auto& [d, n] : ca) cm[d] = std::max(cm[d], n);
    for (auto& [d, n] : cb) cm[d] = std::max(cm[d], n);
    std::vector<long> na = num, nb = o.num;
    if (na.empty()) na = {0};
    if (nb.empty()) nb = {0};
    for (auto& [d, n] : cm) {
        int extra_a = n - (ca.count(d) ? ca[d] : 0);
        int extra_b = n - (cb.count(d) ? cb[d] : 0);
        for (int k = 0; k < extra_a; ++k) na = poly_mul_factor(na, d);
        for (int k = 0; k < extra_b; ++k) nb = poly_mul_factor(nb, d);
    }
    HilbertSeries r;
    r.num.assign(std::max(na.size(), nb.size()), 0);
    for (size_t i = 0; i < na.size(); ++i) r.num[i] += na[i];
    for (size_t i = 0; i < nb.size(); ++i) r.num[i] += nb[i];
    for (auto& [d, n] : cm)
        for (int k = 0; k < n; ++k) r.den.push_back(d);
    std::sort(r.den.begin(), r.den.end());
    r.trim();
    return r;
}

HilbertSeries HilbertSeries::sub(const HilbertSeries& o) const {
    HilbertSeries neg = o;
    for (auto& c : neg.num) c = -c;
    return add(neg);
}

HilbertSeries HilbertSeries::shift(int a) const { return mul(monomial(a)); }

std::vector<long> HilbertSeries::coefficients(int N) const {
    std::vector<long> r(N + 1, 0);
    for (size_t i = 0; i < num.size() && i <= static_cast<size_t>(N); ++i) r[i] = num[i];
    for (int d : den) {
        // divide by (1 - t^d): multiply by geometric series
        for (int k = d; k <= N; ++k) r[k] += r[k - d];
    }
    return r;
}

int HilbertSeries::pole_order_at_1() const {
    if (is_zero()) return -1 << 20;
    std::vector<long> n = num;
    int zeros = 0;
    auto value_at_1 = [](const std::vector<long>& v) {
        long s = 0;
        for (long c : v) s += c;
        return s;
    };
    while (value_at_1(n) == 0) {
        // n = (1-t) q with q_k = n_0 + ... + n_k (partial sums)
        if (n.size() <= 1) {
            n.clear();
            break;
        }
        std::vector<long> q(n.size() - 1, 0);
        q[0] = n[0];
        for (size_t i = 1; i < q.size(); ++i) q[i] = q[i - 1] + n[i];
        n = std::move(q);
        ++zeros;
    }
    return static_cast<int>(den.size()) - zeros;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    // compare as rational functions: cross-multiply denominators
    std::vector<long> na = num.empty() ? std::vector<long>{0} : num;
    std::vector<long> nb = o.num.empty() ? std::vector<long>{0} : o.num;
    for (int d : o.den) na = poly_mul_factor(na, d);
    for (int d : den) nb = poly_mul_factor(nb, d);
    while (!na.empty() && na.back() == 0) na.pop_back();
    while (!nb.empty() && nb.back() == 0) nb.pop_back();
    return na == nb;
}

}  // namespace modplab
