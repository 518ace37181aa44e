#include "modplab/defring.hpp"

#include <algorithm>

namespace modplab {

TruncatedRing le_ring(long p, int f, int cutoff) {
    std::vector<std::string> names;
    for (int i = 0; i < f; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 0; i < f; ++i) names.push_back("Y" + std::to_string(i));
    names.push_back("p");
    return TruncatedRing(p, std::move(names), cutoff);
}

int le_X(int i, int) { return i; }
int le_Y(int i, int f) { return f + i; }
int le_pvar(int f) { return 2 * f; }

TPoly le_relation(const TruncatedRing& R, int i, int f, const std::set<int>& S_rho, const std::set<int>& J,
                  const SignedSet& I) {
    const int k = ((f - 1 - i) % f + f) % f;
    int col;  // 0: omega^{(k)} not in S_rho; 1: in S_rho \ J; 2: in J
    if (!S_rho.count(k))
        col = 0;
    else
        col = J.count(k) ? 2 : 1;
    int row = 0;  // 0: {+-omega^{(k)}} n I empty; 1: +omega in I; 2: -omega in I
    auto it = I.find(k);
    if (it != I.end() && it->second != 0) row = it->second > 0 ? 1 : 2;
    if (col == 0 && row == 1 && S_rho.count(k)) throw InvalidCell("inconsistent cell");

    TPoly X = TPoly::var(R, le_X(i, f));
    TPoly Y = TPoly::var(R, le_Y(i, f));
    TPoly pp = TPoly::var(R, le_pvar(f));
    TPoly XYp = X * Y - pp;
    switch (row * 3 + col) {
        case 0: return Y * (Y - pp);   // empty, not in S_rho
        case 1: return Y * XYp;        // empty, in S_rho \ J
        case 2: return X * XYp;        // empty, in J
        case 3: return Y;              // +omega, not in S_rho
        case 4: return Y;              // +omega, in S_rho \ J
        case 5: return XYp;            // +omega, in J
        case 6: return Y - pp;         // -omega, not in S_rho
        case 7: return XYp;            // -omega, in S_rho \ J
        case 8: return X;              // -omega, in J
    }
    throw InvalidCell("unreachable");
}

std::vector<TPoly> le_relations(const TruncatedRing& R, int f, const std::set<int>& S_rho, const std::set<int>& J,
                                const SignedSet& I) {
    for (int j : J)
        if (!S_rho.count(j)) throw InvalidCell("J must be a subset of S_rho");
    std::vector<TPoly> out;
    for (int i = 0; i < f; ++i) out.push_back(le_relation(R, i, f, S_rho, J, I));
    return out;
}

bool le_divisibility(const TruncatedRing& R, int f, const std::set<int>& S_rho, const std::set<int>& J,
                     const SignedSet& I, const SignedSet& Iprime) {
    // I included in I' entrywise
    for (auto& [k, s] : I) {
        if (s == 0) continue;
        auto it = Iprime.find(k);
        if (it == Iprime.end() || it->second != s) throw InvalidCell("I is not a subset of I'");
    }
    for (int i = 0; i < f; ++i) {
        TPoly g = le_relation(R, i, f, S_rho, J, I);
        TPoly gp = le_relation(R, i, f, S_rho, J, Iprime);
        if (!divides_trunc(R, gp, g)) return false;
    }
    return true;
}

long tangent_dim(const TruncatedRing& R, const std::vector<TPoly>& relations, int pvar_index, int extra_formal_vars) {
    std::vector<std::vector<int32_t>> lins;
    for (auto& g : relations) {
        TPoly g0 = pvar_index >= 0 ? g.kill_var(pvar_index) : g;
        auto v = g0.linear_part();
        if (pvar_index >= 0) v[pvar_index] = 0;
        lins.push_back(std::move(v));
    }
    long nvars = R.nvars - (pvar_index >= 0 ? 1 : 0);
    return nvars + extra_formal_vars - static_cast<long>(span_dim(R.p, lins, R.nvars));
}

bool regular_params_mod_primes(long p, int nJ) {
    // ring F[(X_j,Y_j)]/(X_jY_j): work in the truncated polynomial ring and
    // quotient by each minimal prime (a choice of X_j or Y_j per j)
    std::vector<std::string> names;
    for (int j = 0; j < nJ; ++j) {
        names.push_back("X" + std::to_string(j));
        names.push_back("Y" + std::to_string(j));
    }
    TruncatedRing R(p, names, 3);
    for (long mask = 0; mask < (1L << nJ); ++mask) {
        // prime kills X_j (bit set) or Y_j; U_j = X_j + Y_j maps to the survivor
        std::vector<std::vector<int32_t>> lins;
        for (int j = 0; j < nJ; ++j) {
            TPoly U = TPoly::var(R, 2 * j) + TPoly::var(R, 2 * j + 1);
            TPoly Ubar = U.kill_var((mask >> j) & 1 ? 2 * j : 2 * j + 1);
            lins.push_back(Ubar.linear_part());
        }
        // the quotient has nJ surviving variables; the U_j images must span
        if (span_dim(p, lins, R.nvars) != static_cast<size_t>(nJ)) return false;
    }
    return true;
}

bool regular_params_bad_choice_fails(long p, int nJ) {
    std::vector<std::string> names;
    for (int j = 0; j < nJ; ++j) {
        names.push_back("X" + std::to_string(j));
        names.push_back("Y" + std::to_string(j));
    }
    TruncatedRing R(p, names, 3);
    // take U_0 = X_0 instead; at the prime killing X_0 the images fail to span
    std::vector<std::vector<int32_t>> lins;
    for (int j = 0; j < nJ; ++j) {
        TPoly U = j == 0 ? TPoly::var(R, 0) : TPoly::var(R, 2 * j) + TPoly::var(R, 2 * j + 1);
        TPoly Ubar = U.kill_var(2 * j);  // prime contains X_j for all j
        lins.push_back(Ubar.linear_part());
    }
    return span_dim(p, lins, R.nvars) != static_cast<size_t>(nJ);
}

namespace {

// R/I_0 regular, verified at truncation level: the linear parts of the
// generators have some rank r and the quotient has the dimension of a
// truncated polynomial ring in nvars - r variables
bool quotient_regular(const TruncatedRing& R, const std::vector<TPoly>& I0) {
    std::vector<std::vector<int32_t>> lins;
    for (auto& g : I0) lins.push_back(g.linear_part());
    long r = static_cast<long>(span_dim(R.p, lins, R.nvars));
    TruncatedRing Rsmall(R.p, std::vector<std::string>(R.nvars - r, "t"), R.cutoff);
    auto span = ideal_span(R, I0);
    long dim_quot = R.dim() - static_cast<long>(span_dim(R.p, span, R.dim()));
    return dim_quot == Rsmall.dim();
}

bool contains_span(long p, const std::vector<std::vector<int32_t>>& big,
                   const std::vector<std::vector<int32_t>>& small) {
    for (auto& v : small)
        if (!in_span(p, big, v)) return false;
    return true;
}

}  // namespace

TangentIdealVerdict tangent_ideal_equiv(const TruncatedRing& R, const std::vector<TPoly>& I0,
                                        const std::vector<TPoly>& I1, const std::vector<TPoly>& I2) {
    TangentIdealVerdict v;
    auto basis = R.monomials();
    auto s0 = ideal_span(R, I0), s1 = ideal_span(R, I1), s2 = ideal_span(R, I2);
    if (!contains_span(R.p, s0, s1) || !contains_span(R.p, s0, s2))
        throw HypothesisViolated("I_1, I_2 must be contained in I_0");
    v.hypothesis_ok = quotient_regular(R, I0);
    if (!v.hypothesis_ok) return v;
    // tangent equality: the linear spans of I_1 and I_2 sum to that of I_0
    auto lin = [&](const std::vector<TPoly>& gens) {
        std::vector<std::vector<int32_t>> l;
        for (auto& g : gens) l.push_back(g.linear_part());
        return l;
    };
    auto l0 = lin(I0), l1 = lin(I1), l2 = lin(I2);
    std::vector<std::vector<int32_t>> l12 = l1;
    l12.insert(l12.end(), l2.begin(), l2.end());
    v.tangent_equal = same_span(R.p, l12, l0, R.nvars);
    // sum equality as truncated ideals
    std::vector<std::vector<int32_t>> s12 = s1;
    s12.insert(s12.end(), s2.begin(), s2.end());
    v.sum_equal = same_span(R.p, s12, s0, basis.size());
    return v;
}

CyclicityVerdict cyclicity_check(const TruncatedRing& R, const std::vector<TPoly>& I0, const std::vector<TPoly>& I1,
                                 const std::vector<TPoly>& I2) {
    CyclicityVerdict v;
    auto basis = R.monomials();
    const long d = static_cast<long>(basis.size());
    auto s0 = ideal_span(R, I0), s1 = ideal_span(R, I1), s2 = ideal_span(R, I2);
    if (!contains_span(R.p, s0, s1) || !contains_span(R.p, s0, s2))
        throw HypothesisViolated("I_1, I_2 must be contained in I_0");
    {
        std::vector<std::vector<int32_t>> s12 = s1;
        s12.insert(s12.end(), s2.begin(), s2.end());
        v.sum_equal = same_span(R.p, s12, s0, basis.size());
    }

    // bases of R/I_k: use coordinates on R and quotient by the spans; realize
    // M = ker(R/I_1 + R/I_2 -> R/I_0), (a, b) -> a - b
    // kernel: pairs (a, b) in R x R with a - b in I_0, modulo (I_1, I_2).
    // work in coordinates: unknowns (a, b) in F^{2d}; conditions: a - b in
    // span(s0). M then = solution space / (s1 x s2)
    std::vector<std::vector<int32_t>> s0red;
    {
        FpMat M0(R.p, s0.size(), d);
        for (size_t i = 0; i < s0.size(); ++i)
            for (long j = 0; j < d; ++j) M0.set(i, j, s0[i][j]);
        auto piv = M0.echelon();
        for (size_t r = 0; r < piv.size(); ++r) {
            std::vector<int32_t> row(d);
            for (long j = 0; j < d; ++j) row[j] = M0.at(r, j);
            s0red.push_back(std::move(row));
        }
    }
    // solution space of a - b in I_0: spanned by (v, v) for v in R and
    // (w, 0), (0, w') for w in I_0... more precisely: {(a,b): a-b in I_0} =
    // {(v,v)} + I_0 x 0. dim = d + dim I_0.
    std::vector<std::vector<int32_t>> sol;
    for (long k = 0; k < d; ++k) {
        std::vector<int32_t> v(2 * d, 0);
        v[k] = v[d + k] = 1;
        sol.push_back(std::move(v));
    }
    for (auto& w : s0red) {
        std::vector<int32_t> v(2 * d, 0);
        for (long j = 0; j < d; ++j) v[j] = w[j];
        sol.push_back(std::move(v));
    }
    // quotient by I_1 x I_2
    std::vector<std::vector<int32_t>> denom;
    for (auto& w : s1) {
        std::vector<int32_t> v(2 * d, 0);
        for (long j = 0; j < d; ++j) v[j] = w[j];
        denom.push_back(std::move(v));
    }
    for (auto& w : s2) {
        std::vector<int32_t> v(2 * d, 0);
        for (long j = 0; j < d; ++j) v[d + j] = w[j];
        denom.push_back(std::move(v));
    }
    long dim_denom = static_cast<long>(span_dim(R.p, denom, 2 * d));
    std::vector<std::vector<int32_t>> all = sol;
    all.insert(all.end(), denom.begin(), denom.end());
    long dim_M = static_cast<long>(span_dim(R.p, all, 2 * d)) - dim_denom;

    // m M: multiply the solution space by the variables
    std::vector<std::vector<int32_t>> mM = denom;  // modulo the same denominator
    for (auto& v : sol) {
        // interpret v as a pair of polynomials and multiply by each variable
        for (int i = 0; i < R.nvars; ++i) {
            TPoly a(R), b(R);
            for (long k = 0; k < d; ++k) {
                if (v[k]) a.add_term(basis[k], v[k]);
                if (v[d + k]) b.add_term(basis[k], v[d + k]);
            }
            TPoly xi = TPoly::var(R, i);
            TPoly xa = xi * a, xb = xi * b;
            std::vector<int32_t> w(2 * d, 0);
            auto va = xa.to_vector(basis), vb = xb.to_vector(basis);
            for (long k = 0; k < d; ++k) {
                w[k] = va[k];
                w[d + k] = vb[k];
            }
            mM.push_back(std::move(w));
        }
    }
    long dim_mM = static_cast<long>(span_dim(R.p, mM, 2 * d)) - dim_denom;
    v.min_generators = dim_M - dim_mM;
    v.cyclic = v.min_generators == 1;
    return v;
}

}  // namespace modplab
