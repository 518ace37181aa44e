#pragma once

#include <optional>
#include <vector>

#include "modplab/fplinalg.hpp"
#include "modplab/ue.hpp"
#include "modplab/weights.hpp"

namespace modplab {

// ---------------------------------------------------------------------------
// The mod-m^3 calculus: A = (f-fold tensor of U(g-bar)) truncated in degrees
// <= 2, the module lambda_chi, its endomorphism ring R = F[(x_i,y_i)]/(x,y)^2,
// and the Hom(P_chi', lambda_chi^dual)^dual table.
// ---------------------------------------------------------------------------

struct Modm3Report {
    bool center_ok = false;        // x_i, y_i central and (x,y)^2 = 0 in A
    long lambda_dim = 0;           // dim of lambda_chi (= 4f+1)
    long chi_multiplicity = 0;     // [lambda_chi : chi] (= 2f+1)
    long end_dim = 0;              // dim End (= 2f+1)
    bool end_is_R = false;         // End spanned by 1, x_i-, y_i-actions
    bool hom_chi_is_R = false;     // Hom(P_chi, -)^dual free of rank 1 over R
    bool hom_neighbors_are_F = false;
    bool hom_others_zero = false;
    bool tchi_span_maximal = false;  // the t_{chi'} span the maximal ideal of R
    bool pass() const {
        return center_ok && lambda_dim == 4 * ((end_dim - 1) / 2) + 1 && chi_multiplicity == end_dim &&
               end_is_R && hom_chi_is_R && hom_neighbors_are_F && hom_others_zero && tchi_span_maximal;
    }
};

// chi must be 2-generic so the 4f+1 characters involved stay distinct
Modm3Report mod_m3_module_calc(const HChar& chi, const Params& P);

// ---------------------------------------------------------------------------
// The typical example: R = F[x_1..x_n]/(x)^2, M = R + F^m, R' = End_R(M) in
// matrix form, the two-sided ideals J_b, and generalized Koszul complexes.
// ---------------------------------------------------------------------------

// element of R' in block form; R-elements are coefficient vectors of length
// n+1 (constant term first), m-elements length n
struct RpElem {
    int n = 0, m = 0;
    long p = 7;
    std::vector<long> b00;               // in R
    std::vector<long> b0j;               // j = 1..m, in F
    std::vector<std::vector<long>> bi0;  // i = 1..m, in m_R
    std::vector<std::vector<long>> bij;  // i,j = 1..m, in F

    RpElem() = default;
    RpElem(int n_, int m_, long p_)
        : n(n_), m(m_), p(p_), b00(n_ + 1, 0), b0j(m_, 0), bi0(m_, std::vector<long>(n_, 0)),
          bij(m_, std::vector<long>(m_, 0)) {}

    long dim() const { return (n + 1) + m + static_cast<long>(m) * n + static_cast<long>(m) * m; }
    std::vector<int32_t> flatten() const;
    static RpElem unflatten(int n, int m, long p, const std::vector<int32_t>& v);
    bool is_zero() const;
};

RpElem rp_mul(const RpElem& x, const RpElem& y);  // composition: x first, then y
RpElem rp_add(const RpElem& x, const RpElem& y);
RpElem rp_scale(const RpElem& x, long c);
std::vector<RpElem> rp_basis(int n, int m, long p);

// elements of M = R + F^m as vectors of length (n+1) + m
std::vector<long> m_apply(const std::vector<long>& v, const RpElem& phi);

// left ideal span (as subspace of R') generated by the given elements
std::vector<std::vector<int32_t>> left_ideal_span(const std::vector<RpElem>& gens, int n, int m, long p);

// the ideal J_b for a subspace b of m_R (given by spanning vectors, length n)
std::vector<std::vector<int32_t>> Jb_span(const std::vector<std::vector<long>>& b, int n, int m, long p);

struct KoszulReport {
    bool commuting = false;
    bool two_sided = false;
    bool is_Jb = false;                 // J has the form J_b
    long dim_b = -1;
    bool socle_identity = false;        // MJ_b = m_R + F^m = soc_R(M)
    bool mj_dim_identity = false;       // dim MJ/MJ^2 = n + m - dim b
    bool dbar1_injective = false;
    bool propagation_holds = true;      // dbar_1 injective => all dbar_l injective
    std::vector<bool> dbar_injective;   // per level 1..n
    bool phi_bar_iso = false;           // (phi_1..phi_n): (M/MJ)^n -> MJ/MJ^2 bijective
};

// full analysis of the Koszul complex K(phi, M) for M = R + F^m
KoszulReport generalized_koszul_check(int n, int m, long p, const std::vector<RpElem>& phis);

// dimension facts of MJ_b / MJ_b^2 for an arbitrary subspace b (Lemma JM)
struct JMFacts {
    long dim_MJ = 0, dim_MJ2 = 0;
    bool socle_eq = false;     // MJ_b = m_R + F^m
    bool quotient_dim1 = false;  // dim M / MJ_b = 1
};
JMFacts jm_lemma_facts(int n, int m, long p, const std::vector<std::vector<long>>& b);

// the worked example: n=2, m=1, phi_1 = [[0, fsharp],[x, 0]], phi_2 = [[x-y,0],[0,0]]
KoszulReport koszul_worked_example(long p, long fsharp);

}  // namespace modplab
