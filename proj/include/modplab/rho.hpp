#pragma once

#include <optional>
#include <set>
#include <vector>

#include "modplab/gamma.hpp"
#include "modplab/weights.hpp"

namespace modplab {

// Inertia data of a reducible generic rho-bar: exponents r_i, the subset
// J_rho (input; not computed from a cocycle), and the split flag.
struct RhoData {
    std::vector<long> r;
    std::set<int> J_rho;
    bool split = false;

    bool generic(const Params& P) const {
        bool all0 = true, allp3 = true;
        for (long ri : r) {
            if (ri < 0 || ri > P.p - 3) return false;
            all0 = all0 && ri == 0;
            allp3 = allp3 && ri == P.p - 3;
        }
        return !all0 && !allp3;
    }
    bool strongly_generic(const Params& P) const {
        for (long ri : r)
            if (ri < 2 || ri > P.p - 5) return false;
        return true;
    }
    // a reducible nonsplit rho has |D(rho)| = 2^d with d <= f-1, so J_rho is
    // a proper subset of S in that case
    bool valid(const Params& P) const {
        if (static_cast<int>(r.size()) != P.f) return false;
        for (int j : J_rho)
            if (j < 0 || j >= P.f) return false;
        if (!split && static_cast<int>(J_rho.size()) >= P.f) return false;
        return generic(P);
    }
    SerreWeight sigma0(const Params& P) const { return SerreWeight(r, 0, P); }
};

// ---------------------------------------------------------------------------
// The set RD(x_0,...,x_{f-1}) parametrizing D(rho^ss).
//
// The chain rules are frozen as a two-state machine: each index carries a
// state in {lo, up}, and lambda_i is determined by (state_i, state_{i-1}):
//     (lo,lo) -> x_i        (lo,up) -> x_i + 1
//     (up,lo) -> p-2-x_i    (up,up) -> p-3-x_i
// A regeneration test searches all cell assignments and checks this is the
// unique rule set (up to state relabeling) matching the defining constraints.
// ---------------------------------------------------------------------------

AffineTerm rd_cell(bool own_up, bool pred_up, long p);
std::vector<FTuple> enumerate_RD(const Params& P);

// the J_rho membership filter: lambda_j in {p-3-x_j, x_j+1} forces j in J_rho
bool rd_passes_filter(const FTuple& lambda, const std::set<int>& J_rho, const Params& P);

std::vector<SerreWeight> D_of_rho_ss(const RhoData& rho, const Params& P);
std::vector<SerreWeight> D_of_rho(const RhoData& rho, const Params& P);

// ---------------------------------------------------------------------------
// The set PD(x_0,...,x_{f-1}) parametrizing JH(D_1(rho)).
// ---------------------------------------------------------------------------

bool in_PD(const FTuple& lambda, const std::set<int>& J_rho, const Params& P);
std::vector<FTuple> enumerate_PD(const RhoData& rho, const Params& P);

// weight and I-character attached to lambda in PD (evaluation at sigma0)
SerreWeight pd_weight(const FTuple& lambda, const RhoData& rho, const Params& P);
HChar pd_char(const FTuple& lambda, const RhoData& rho, const Params& P);
std::vector<HChar> chars_D1(const RhoData& rho, const Params& P);

// J^max_lambda; delta is the shift: i-1 lies in delta(J) iff i lies in J.
std::set<int> Jmax(const FTuple& lambda, const std::set<int>& J_rho, const Params& P);

// PD^dagger: lambda_i in {x_i, x_i+2, p-1-x_i, p-3-x_i} for all i
bool is_dagger_tuple(const FTuple& lambda, const Params& P);
// character-level form: locate the PD tuple attached to chi first
bool is_dagger(const RhoData& rho, const HChar& chi, const Params& P);
std::vector<FTuple> enumerate_PD_dagger(const RhoData& rho, const Params& P);

// ---------------------------------------------------------------------------
// D_0 / tilde-D_0 and the length function
// ---------------------------------------------------------------------------

// JH of (tilde-)D_{0,sigma}(rho): tilde tuples whose order ideal avoids
// D(rho) \ {sigma}; tilde=false restricts to untagged tuples
std::vector<SerreWeight> jh_D0_sigma(const RhoData& rho, const SerreWeight& sigma, bool tilde, const Params& P);

// min over sigma in D(rho) of the Loewy length of I(sigma,tau); nullopt = infinity
std::optional<int> ell_rho(const RhoData& rho, const SerreWeight& tau, const Params& P);
SerreWeight argmin_sigma(const RhoData& rho, const SerreWeight& tau, const Params& P);

}  // namespace modplab
