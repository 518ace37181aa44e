#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "modplab/profile.hpp"
#include "modplab/rho.hpp"
#include "modplab/weights.hpp"

namespace modplab {

// characters with a nontrivial I-extension with chi: { chi a_i^{+-1} }
std::vector<HChar> ext_neighbors(const HChar& chi, const Params& P);

// W_{chi,n} = Proj_{I/Z_1} chi / m^n for n in {1,2,3}; layer 0 = socle
Layered<HChar> W_profile(const HChar& chi, int n, const Params& P);
Layered<HChar> Wbar3_profile(const HChar& chi, const Params& P);

// the element lambda_J of P(x_0,...,x_{f-1}) with J(lambda_J) = J
FTuple lambda_P(const std::set<int>& J, const Params& P);
std::set<int> J_of_lambda_P(const FTuple& lambda, const Params& P);

// socle of Ind_I^K chi
SerreWeight sigma_empty(const HChar& chi, const Params& P);
// JH factor of Ind_I^K chi at position J
SerreWeight sigma_J(const HChar& chi, const std::set<int>& J, const Params& P);
// all of JH(Ind_I^K chi), keyed by J (bitmask index)
std::vector<SerreWeight> jh_ind(const HChar& chi, const Params& P);
// position of tau inside Ind_I^K chi, if it occurs
std::optional<std::set<int>> find_J(const HChar& chi, const SerreWeight& tau, const Params& P);

// Ext-occurrence verdict for tau in JH(Ind chi), tau' in JH(Ind chi'),
// chi' = chi a_j^{+-1}; per the occurrence lemmas this equals Ext^1 != 0
bool ext_occurrence(const HChar& chi, const HChar& chi_p, const SerreWeight& tau, const SerreWeight& tau_p,
                    const Params& P);

// Theta_tau and friends, as layered weight profiles (socle first)
Layered<SerreWeight> theta_profile(const SerreWeight& tau, const Params& P);
Layered<SerreWeight> theta_ord_profile(const SerreWeight& tau, const Params& P);
// K_1-coinvariants of Theta_tau and of Theta_tau^ord
std::pair<Layered<SerreWeight>, Layered<SerreWeight>> theta_K1_profiles(const SerreWeight& tau, const Params& P);

// ---------------------------------------------------------------------------
// tau_J and tau(rho)
// ---------------------------------------------------------------------------

struct TauJSpec {
    std::set<int> J;  // the subset called script-J
    HChar chi;        // base character (trivial for plain tau_J)
};

std::vector<HChar> tauJ_jh(const TauJSpec& spec, const Params& P);
std::vector<HChar> tauJ_socle(const TauJSpec& spec, const Params& P);
std::vector<HChar> tauJ_m2(const TauJSpec& spec, const Params& P);

// chi_0^s attached to rho: the character (0, r) with r = sum p^i r_i
HChar chi0s(const RhoData& rho, const Params& P);
TauJSpec tau_rho_spec(const RhoData& rho, const Params& P);

struct TauRhoReport {
    bool applicable = false;           // strong genericity gate
    bool socle_matches = false;        // JH(tau(rho)) n chars_D1 = socle of tau(rho)
    bool chi_f_in = false;             // chi_f in JH(tau(rho))
    bool chi_f_s_out = false;          // chi_f^s not in JH(tau(rho))
    std::vector<HChar> intersection;   // JH(tau(rho)) n chars_D1(rho)
    bool pass() const { return applicable && socle_matches && chi_f_in && chi_f_s_out; }
};
TauRhoReport tau_rho_consistency(const RhoData& rho, const Params& P);

// n_chi = number of J with sigma_J(chi) in D(rho) (multiplicity of chi in
// the I_1-invariants of the sum of Gamma-injectives over D(rho))
long n_chi(const HChar& chi, const RhoData& rho, const Params& P);

// the unique sigma in D(rho) with chi in D_{1,sigma}, located two ways:
// via the ell-minimizer of the cosocle of Ind chi, and via J^max
SerreWeight tau_of_chi(const RhoData& rho, const HChar& chi, const Params& P);
std::set<int> J_of_tau_chi_argmin(const RhoData& rho, const HChar& chi, const Params& P);
std::set<int> J_of_tau_chi_jmax(const RhoData& rho, const HChar& chi, const Params& P);

}  // namespace modplab
