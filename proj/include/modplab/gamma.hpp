#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "modplab/ftuple.hpp"
#include "modplab/profile.hpp"
#include "modplab/weights.hpp"

namespace modplab {

// ---------------------------------------------------------------------------
// The parametrizing set I(x_0,...,x_{f-1}) and its tilde extension.
// ---------------------------------------------------------------------------

bool in_I(const FTuple& lambda, const Params& P);
std::vector<FTuple> enumerate_I(const Params& P);

// mu_i^* and delta_i^* (sign = +1 or -1)
FTuple mu_op(int i, int sign, const Params& P);
FTuple delta_op(int i, int sign, const Params& P);

// Delta(sigma) and E(sigma): evaluations over all (i,*), undefined ones dropped
std::vector<SerreWeight> Delta_of(const SerreWeight& sigma, const Params& P);
std::vector<SerreWeight> E_of(const SerreWeight& sigma, const Params& P);

// the unique lambda in I with lambda(sigma) ~ tau, if any
std::optional<FTuple> find_lambda(const SerreWeight& sigma, const SerreWeight& tau, const Params& P);

// JH(I(sigma,tau)) over Gamma: the order ideal below lambda(tau)
std::vector<SerreWeight> jh_I_gamma(const SerreWeight& sigma, const SerreWeight& tau, const Params& P);

// ---------------------------------------------------------------------------
// Tilde layer
// ---------------------------------------------------------------------------

// (lambda, T) with T empty or the pair (i,*); members of tilde-I_{(i,*)}
struct TildeTuple {
    FTuple lambda;
    bool tagged = false;
    int tag_i = 0;
    int tag_sign = +1;

    bool operator==(const TildeTuple& o) const = default;
    bool operator<(const TildeTuple& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        if (tagged != o.tagged) return tagged < o.tagged;
        if (tag_i != o.tag_i) return tag_i < o.tag_i;
        return tag_sign < o.tag_sign;
    }
};

// condition (newweight) at index i with sign *
bool newweight_cond(const FTuple& lambda, int i, int sign, const Params& P);

// lambda_! for the pair (i,*); requires the newweight condition
FTuple lambda_shriek(const FTuple& lambda, int i, int sign, const Params& P);

bool tilde_leq(const TildeTuple& a, const TildeTuple& b, const Params& P);
int tilde_length(const TildeTuple& t, const Params& P);

SerreWeight tilde_eval(const TildeTuple& t, const SerreWeight& sigma, const Params& P);

// all tilde tuples (lambda,empty) plus (lambda,(i,*)) with the newweight condition
std::vector<TildeTuple> enumerate_tilde(const Params& P);

// is lambda(delta_i^*(sigma)) new in Inj over tilde-Gamma
bool is_new(const SerreWeight& sigma, const FTuple& lambda, int i, int sign, const Params& P);

// for a new weight tau: the unique (i,*) with tau in Inj_Gamma(delta_i^*(sigma))
std::pair<int, int> unique_delta(const SerreWeight& sigma, const SerreWeight& tau, const Params& P);

// the tilde tuple with tilde_eval(t, sigma) ~ tau, if any
std::optional<TildeTuple> find_tilde(const SerreWeight& sigma, const SerreWeight& tau, const Params& P);

// exceptional f=1 case marker: sigma of dimension 3 and t = (mu_0^-, (0,-))
bool tilde_exceptional(const SerreWeight& sigma, const TildeTuple& t, const Params& P);

// JH support of Inj over tilde-Gamma
std::vector<SerreWeight> jh_inj_tilde(const SerreWeight& sigma, const Params& P);

// socle filtration of I(sigma, tilde_eval(t,sigma)); layer 0 = socle
Layered<SerreWeight> socle_filtration_I_tilde(const SerreWeight& sigma, const TildeTuple& t, const Params& P);

// Loewy length of I(sigma,tau) over tilde-Gamma; nullopt when tau not a factor
std::optional<int> loewy_length(const SerreWeight& sigma, const SerreWeight& tau, const Params& P);

// JH of sigma (x) H^1(K_1/Z_1, F): sigma^f plus Delta(sigma)
std::vector<SerreWeight> h1_tensor_jh(const SerreWeight& sigma, const Params& P);

// the unique lambda'' with S(lambda'') = S'' compatible with both inputs
FTuple meet_on_subset(const FTuple& a, const FTuple& b, const std::set<int>& S2, const Params& P);

}  // namespace modplab
