#pragma once

#include <optional>
#include <set>

#include "modplab/truncring.hpp"

namespace modplab {

// ---------------------------------------------------------------------------
// The multi-type deformation-ring slice: the g_i(J,I) relation family, its
// tangent spaces, regular parameters mod minimal primes, and the ideal-sum
// and cyclicity lemmas.
// ---------------------------------------------------------------------------

// membership of +-omega^{(k)} in I: 0 = neither, +1, -1 (at most one)
using SignedSet = std::map<int, int>;

// the ring F_p[(X_i,Y_i)_{i<f}, pvar] truncated at the given cutoff; the
// distinguished last variable plays p and maps to 0 over F
TruncatedRing le_ring(long p, int f, int cutoff = 4);
int le_X(int i, int f);
int le_Y(int i, int f);
int le_pvar(int f);

// the relation g_i(J,I) per the 3x3 table; the relation index i reads the
// conditions at k = f-1-i
TPoly le_relation(const TruncatedRing& R, int i, int f, const std::set<int>& S_rho, const std::set<int>& J,
                  const SignedSet& I);
std::vector<TPoly> le_relations(const TruncatedRing& R, int f, const std::set<int>& S_rho, const std::set<int>& J,
                                const SignedSet& I);

// I included in I': divisibility g_i(J,I') | g_i(J,I) for all i
bool le_divisibility(const TruncatedRing& R, int f, const std::set<int>& S_rho, const std::set<int>& J,
                     const SignedSet& I, const SignedSet& Iprime);

// tangent dimension of a quotient by the relations after p -> 0, counting
// extra_formal_vars additional free variables
long tangent_dim(const TruncatedRing& R, const std::vector<TPoly>& relations, int pvar_index, int extra_formal_vars);

// the lemma on U_j = X_j + Y_j over F[[(X_j,Y_j)]]/(X_jY_j): the images form
// a regular system of parameters of the quotient by each minimal prime
bool regular_params_mod_primes(long p, int nJ);
// control: replacing U_j by X_j fails at the prime (X_j)
bool regular_params_bad_choice_fails(long p, int nJ);

// tangent-ideal lemma: both verdicts (tangent equality, sum equality); the
// hypothesis "R/I_0 regular" is checked first
struct TangentIdealVerdict {
    bool hypothesis_ok = false;
    bool tangent_equal = false;
    bool sum_equal = false;
};
TangentIdealVerdict tangent_ideal_equiv(const TruncatedRing& R, const std::vector<TPoly>& I0,
                                        const std::vector<TPoly>& I1, const std::vector<TPoly>& I2);

// cyclicity lemma: M = ker(R/I_1 + R/I_2 -> R/I_0); returns the minimal
// number of generators of M and the sum-equality verdict
struct CyclicityVerdict {
    long min_generators = 0;
    bool cyclic = false;
    bool sum_equal = false;
};
CyclicityVerdict cyclicity_check(const TruncatedRing& R, const std::vector<TPoly>& I0, const std::vector<TPoly>& I1,
                                 const std::vector<TPoly>& I2);

}  // namespace modplab
