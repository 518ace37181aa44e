#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modplab/fplinalg.hpp"
#include "modplab/ue.hpp"
#include "modplab/weights.hpp"

namespace modplab {

enum class ComplexKind { koszul_e, koszul_f, koszul_0, type_e, type_f, type_0 };
ComplexKind complex_kind_of(const std::string& name);
std::string complex_kind_name(ComplexKind k);

// one free summand U(g)_chi(-shift); the character is kept as a formal
// alpha-exponent vector, resolved to an actual HChar at a given p when needed
struct GFSummand {
    std::vector<long> weight;  // alpha_i exponents
    long shift;
    bool koszul = false;  // member of the Koszul-type subcomplex
};

using GradedFree = std::vector<GFSummand>;
using UMatrix = std::vector<std::vector<UElem>>;  // [src summand][tgt summand]

struct GradedComplex {
    int f = 1;
    long p = 7;
    std::string name;
    std::vector<GradedFree> modules;  // modules[0] = G_0
    std::vector<UMatrix> diffs;       // diffs[i] : G_{i+1} -> G_i  (i = 0..len-2)

    int length() const { return static_cast<int>(modules.size()) - 1; }
    // generating function of the ranks, coefficient l = rank G_l
    std::vector<long> rank_vector() const;
    // sum of (-1)^i h_{G_i}
    HilbertSeries euler_series() const;
};

// the six canonical single-embedding complexes, decorated by alpha_i
GradedComplex build_complex(ComplexKind kind, int twist_index, const Params& P);

// verify d o d = 0 symbolically
bool composites_vanish(const GradedComplex& C);
// verify shifts and characters are consistent with the entries
bool decorations_consistent(const GradedComplex& C);
// Cor (Min-i): for fixed character, shifts differ by 2(l'-l)
bool shift_law_holds(const GradedComplex& C);
// Appendix lemma: every equal-character (source, target) pair of a
// differential has source shift strictly larger
bool minimality_shift_check(const GradedComplex& C);
// Cor (G'-G''): no Koszul-summand character differs from a non-Koszul one
// by alpha_j^{+-1}; throws CharacterCollision on failure when requested
bool character_separation(const GradedComplex& C, bool throw_on_fail = false);

struct DegreeReport {
    int n;
    std::vector<long> dims;          // dim of G_i in degree n (i = 0..len)
    std::vector<long> ranks;         // rank of d_i in degree n (i = 1..len)
    std::vector<long> homology;      // dim H_i in degree n (i = 0..len)
};

struct ExactnessReport {
    std::vector<DegreeReport> degrees;
    bool internal_homology_vanishes = true;  // H_i = 0 for i >= 1 up to cutoff
    std::vector<long> h0_dims;               // degreewise dim of H_0
};

ExactnessReport check_exact(const GradedComplex& C, int cutoff);

// pole order at t=1 of the Euler series
int pole_criterion(const GradedComplex& C);

// degreewise dimensions of U / (left ideal generated by gens)
std::vector<long> quotient_dims(const std::vector<UElem>& gens, int cutoff);

// tensor product over the embeddings; kinds[i] is the factor for embedding i,
// with type_f factors twisted by an extra alpha_i when twist_f is set
GradedComplex tensor_complexes(const std::vector<ComplexKind>& kinds, const std::vector<bool>& twist_f,
                               const Params& P);

// the factor assignment of eq (tau-eps): type_0 off J, type_e for +, twisted
// type_f for -; all-Koszul variant selects the subcomplex kinds
std::vector<ComplexKind> tauJ_kinds(const std::set<int>& J, const std::vector<int>& eps, const Params& P);

HChar summand_char(const GFSummand& s, const Params& P);

}  // namespace modplab
