#include "modplab/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modplab {

ComplexKind complex_kind_of(const std::string& name) {
    if (name == "koszul_e") return ComplexKind::koszul_e;
    if (name == "koszul_f") return ComplexKind::koszul_f;
    if (name == "koszul_0") return ComplexKind::koszul_0;
    if (name == "type_e") return ComplexKind::type_e;
    if (name == "type_f") return ComplexKind::type_f;
    if (name == "type_0") return ComplexKind::type_0;
    throw ConfigError("unknown complex kind: " + name);
}

std::string complex_kind_name(ComplexKind k) {
    switch (k) {
        case ComplexKind::koszul_e: return "koszul_e";
        case ComplexKind::koszul_f: return "koszul_f";
        case ComplexKind::koszul_0: return "koszul_0";
        case ComplexKind::type_e: return "type_e";
        case ComplexKind::type_f: return "type_f";
        case ComplexKind::type_0: return "type_0";
    }
    return "?";
}

HChar summand_char(const GFSummand& s, const Params& P) { return alpha_pow(s.weight, P); }

std::vector<long> GradedComplex::rank_vector() const {
    std::vector<long> r;
    for (auto& m : modules) r.push_back(static_cast<long>(m.size()));
    return r;
}

HilbertSeries GradedComplex::euler_series() const {
    HilbertSeries s = HilbertSeries::zero();
    HilbertSeries hU = HilbertSeries::of_U(f);
    for (size_t i = 0; i < modules.size(); ++i) {
        HilbertSeries term = HilbertSeries::zero();
        for (auto& sm : modules[i]) term = term.add(HilbertSeries::monomial(static_cast<int>(sm.shift)));
        term = term.mul(hU);
        s = (i % 2 == 0) ? s.add(term) : s.sub(term);
    }
    return s;
}

namespace {

struct Builder {
    long p;

    UElem E, F, H, E2, E3, F2, F3, EF, FE, ZERO, ONE;
    Builder(long p_) : p(p_) {
        E = u_gen(1, p, 0, 2);
        F = u_gen(1, p, 0, 0);
        H = u_gen(1, p, 0, 1);
        E2 = u_mul(E, E);
        E3 = u_mul(E2, E);
        F2 = u_mul(F, F);
        F3 = u_mul(F2, F);
        EF = u_mul(E, F);
        FE = u_mul(F, E);
        ZERO = u_zero(1, p);
        ONE = u_one(1, p);
    }
    UElem neg(const UElem& x) const { return x.scale(p - 1); }
    UElem sc(const UElem& x, long c) const { return x.scale(((c % p) + p) % p); }
};

GFSummand mk(long w, long shift, bool koszul) { return GFSummand{{w}, shift, koszul}; }

}  // namespace

GradedComplex build_complex(ComplexKind kind, int twist_index, const Params& P) {
    if (P.p <= 5) {
        // the complexes themselves exist for any p; the character statements
        // need p > 5 and are checked separately
    }
    Builder B(P.p);
    GradedComplex C;
    C.f = 1;
    C.p = P.p;
    C.name = complex_kind_name(kind);
    (void)twist_index;  // single-embedding complexes always use alpha_0 slots

    switch (kind) {
        case ComplexKind::koszul_e:
            C.modules = {{mk(0, 0, true)}, {mk(1, 1, true), mk(0, 2, true)}, {mk(1, 3, true)}};
            C.diffs = {{{B.E}, {B.H}}, {{B.neg(B.H), B.E}}};
            break;
        case ComplexKind::koszul_f:
            C.modules = {{mk(0, 0, true)}, {mk(-1, 1, true), mk(0, 2, true)}, {mk(-1, 3, true)}};
            C.diffs = {{{B.F}, {B.H}}, {{B.neg(B.H), B.F}}};
            break;
        case ComplexKind::koszul_0:
            C.modules = {{mk(0, 0, true)}, {mk(0, 2, true), mk(0, 2, true)}, {mk(0, 4, true)}};
            C.diffs = {{{B.EF}, {B.FE}}, {{B.neg(B.FE), B.EF}}};
            break;
        case ComplexKind::type_e:
            C.modules = {{mk(0, 0, true)},
                         {mk(1, 1, true), mk(0, 2, true), mk(-3, 3, false)},
                         {mk(1, 3, true), mk(-2, 4, false), mk(-3, 5, false)},
                         {mk(-2, 6, false)}};
            C.diffs = {{{B.E}, {B.H}, {B.F3}},
                       {{B.neg(B.H), B.E, B.ZERO}, {B.neg(B.F3), B.sc(B.F2, -3), B.E}, {B.ZERO, B.F3, B.neg(B.H)}},
                       {{B.neg(B.F3), B.H, B.E}}};
            break;
        case ComplexKind::type_f:
            C.modules = {{mk(0, 0, true)},
                         {mk(-1, 1, true), mk(0, 2, true), mk(3, 3, false)},
                         {mk(-1, 3, true), mk(2, 4, false), mk(3, 5, false)},
                         {mk(2, 6, false)}};
            C.diffs = {{{B.F}, {B.H}, {B.E3}},
                       {{B.neg(B.H), B.F, B.ZERO}, {B.neg(B.E3), B.sc(B.E2, 3), B.F}, {B.ZERO, B.E3, B.neg(B.H)}},
                       {{B.neg(B.E3), B.H, B.F}}};
            break;
        case ComplexKind::type_0:
            C.modules = {{mk(0, 0, true)},
                         {mk(3, 3, false), mk(0, 2, true), mk(0, 2, true), mk(-3, 3, false)},
                         {mk(3, 5, false), mk(2, 4, false), mk(0, 4, true), mk(-2, 4, false), mk(-3, 5, false)},
                         {mk(2, 6, false), mk(-2, 6, false)}};
            C.diffs = {{{B.E3}, {B.EF}, {B.FE}, {B.F3}},
                       {{B.H, B.neg(B.E3), B.E3, B.ZERO},
                        {B.F, B.sc(B.E2, 2), B.sc(B.E2, -3), B.ZERO},
                        {B.ZERO, B.neg(B.FE), B.EF, B.ZERO},
                        {B.ZERO, B.sc(B.F2, -3), B.sc(B.F2, 2), B.E},
                        {B.ZERO, B.neg(B.F3), B.F3, B.H}},
                       {{B.F, B.neg(B.H), B.neg(B.E2), B.ZERO, B.ZERO},
                        {B.ZERO, B.ZERO, B.neg(B.F2), B.neg(B.H), B.E}}};
            break;
    }
    return C;
}

bool composites_vanish(const GradedComplex& C) {
    for (size_t i = 0; i + 1 < C.diffs.size(); ++i) {
        const UMatrix& A2 = C.diffs[i + 1];  // G_{i+2} -> G_{i+1}
        const UMatrix& A1 = C.diffs[i];      // G_{i+1} -> G_i
        for (size_t r = 0; r < A2.size(); ++r)
            for (size_t c = 0; c < A1[0].size(); ++c) {
                UElem s = u_zero(C.f, C.p);
                for (size_t k = 0; k < A1.size(); ++k) s = s + u_mul(A2[r][k], A1[k][c]);
                if (!s.is_zero()) return false;
            }
    }
    return true;
}

bool decorations_consistent(const GradedComplex& C) {
    for (size_t i = 0; i < C.diffs.size(); ++i) {
        const GradedFree& src = C.modules[i + 1];
        const GradedFree& tgt = C.modules[i];
        const UMatrix& A = C.diffs[i];
        if (A.size() != src.size()) return false;
        for (size_t r = 0; r < A.size(); ++r) {
            if (A[r].size() != tgt.size()) return false;
            for (size_t c = 0; c < A[r].size(); ++c) {
                const UElem& e = A[r][c];
                if (e.is_zero()) continue;
                int d = e.degree();
                if (d < 0) return false;  // inhomogeneous entry
                if (src[r].shift != tgt[c].shift + d) return false;
                std::vector<long> w;
                if (!e.weight(w)) return false;
                for (int k = 0; k < C.f; ++k)
                    if (src[r].weight[k] != tgt[c].weight[k] + w[k]) return false;
            }
        }
    }
    return true;
}

bool shift_law_holds(const GradedComplex& C) {
    std::map<std::vector<long>, std::vector<std::pair<long, long>>> by_char;  // weight -> (l, shift)
    for (size_t l = 0; l < C.modules.size(); ++l)
        for (auto& s : C.modules[l]) by_char[s.weight].push_back({static_cast<long>(l), s.shift});
    for (auto& [w, occ] : by_char)
        for (auto& [l1, a1] : occ)
            for (auto& [l2, a2] : occ)
                if (a2 != a1 + 2 * (l2 - l1)) return false;
    return true;
}

bool minimality_shift_check(const GradedComplex& C) {
    Params P(C.p, C.f);
    for (size_t i = 0; i < C.diffs.size(); ++i) {
        const GradedFree& src = C.modules[i + 1];
        const GradedFree& tgt = C.modules[i];
        for (auto& s : src)
            for (auto& t : tgt)
                if (summand_char(s, P) == summand_char(t, P) && !(s.shift > t.shift)) return false;
    }
    return true;
}

bool character_separation(const GradedComplex& C, bool throw_on_fail) {
    Params P(C.p, C.f);
    std::set<HChar> kosz, rest;
    for (auto& m : C.modules)
        for (auto& s : m) (s.koszul ? kosz : rest).insert(summand_char(s, P));
    for (auto& a : kosz)
        for (auto& b : rest) {
            HChar ratio = b.mul(a.inv(P), P);
            for (int j = 0; j < P.f; ++j)
                for (int sgn : {+1, -1}) {
                    HChar aj = sgn == 1 ? alpha_i(j, P) : alpha_i(j, P).inv(P);
                    if (ratio == aj) {
                        if (throw_on_fail)
                            throw CharacterCollision("Koszul/non-Koszul characters differ by alpha_j^{+-1}");
                        return false;
                    }
                }
        }
    return true;
}

namespace {

// dense matrix of the degree-n component of a differential
FpMat degree_matrix(const GradedComplex& C, size_t idiff, int n, long& src_dim, long& tgt_dim) {
    const GradedFree& src = C.modules[idiff + 1];
    const GradedFree& tgt = C.modules[idiff];
    std::vector<std::vector<MonoF>> src_bases, tgt_bases;
    std::vector<std::map<MonoF, size_t>> tgt_index;
    src_dim = tgt_dim = 0;
    for (auto& s : src) {
        int d = n - static_cast<int>(s.shift);
        src_bases.push_back(d >= 0 ? u_basis(C.f, C.p, d) : std::vector<MonoF>{});
        src_dim += src_bases.back().size();
    }
    for (auto& t : tgt) {
        int d = n - static_cast<int>(t.shift);
        tgt_bases.push_back(d >= 0 ? u_basis(C.f, C.p, d) : std::vector<MonoF>{});
        std::map<MonoF, size_t> idx;
        for (size_t k = 0; k < tgt_bases.back().size(); ++k) idx[tgt_bases.back()[k]] = k;
        tgt_index.push_back(std::move(idx));
        tgt_dim += tgt_bases.back().size();
    }
    FpMat M(C.p, static_cast<size_t>(src_dim), static_cast<size_t>(tgt_dim));
    size_t row0 = 0;
    for (size_t r = 0; r < src.size(); ++r) {
        for (size_t bi = 0; bi < src_bases[r].size(); ++bi) {
            size_t col0 = 0;
            for (size_t c = 0; c < tgt.size(); ++c) {
                const UElem& e = C.diffs[idiff][r][c];
                if (!e.is_zero()) {
                    UElem prod = u_mul(u_mono(C.f, C.p, src_bases[r][bi]), e);
                    for (auto& [m, co] : prod.terms) {
                        auto it = tgt_index[c].find(m);
                        if (it == tgt_index[c].end()) throw ModplabError("degree bookkeeping error");
                        M.set(row0 + bi, col0 + it->second, co);
                    }
                }
                col0 += tgt_bases[c].size();
            }
        }
        row0 += src_bases[r].size();
    }
    return M;
}

}  // namespace

ExactnessReport check_exact(const GradedComplex& C, int cutoff) {
    ExactnessReport rep;
    int len = C.length();
    for (int n = 0; n <= cutoff; ++n) {
        DegreeReport dr;
        dr.n = n;
        dr.dims.resize(len + 1);
        for (int i = 0; i <= len; ++i) {
            long d = 0;
            for (auto& s : C.modules[i]) {
                int k = n - static_cast<int>(s.shift);
                if (k >= 0) d += u_graded_dim(C.f, k);
            }
            dr.dims[i] = d;
        }
        dr.ranks.assign(len, 0);
        for (int i = 0; i < len; ++i) {
            long sd, td;
            FpMat M = degree_matrix(C, i, n, sd, td);
            dr.ranks[i] = static_cast<long>(M.rank());
        }
        dr.homology.assign(len + 1, 0);
        for (int i = 0; i <= len; ++i) {
            long ker = (i == 0) ? dr.dims[0] : dr.dims[i] - dr.ranks[i - 1];
            long im = (i == len) ? 0 : dr.ranks[i];
            dr.homology[i] = ker - im;
            if (i >= 1 && dr.homology[i] != 0) rep.internal_homology_vanishes = false;
        }
        rep.h0_dims.push_back(dr.homology[0]);
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

int pole_criterion(const GradedComplex& C) { return C.euler_series().pole_order_at_1(); }

std::vector<long> quotient_dims(const std::vector<UElem>& gens, int cutoff) {
    if (gens.empty()) throw ConfigError("quotient_dims needs at least one generator");
    int f = gens[0].f;
    long p = gens[0].p;
    std::vector<long> out;
    for (int n = 0; n <= cutoff; ++n) {
        auto basis = u_basis(f, p, n);
        std::map<MonoF, size_t> index;
        for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
        std::vector<std::vector<int32_t>> vecs;
        for (auto& g : gens) {
            int dg = g.degree();
            if (dg < 0) throw ConfigError("generators must be nonzero homogeneous");
            if (dg > n) continue;
            for (auto& m : u_basis(f, p, n - dg)) {
                UElem prod = u_mul(u_mono(f, p, m), g);
                std::vector<int32_t> v(basis.size(), 0);
                for (auto& [mm, co] : prod.terms) v[index.at(mm)] = static_cast<int32_t>(co);
                vecs.push_back(std::move(v));
            }
        }
        out.push_back(static_cast<long>(basis.size()) - static_cast<long>(span_dim(p, vecs, basis.size())));
    }
    return out;
}

namespace {

// re-embed a single-embedding element at coordinate i of an f-fold algebra
UElem embed_at(const UElem& x, int i, int f, long p) {
    UElem r(f, p);
    for (auto& [m, c] : x.terms) {
        MonoF mm(f, Mono1{0, 0, 0});
        mm[i] = m[0];
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace

GradedComplex tensor_complexes(const std::vector<ComplexKind>& kinds, const std::vector<bool>& twist_f,
                               const Params& P) {
    const int f = P.f;
    if (static_cast<int>(kinds.size()) != f || static_cast<int>(twist_f.size()) != f)
        throw ConfigError("tensor_complexes needs one factor per embedding");
    std::vector<GradedComplex> factors;
    for (int i = 0; i < f; ++i) factors.push_back(build_complex(kinds[i], i, P));

    // summand of the tensor = one summand index per factor; weight vector has
    // the factor weight at slot i (plus a twist for twisted type_f factors)
    struct TSummand {
        std::vector<int> level;  // l_i
        std::vector<int> idx;    // summand index inside factor level
    };
    int total_len = 0;
    for (auto& F : factors) total_len += F.length();

    GradedComplex C;
    C.f = f;
    C.p = P.p;
    C.name = "tensor";
    C.modules.resize(total_len + 1);
    std::vector<std::vector<TSummand>> summands(total_len + 1);

    // enumerate all index tuples
    std::vector<TSummand> all;
    TSummand cur;
    cur.level.assign(f, 0);
    cur.idx.assign(f, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == f) {
            all.push_back(cur);
            return;
        }
        for (int l = 0; l <= factors[i].length(); ++l)
            for (int k = 0; k < static_cast<int>(factors[i].modules[l].size()); ++k) {
                cur.level[i] = l;
                cur.idx[i] = k;
                self(self, i + 1);
            }
    };
    rec(rec, 0);
    std::sort(all.begin(), all.end(), [](const TSummand& a, const TSummand& b) {
        return std::make_pair(a.level, a.idx) < std::make_pair(b.level, b.idx);
    });
    for (auto& s : all) {
        int l = 0;
        for (int i = 0; i < f; ++i) l += s.level[i];
        GFSummand g;
        g.weight.assign(f, 0);
        g.shift = 0;
        g.koszul = true;
        for (int i = 0; i < f; ++i) {
            const GFSummand& fs = factors[i].modules[s.level[i]][s.idx[i]];
            g.weight[i] = fs.weight[0] + (twist_f[i] ? 1 : 0);
            g.shift += fs.shift;
            g.koszul = g.koszul && fs.koszul;
        }
        C.modules[l].push_back(g);
        summands[l].push_back(s);
    }

    // total differential with Koszul signs
    C.diffs.resize(total_len);
    for (int l = 1; l <= total_len; ++l) {
        UMatrix A(summands[l].size(), std::vector<UElem>(summands[l - 1].size(), u_zero(f, P.p)));
        for (size_t r = 0; r < summands[l].size(); ++r) {
            const TSummand& s = summands[l][r];
            for (int i = 0; i < f; ++i) {
                if (s.level[i] == 0) continue;
                // apply d^{(i)}: level_i drops by one
                int sign = 0;
                for (int k = 0; k < i; ++k) sign += s.level[k];
                const UMatrix& Fd = factors[i].diffs[s.level[i] - 1];
                for (size_t c = 0; c < summands[l - 1].size(); ++c) {
                    const TSummand& t = summands[l - 1][c];
                    bool match = true;
                    for (int k = 0; k < f; ++k) {
                        if (k == i) {
                            if (t.level[k] != s.level[k] - 1) match = false;
                        } else if (t.level[k] != s.level[k] || t.idx[k] != s.idx[k]) {
                            match = false;
                        }
                    }
                    if (!match) continue;
                    const UElem& entry = Fd[s.idx[i]][t.idx[i]];
                    if (entry.is_zero()) continue;
                    UElem em = embed_at(entry, i, f, P.p);
                    A[r][c] = A[r][c] + (sign % 2 == 0 ? em : em.scale(P.p - 1));
                }
            }
        }
        C.diffs[l - 1] = std::move(A);
    }
    return C;
}

std::vector<ComplexKind> tauJ_kinds(const std::set<int>& J, const std::vector<int>& eps, const Params& P) {
    std::vector<ComplexKind> kinds(P.f, ComplexKind::type_0);
    size_t k = 0;
    for (int i : J) {
        int e = eps.at(k++);
        kinds[i] = e > 0 ? ComplexKind::type_e : ComplexKind::type_f;
    }
    return kinds;
}

}  // namespace modplab
