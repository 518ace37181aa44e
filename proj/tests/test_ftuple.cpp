#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modplab/gamma.hpp"
#include "modplab/iwahori.hpp"
#include "modplab/rho.hpp"
#include "modplab/weights.hpp"

using namespace modplab;

namespace {

// all 6 term shapes of the composition table
std::vector<AffineTerm> table_terms(long p) {
    return {term_x(),         term_x_plus(-1),      term_x_plus(1),
            term_c_minus_x(p - 2), term_c_minus_x(p - 1), term_c_minus_x(p - 3)};
}

// the 6x6 table transcribed row by row; entry [i][j] = row term i composed
// with column term j, encoded as (sign, offset shifted by s*p) pairs below
AffineTerm golden_entry(int row, int col, long p) {
    // offsets relative to p: value = a + b*p + sign*x encoded as {sign, a, b}
    struct E {
        int sign;
        long a, b;
    };
    static const E tab[6][6] = {
        // columns: x, x-1, x+1, p-2-x, p-1-x, p-3-x
        {{1, 0, 0}, {1, -1, 0}, {1, 1, 0}, {-1, -2, 1}, {-1, -1, 1}, {-1, -3, 1}},
        {{1, -1, 0}, {1, -2, 0}, {1, 0, 0}, {-1, -3, 1}, {-1, -2, 1}, {-1, -4, 1}},
        {{1, 1, 0}, {1, 0, 0}, {1, 2, 0}, {-1, -1, 1}, {-1, 0, 1}, {-1, -2, 1}},
        {{-1, -2, 1}, {-1, -1, 1}, {-1, -3, 1}, {1, 0, 0}, {1, -1, 0}, {1, 1, 0}},
        {{-1, -1, 1}, {-1, 0, 1}, {-1, -2, 1}, {1, 1, 0}, {1, 0, 0}, {1, 2, 0}},
        {{-1, -3, 1}, {-1, -2, 1}, {-1, -4, 1}, {1, -1, 0}, {1, -2, 0}, {1, 0, 0}},
    };
    const E& e = tab[row][col];
    return AffineTerm{e.sign, e.a + e.b * p};
}

}  // namespace

TEST_CASE("composition table, all 36 entries") {
    for (long p : {7L, 11L, 13L}) {
        auto terms = table_terms(p);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                AffineTerm got = terms[i].compose(terms[j]);
                CHECK(got == golden_entry(i, j, p));
            }
    }
}

TEST_CASE("compose examples") {
    long p = 11;
    CHECK(term_x_plus(1).compose(term_c_minus_x(p - 2)) == term_c_minus_x(p - 1));
    CHECK(term_c_minus_x(p - 3).compose(term_x_plus(-1)) == term_c_minus_x(p - 2));
    Params P(p, 2);
    FTuple id = identity_tuple(2);
    FTuple mu = mu_op(0, +1, P);
    CHECK(compose(id, mu) == mu);
    CHECK(compose(mu, id) == mu);
}

TEST_CASE("invert is a two-sided inverse on I, S preserved") {
    for (int f : {1, 2, 3}) {
        Params P(11, f);
        for (auto& lam : enumerate_I(P)) {
            FTuple inv = invert(lam);
            CHECK(compose(lam, inv) == identity_tuple(f));
            CHECK(compose(inv, lam) == identity_tuple(f));
            CHECK(S_of(inv, P) == S_of(lam, P));
            CHECK(in_I(inv, P));
        }
    }
}

TEST_CASE("compose associativity, randomized") {
    Params P(13, 3);
    std::mt19937_64 rng(7);
    auto rnd_term = [&]() {
        int sign = (rng() & 1) ? 1 : -1;
        long off = static_cast<long>(rng() % 25) - 12;
        return AffineTerm{sign, off};
    };
    for (int it = 0; it < 200; ++it) {
        FTuple a, b, c;
        for (int i = 0; i < 3; ++i) {
            a.t.push_back(rnd_term());
            b.t.push_back(rnd_term());
            c.t.push_back(rnd_term());
        }
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("S(lambda o mu) = S(lambda) symmetric-difference S(mu), with compatibility") {
    Params P(11, 2);
    auto shapes = table_terms(P.p);
    std::vector<FTuple> all;
    for (auto& a0 : shapes)
        for (auto& a1 : shapes) all.push_back(FTuple{{a0, a1}});
    for (auto& lam : all)
        for (auto& mu : all) {
            FTuple c = compose(lam, mu);
            auto sl = S_of(lam, P), sm = S_of(mu, P), sc = S_of(c, P);
            std::set<int> sym;
            for (int i = 0; i < 2; ++i)
                if (sl.count(i) != sm.count(i)) sym.insert(i);
            CHECK(sc == sym);
            CHECK(is_compatible(c, mu, P));
        }
}

TEST_CASE("e_of examples and branches") {
    {
        Params P(7, 1);
        CHECK(e_of(identity_tuple(1), P) == AffineForm{0, {0}});
        // p-1-x_0 -> x_0 (second branch)
        FTuple lam{{term_c_minus_x(P.p - 1)}};
        CHECK(e_of(lam, P) == AffineForm{0, {1}});
    }
    {
        Params P(11, 2);
        FTuple lam{{term_c_minus_x(P.p - 2), term_x_plus(1)}};
        CHECK(e_of(lam, P) == AffineForm{1 - P.p, {1, 0}});
    }
}

TEST_CASE("e_of integrality on I, P, PD, RD") {
    for (int f : {1, 2, 3}) {
        Params P(11, f);
        for (auto& lam : enumerate_I(P)) CHECK_NOTHROW(e_of(lam, P));
        for (long mask = 0; mask < (1L << f); ++mask) {
            std::set<int> J;
            for (int i = 0; i < f; ++i)
                if ((mask >> i) & 1) J.insert(i);
            CHECK_NOTHROW(e_of(lambda_P(J, P), P));
        }
        for (auto& lam : enumerate_RD(P)) CHECK_NOTHROW(e_of(lam, P));
        std::set<int> almost;
        for (int i = 0; i + 1 < f; ++i) almost.insert(i);
        RhoData rho{std::vector<long>(f, 3), almost, false};
        for (auto& lam : enumerate_PD(rho, P)) CHECK_NOTHROW(e_of(lam, P));
        RhoData rho_ss{std::vector<long>(f, 3), {}, true};
        for (auto& lam : enumerate_RD(P))
            if (rd_passes_filter(lam, rho_ss.J_rho, P)) CHECK_NOTHROW(e_of(lam, P));
    }
    // a parity violation surfaces as the named error
    Params P1(7, 1);
    FTuple bad{{term_x_plus(1)}};
    CHECK_THROWS_AS(e_of(bad, P1), NonIntegralExponent);
}

TEST_CASE("evaluate examples") {
    Params P(7, 1);
    SerreWeight sigma({2}, 0, P);
    FTuple lam{{term_c_minus_x(P.p - 1)}};
    auto w = evaluate(lam, sigma, P);
    REQUIRE(w.has_value());
    CHECK(w->r == std::vector<long>{4});
    CHECK(w->twist == 2);
    CHECK(*evaluate(identity_tuple(1), sigma, P) == sigma);
    SerreWeight top({P.p - 1}, 0, P);
    CHECK(!evaluate(FTuple{{term_x_plus(1)}}, top, P).has_value());
}

TEST_CASE("weights_isomorphic and twist reduction") {
    Params P(7, 2);
    SerreWeight a({3, 4}, 5, P);
    SerreWeight b({3, 4}, 5 + P.qm1(), P);
    CHECK(weights_isomorphic(a, b));
    CHECK_FALSE(weights_isomorphic(a, SerreWeight({3, 4}, 6, P)));
}

TEST_CASE("check_cond_lambda holds on I and distinguishes evaluations") {
    for (int f : {1, 2, 3}) {
        Params P(11, f);
        auto I = enumerate_I(P);
        for (auto& a : I)
            for (auto& b : I) CHECK(check_cond_lambda(a, b, P));
        // 2-generic sigma: evaluations pairwise distinct
        SerreWeight sigma(std::vector<long>(f, 4), 0, P);
        std::vector<SerreWeight> evals;
        for (auto& lam : I) {
            auto w = evaluate(lam, sigma, P);
            REQUIRE(w.has_value());
            evals.push_back(*w);
        }
        for (size_t i = 0; i < evals.size(); ++i)
            for (size_t j = i + 1; j < evals.size(); ++j) CHECK_FALSE(weights_isomorphic(evals[i], evals[j]));
    }
}

TEST_CASE("compatibility, leq, n_generic") {
    Params P(11, 2);
    FTuple a{{term_x_plus(1), term_x()}};
    FTuple b{{term_x_plus(-1), term_x_plus(1)}};
    CHECK_FALSE(compatible_at(a, b, 0, P));
    CHECK(leq(identity_tuple(2), a, P));
    SerreWeight s({P.p - 2 - 3, P.p - 2 - 3}, 0, P);
    CHECK(n_generic(s, 3, P));
    CHECK_FALSE(n_generic(s, 4, P));
}

TEST_CASE("char arithmetic") {
    Params P(7, 2);
    HChar a = alpha_i(0, P);
    CHECK(a.a == 1);
    CHECK(a.b == P.qm1() - 1);
    HChar a1 = alpha_i(1, P);
    CHECK(a1.a == P.p);
    CHECK(a.mul(a.inv(P), P) == HChar(0, 0, P));
    CHECK(a.sconj(P) == a.inv(P));
    SerreWeight s({3, 4}, 2, P);
    HChar cs = char_of_weight(s, P);
    CHECK(cs.a == P.mod_qm1(3 + 4 * P.p + 2));
    CHECK(cs.b == 2);
}

TEST_CASE("evaluate equality implies tuple equality under the chain condition") {
    std::mt19937_64 rng(41);
    for (int f : {1, 2, 3}) {
        Params P(11, f);
        SerreWeight sigma(std::vector<long>(f, 0), 0, P);  // 0-generic is enough
        std::vector<long> r(f);
        for (auto& x : r) x = static_cast<long>(rng() % (P.p - 1));
        sigma = SerreWeight(r, 0, P);
        int done = 0;
        while (done < 300) {
            FTuple a, b;
            for (int i = 0; i < f; ++i) {
                a.t.push_back(AffineTerm{(rng() & 1) ? 1 : -1, static_cast<long>(rng() % (2 * P.p)) - P.p / 2});
                b.t.push_back(AffineTerm{(rng() & 1) ? 1 : -1, static_cast<long>(rng() % (2 * P.p)) - P.p / 2});
            }
            if (!check_cond_lambda(a, b, P)) continue;
            std::optional<SerreWeight> wa, wb;
            try {
                wa = evaluate(a, sigma, P);
                wb = evaluate(b, sigma, P);
            } catch (const NonIntegralExponent&) {
                continue;
            }
            if (!wa || !wb) continue;
            ++done;
            if (*wa == *wb) CHECK(a == b);
        }
    }
}
