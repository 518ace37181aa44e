#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modplab/ue.hpp"

using namespace modplab;

TEST_CASE("defining relation and the commutation identities") {
    for (long p : {7L, 11L, 13L}) {
        UElem e = u_gen(1, p, 0, 2), f = u_gen(1, p, 0, 0), h = u_gen(1, p, 0, 1);
        CHECK(u_mul(e, f) == u_mul(f, e) + h);
        // h central
        CHECK(u_mul(h, e) == u_mul(e, h));
        CHECK(u_mul(h, f) == u_mul(f, h));
        // e^3 f - f e^3 = 3 e^2 h
        UElem e3 = u_pow(e, 3);
        CHECK(u_mul(e3, f) - u_mul(f, e3) == u_mul(u_pow(e, 2), h).scale(3));
        // e f^3 - f^3 e = 3 f^2 h
        UElem f3 = u_pow(f, 3);
        CHECK(u_mul(e, f3) - u_mul(f3, e) == u_mul(u_pow(f, 2), h).scale(3));
        // (ef)(fe) = (fe)(ef)
        UElem ef = u_mul(e, f), fe = u_mul(f, e);
        CHECK(u_mul(ef, fe) == u_mul(fe, ef));
    }
}

TEST_CASE("associativity and distributivity, randomized") {
    std::mt19937_64 rng(5);
    long p = 11;
    auto rnd = [&](int f) {
        UElem r(f, p);
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            MonoF m(f);
            for (int i = 0; i < f; ++i)
                m[i] = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 2), static_cast<int>(rng() % 3)};
            r.add_term(m, 1 + static_cast<long>(rng() % (p - 1)));
        }
        return r;
    };
    for (int f : {1, 2}) {
        for (int it = 0; it < 60; ++it) {
            UElem a = rnd(f), b = rnd(f), c = rnd(f);
            CHECK(u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c)));
            CHECK(u_mul(a, b + c) == u_mul(a, b) + u_mul(a, c));
            CHECK(u_mul(a + b, c) == u_mul(a, c) + u_mul(b, c));
        }
    }
}

TEST_CASE("graded dimensions match the Hilbert series to degree 30") {
    auto h1 = HilbertSeries::of_U(1);
    auto co = h1.coefficients(30);
    CHECK(co[0] == 1);
    CHECK(co[1] == 2);
    CHECK(co[2] == 4);
    CHECK(co[3] == 6);
    for (int n = 0; n <= 30; ++n) {
        CHECK(u_graded_dim(1, n) == co[n]);
        CHECK(static_cast<long>(u_basis(1, 7, n).size()) == co[n]);
    }
    auto h2 = HilbertSeries::of_U(2);
    auto co2 = h2.coefficients(16);
    for (int n = 0; n <= 16; ++n) CHECK(u_graded_dim(2, n) == co2[n]);
}

TEST_CASE("Hilbert series arithmetic and pole orders") {
    auto hU = HilbertSeries::of_U(1);
    CHECK(hU.pole_order_at_1() == 3);
    // (1 - t) * hU has pole order 2
    HilbertSeries one = HilbertSeries::monomial(0);
    HilbertSeries t = HilbertSeries::monomial(1);
    auto num = one.sub(t);
    CHECK(num.mul(hU).pole_order_at_1() == 2);
    // equality as rational functions: 1/(1-t) == (1+t)/(1-t^2)
    HilbertSeries a, b;
    a.num = {1};
    a.den = {1};
    b.num = {1, 1};
    b.den = {2};
    CHECK(a == b);
    CHECK(a.add(b.sub(b)) == a);
    // polynomial (finite) series: pole order <= 0
    CHECK(one.pole_order_at_1() == 0);
    CHECK(num.pole_order_at_1() == -1);
}
