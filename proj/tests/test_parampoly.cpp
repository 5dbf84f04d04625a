#include "doctest.h"

#include "ellop/parampoly.hpp"
#include "fixtures.hpp"

using namespace ellop;

namespace {

ParamPoly random_poly(fixtures::Rng& rng, const SymbolsPtr& syms) {
    ParamPoly p(syms);
    long nterms = rng.range(0, 4);
    for (long t = 0; t < nterms; ++t) {
        ParamPoly mono = ParamPoly::constant(syms, rat(rng.range(-6, 6), rng.range(1, 4)));
        for (std::size_t i = 0; i < syms->size(); ++i) {
            unsigned e = static_cast<unsigned>(rng.range(0, 2));
            if (e) mono *= ParamPoly::variable(syms, i, e);
        }
        p += mono;
    }
    return p;
}

}  // namespace

TEST_CASE("parameter polynomial basics") {
    auto syms = make_symbols({"lambda"});
    ParamPoly lam = ParamPoly::variable(syms, 0);
    ParamPoly one = ParamPoly::constant(syms, 1);

    SUBCASE("difference of squares") {
        CHECK((lam + one) * (lam - one) == lam * lam - one);
    }
    SUBCASE("additive identity") {
        ParamPoly p = lam * lam + lam.scaled(rat(2, 3));
        CHECK(p + ParamPoly(syms) == p);
    }
    SUBCASE("square two ways") {
        ParamPoly sq = (one + lam) * (one + lam);
        ParamPoly by_add = one + lam + lam + lam * lam;
        CHECK(sq == by_add);
    }
    SUBCASE("alphabet mixing is rejected") {
        auto other = make_symbols({"mu"});
        CHECK_THROWS_AS(lam + ParamPoly::variable(other, 0), std::invalid_argument);
    }
}

TEST_CASE("integrality") {
    auto syms = make_symbols({"lambda"});
    ParamPoly lam = ParamPoly::variable(syms, 0);

    CHECK(lam.pow(2).scaled(Rat(3)) + ParamPoly::constant(syms, 2) == lam * lam.scaled(Rat(3)) + ParamPoly::constant(syms, 2));
    CHECK((lam.pow(2).scaled(Rat(3)) + ParamPoly::constant(syms, 2)).is_integral());
    CHECK_FALSE(lam.scaled(rat(1, 2)).is_integral());
    CHECK(lam.scaled(rat(1, 2)).integrality_witness() == "(1/2)*lambda");
    // (2 lambda + 4) / 2 is exactly lambda + 2
    ParamPoly half = (lam.scaled(Rat(2)) + ParamPoly::constant(syms, 4)).scaled(rat(1, 2));
    CHECK(half.is_integral());
    CHECK(half == lam + ParamPoly::constant(syms, 2));
}

TEST_CASE("reduction mod p") {
    auto syms = make_symbols({"lambda"});
    ParamPoly lam = ParamPoly::variable(syms, 0);

    SUBCASE("all-even polynomial dies mod 2") {
        ParamPoly p = lam.pow(2).scaled(Rat(4)) + lam.scaled(Rat(14)) + ParamPoly::constant(syms, 4);
        CHECK(p.reduce_mod_p(2).is_zero());
    }
    SUBCASE("multiple of 3 dies mod 3") {
        CHECK(lam.scaled(Rat(3)).reduce_mod_p(3).is_zero());
    }
    SUBCASE("negative coefficients lift to least nonnegative residues") {
        CHECK((-lam).reduce_mod_p(3) == lam.scaled(Rat(2)));
    }
    SUBCASE("non-integral input is rejected with a witness") {
        try {
            lam.scaled(rat(1, 2)).reduce_mod_p(2);
            FAIL("expected NonIntegralError");
        } catch (const NonIntegralError& err) {
            CHECK(err.witness == "(1/2)*lambda");
        }
    }
    SUBCASE("odd-coefficient pattern of the published degree-two operator") {
        // 9x^4 - 12(1+L)x^3 + (4 + 14L + 4L^2)x^2 - (4L + 4L^2)x + L^2 mod 2
        auto xs = make_symbols({"lambda", "x"});
        ParamPoly L = ParamPoly::variable(xs, 0);
        ParamPoly x = ParamPoly::variable(xs, 1);
        ParamPoly p = x.pow(4).scaled(Rat(9)) - x.pow(3) * (ParamPoly::constant(xs, 12) + L.scaled(Rat(12))) +
                      x.pow(2) * (ParamPoly::constant(xs, 4) + L.scaled(Rat(14)) + L.pow(2).scaled(Rat(4))) -
                      x * (L.scaled(Rat(4)) + L.pow(2).scaled(Rat(4))) + L.pow(2);
        CHECK(p.reduce_mod_p(2) == x.pow(4) + L.pow(2));
    }
}

TEST_CASE("ring axioms hold on random polynomials") {
    auto syms = make_symbols({"a", "b", "c"});
    fixtures::Rng rng(0x5eed);
    for (int iter = 0; iter < 1000; ++iter) {
        ParamPoly p = random_poly(rng, syms);
        ParamPoly q = random_poly(rng, syms);
        ParamPoly r = random_poly(rng, syms);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("reduction mod p is a ring map") {
    auto syms = make_symbols({"a", "b"});
    fixtures::Rng rng(0xfeed);
    auto random_integral = [&](fixtures::Rng& g) {
        ParamPoly p(syms);
        for (int t = 0, n = static_cast<int>(g.range(0, 4)); t < n; ++t) {
            ParamPoly mono = ParamPoly::constant(syms, Rat(g.range(-9, 9)));
            for (std::size_t i = 0; i < syms->size(); ++i)
                if (g.range(0, 1)) mono *= ParamPoly::variable(syms, i);
            p += mono;
        }
        return p;
    };
    for (long prime : {2l, 3l, 5l}) {
        for (int iter = 0; iter < 200; ++iter) {
            ParamPoly p = random_integral(rng);
            ParamPoly q = random_integral(rng);
            CHECK((p + q).reduce_mod_p(prime) ==
                  (p.reduce_mod_p(prime) + q.reduce_mod_p(prime)).reduce_mod_p(prime));
            CHECK((p * q).reduce_mod_p(prime) ==
                  (p.reduce_mod_p(prime) * q.reduce_mod_p(prime)).reduce_mod_p(prime));
        }
    }
}

TEST_CASE("substitution and evaluation") {
    auto syms = make_symbols({"a", "b"});
    ParamPoly a = ParamPoly::variable(syms, 0);
    ParamPoly b = ParamPoly::variable(syms, 1);
    ParamPoly p = a * a + b.scaled(Rat(3));
    CHECK(p.evaluated({Rat(2), Rat(5)}) == Rat(19));

    auto target = make_symbols({"u"});
    ParamPoly u = ParamPoly::variable(target, 0);
    ParamPoly sub = p.substituted({u, u * u});
    CHECK(sub == u * u + (u * u).scaled(Rat(3)));

    auto bigger = make_symbols({"a", "b", "c"});
    ParamPoly ext = p.extended(bigger);
    CHECK(ext.evaluated({Rat(2), Rat(5), Rat(100)}) == Rat(19));
}

TEST_CASE("semilinear parameter root") {
    auto syms = make_symbols({"lambda"});
    ParamPoly lam = ParamPoly::variable(syms, 0);
    ParamPoly p = lam.pow(4) + ParamPoly::constant(syms, 1);  // (lambda^2 + 1)^2 mod 2
    long dropped = 0;
    CHECK(p.param_root(2, &dropped) == lam.pow(2) + ParamPoly::constant(syms, 1));
    CHECK(dropped == 0);
    ParamPoly q = lam.pow(3) + lam;
    dropped = 0;
    ParamPoly rooted = q.param_root(2, &dropped);
    CHECK(rooted.is_zero());
    CHECK(dropped == 2);
}
