#include "doctest.h"

#include "ellop/psi.hpp"
#include "ellop/report.hpp"
#include "fixtures.hpp"

using namespace ellop;

TEST_CASE("images of lattice generators") {
    SUBCASE("first generator on the symbolic curve") {
        auto curve = WeierstrassCurve::general();
        DividedOp P = tangent_derivation(curve);
        DividedOp expect =
            P.compose(P).scaled(rat(1, 2)) + P.scaled(curve.a1.scaled(rat(1, 2)));
        CHECK(psi_image(lambda_generator(1, 1), curve, 6) == expect);
    }
    SUBCASE("second generator on the legendre family") {
        auto curve = WeierstrassCurve::legendre();
        ParamPoly lam = ParamPoly::variable(curve.syms, 0);
        DividedOp P = tangent_derivation(curve);
        DividedOp P3 = P.compose(P).compose(P);
        DividedOp expect =
            (P3 + P.scaled((ParamPoly::constant(curve.syms, -1) - lam).scaled(Rat(2))))
                .scaled(rat(1, 6));
        CHECK(psi_image(lambda_generator(2, 1), curve, 6) == expect);
    }
    SUBCASE("vacuum maps to the identity") {
        auto curve = WeierstrassCurve::legendre();
        CHECK(psi_image(FockElement::vacuum(), curve, 6) == DividedOp::identity(curve));
    }
    SUBCASE("mode index beyond the series precision is an error") {
        auto curve = WeierstrassCurve::legendre();
        CHECK_THROWS_AS(psi_image(FockElement::monomial(BosonMonomial::of({9})), curve, 6),
                        std::out_of_range);
    }
}

TEST_CASE("psi is a ring map on the tested range") {
    auto curve = WeierstrassCurve::legendre();
    std::vector<FockElement> gens;
    for (unsigned n = 0; n <= 3; ++n) gens.push_back(lambda_generator(n, 1));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            DividedOp lhs = psi_image(gens[i] * gens[j], curve, 10);
            DividedOp rhs = psi_image(gens[i], curve, 10).compose(psi_image(gens[j], curve, 10));
            long bound = std::max(lhs.order(), rhs.order()) + 2;
            CHECK(equals_on_curve(lhs, rhs, bound));
        }
    }
}

TEST_CASE("integrality verification") {
    SUBCASE("first generator is integral on the symbolic curve") {
        auto rep = verify_integral(lambda_generator(1, 1), WeierstrassCurve::general());
        CHECK(rep.all_ok());
        REQUIRE(rep.checks.size() == 2);
        CHECK(rep.checks[0].name == "coefficient_integrality");
        CHECK_FALSE(rep.checks[0].artifact.empty());
        CHECK(rep.checks[1].name == "action_integrality");
    }
    SUBCASE("the r = 2 image of the first generator is integral") {
        auto rep = verify_integral(lambda_generator(1, 2), WeierstrassCurve::general());
        CHECK(rep.all_ok());
    }
    SUBCASE("half a mode fails with a witness") {
        FockElement bad = FockElement::monomial(BosonMonomial::of({2}), rat(1, 2));
        auto rep = verify_integral(bad, WeierstrassCurve::general());
        CHECK_FALSE(rep.all_ok());
        CHECK_FALSE(rep.checks[0].witness.empty());
    }
    SUBCASE("both criteria agree on the acceptance elements") {
        auto curve = WeierstrassCurve::legendre();
        FockElement cube_noncorrected =
            FockElement::monomial(BosonMonomial::of({1, 1, 1}), rat(1, 6));
        auto rep = verify_integral(cube_noncorrected, curve);
        CHECK(rep.checks[0].verdict == rep.checks[1].verdict);
        CHECK_FALSE(rep.all_ok());
        auto rep2 = verify_integral(lambda_generator(2, 1), curve);
        CHECK(rep2.checks[0].verdict == rep2.checks[1].verdict);
        CHECK(rep2.all_ok());
    }
}

TEST_CASE("globality at the origin") {
    auto curve = WeierstrassCurve::legendre();
    SUBCASE("verified generators stay regular and integral locally") {
        CHECK(verify_global(lambda_generator(1, 1), curve, 24).all_ok());
        CHECK(verify_global(lambda_generator(2, 1), curve, 24).all_ok());
    }
    SUBCASE("a broken element fails with the constant coefficient as witness") {
        FockElement bad = FockElement::monomial(BosonMonomial::of({1}), rat(1, 2));
        auto rep = verify_global(bad, curve, 24);
        CHECK_FALSE(rep.all_ok());
        CHECK(rep.checks[0].witness.find("z^0") != std::string::npos);
        CHECK(rep.checks[0].witness.find("1/2") != std::string::npos);
    }
    SUBCASE("insufficient precision is reported, not truncated") {
        auto rep = verify_global(lambda_generator(1, 1), curve, 2);
        CHECK_FALSE(rep.all_ok());
        CHECK(rep.checks[0].witness.find("insufficient") != std::string::npos);
    }
}

TEST_CASE("frobenius compatibility") {
    auto curve = WeierstrassCurve::legendre();
    SUBCASE("the published generator at p = 2") {
        auto rep = verify_frobenius(lambda_generator(3, 1), curve, 2, 24);
        CHECK(rep.all_ok());
    }
    SUBCASE("a generator killed by frobenius descends to zero") {
        auto rep = verify_frobenius(lambda_generator(0, 1), curve, 2, 24);
        CHECK(rep.all_ok());
        // explicit: the descent of the local image must itself vanish mod 2
        LocalOp local = from_p_polynomial(
            psi_p_polynomial(lambda_generator(0, 1), curve, 8), curve, 16);
        auto desc = frobenius_descent(local.reduce_mod_p(2), 2);
        CHECK(desc.op.is_zero());
    }
    SUBCASE("the vacuum maps to the identity on both sides") {
        auto rep = verify_frobenius(FockElement::vacuum(), curve, 2, 16);
        CHECK(rep.all_ok());
    }
    SUBCASE("p = 3 on the second generator") {
        auto rep = verify_frobenius(lambda_generator(2, 1), curve, 3, 24);
        CHECK(rep.all_ok());
    }
    SUBCASE("descent is multiplicative on images of stable elements") {
        // Lambda_3 and Lambda_1 both survive frobenius at p = 2; on their
        // images, descent(p q) = descent(p) descent(q) up to the dropped tail.
        long N = 24;
        LocalOp p = from_p_polynomial(psi_p_polynomial(lambda_generator(3, 1), curve, 8), curve, N)
                        .reduce_mod_p(2);
        LocalOp q = from_p_polynomial(psi_p_polynomial(lambda_generator(1, 1), curve, 8), curve, N)
                        .reduce_mod_p(2);
        LocalOp pq = p.compose(q).reduce_mod_p(2);
        LocalOp lhs = frobenius_descent(pq, 2).op;
        LocalOp rhs = frobenius_descent(p, 2).op.compose(frobenius_descent(q, 2).op);
        LocalOp rhs_red = rhs.reduce_mod_p(2);
        long limit = std::min(lhs.precision(), rhs_red.precision());
        CHECK(limit >= 8);
        CHECK(lhs.agrees_with(rhs_red, limit));
    }
}

TEST_CASE("batch verification") {
    SUBCASE("subjects at degree 1 include the two published integralities") {
        auto subjects = batch_subjects(1);
        bool has_11 = false, has_12 = false;
        for (const auto& s : subjects) {
            if (s.name == "Lambda[n=1,r=1]") has_11 = true;
            if (s.name == "Lambda[n=1,r=2]") has_12 = true;
        }
        CHECK(has_11);
        CHECK(has_12);
    }
    SUBCASE("legendre at degree 1 with primes 2 and 3 passes") {
        auto reports = batch_verify(WeierstrassCurve::legendre(), 1, {2, 3}, 16);
        for (const auto& r : reports) {
            INFO(r.subject);
            CHECK(r.all_ok());
        }
    }
    SUBCASE("empty prime list runs integrality and globality only") {
        auto reports = batch_verify(WeierstrassCurve::legendre(), 0, {}, 12);
        REQUIRE_FALSE(reports.empty());
        for (const auto& r : reports) {
            for (const auto& c : r.checks)
                CHECK(c.name.find("frobenius") == std::string::npos);
            CHECK(r.all_ok());
        }
    }
    SUBCASE("the singular tate reduction still carries the morphism") {
        auto reports = batch_verify(WeierstrassCurve::tate_singular(), 2, {}, 16);
        for (const auto& r : reports) {
            INFO(r.subject);
            CHECK(r.all_ok());
        }
    }
    SUBCASE("reports are deterministic") {
        auto a = batch_verify(WeierstrassCurve::legendre(), 1, {2}, 12);
        auto b = batch_verify(WeierstrassCurve::legendre(), 1, {2}, 12);
        CHECK(render_json(a, false) == render_json(b, false));
        CHECK(render_text(a) == render_text(b));
    }
}
