#include "doctest.h"

#include "ellop/witt.hpp"
#include "fixtures.hpp"

using namespace ellop;

namespace {

WittOp::MultiIndex unit_index(unsigned N, unsigned pos1) {
    WittOp::MultiIndex idx(N, 0);
    idx[pos1 - 1] = 1;
    return idx;
}

}  // namespace

TEST_CASE("witt operators") {
    SUBCASE("first operator matches the displayed rule") {
        auto op = psi_univ(1, 3);
        auto s = op.symbols();
        WittOp expect(s);
        expect.add_term(unit_index(3, 1), ParamPoly::constant(s, 1));
        expect.add_term(unit_index(3, 2), ParamPoly::variable(s, 0));
        expect.add_term(unit_index(3, 3), ParamPoly::variable(s, 1));
        CHECK(op == expect);
    }
    SUBCASE("top index truncates to a bare partial") {
        for (unsigned N : {3u, 5u}) {
            auto op = psi_univ(N, N);
            WittOp expect(op.symbols());
            expect.add_term(unit_index(N, N), ParamPoly::constant(op.symbols(), 1));
            CHECK(op == expect);
        }
    }
    SUBCASE("invariant form for higher index") {
        // d2 + X1 d3 + X2 d4: the X-subscripts restart at 1.
        auto op = psi_univ(2, 4);
        auto s = op.symbols();
        WittOp expect(s);
        expect.add_term(unit_index(4, 2), ParamPoly::constant(s, 1));
        expect.add_term(unit_index(4, 3), ParamPoly::variable(s, 0));
        expect.add_term(unit_index(4, 4), ParamPoly::variable(s, 1));
        CHECK(op == expect);
    }
    SUBCASE("characterizing action on coordinates") {
        // psi_i(X_k) = delta_ik + X_{k-i}, the coefficient of t^k in t^i E(t).
        for (unsigned N : {4u, 6u}) {
            for (unsigned i = 1; i <= N; ++i) {
                auto op = psi_univ(i, N);
                auto s = op.symbols();
                for (unsigned k = 1; k <= N; ++k) {
                    ParamPoly expect(s);
                    if (k == i) expect += ParamPoly::constant(s, 1);
                    if (k > i) expect += ParamPoly::variable(s, k - i - 1);
                    CHECK(op.apply(ParamPoly::variable(s, k - 1)) == expect);
                }
            }
        }
    }
}

TEST_CASE("witt coproduct") {
    auto table = witt_coproduct(4);
    const auto& s = table.xy;
    auto X = [&](unsigned i) { return ParamPoly::variable(s, i - 1); };
    auto Y = [&](unsigned i) { return ParamPoly::variable(s, 4 + i - 1); };

    SUBCASE("displayed coordinates") {
        CHECK(table.z[0] == X(1) + Y(1));
        CHECK(table.z[1] == X(2) + Y(2) + X(1) * Y(1));
        CHECK(table.z[2] == X(3) + Y(3) + X(1) * Y(2) + X(2) * Y(1));
    }
    SUBCASE("counit") {
        // Z_i(X, 0) = X_i and Z_i(0, Y) = Y_i
        std::vector<ParamPoly> kill_y, kill_x;
        for (unsigned i = 1; i <= 4; ++i) kill_y.push_back(X(i));
        for (unsigned i = 1; i <= 4; ++i) kill_y.push_back(ParamPoly(s));
        for (unsigned i = 1; i <= 4; ++i) kill_x.push_back(ParamPoly(s));
        for (unsigned i = 1; i <= 4; ++i) kill_x.push_back(Y(i));
        for (unsigned i = 1; i <= 4; ++i) {
            CHECK(table.z[i - 1].substituted(kill_y) == X(i));
            CHECK(table.z[i - 1].substituted(kill_x) == Y(i));
        }
    }
    SUBCASE("coassociativity through N = 6") {
        for (unsigned N : {2u, 4u, 6u}) {
            auto t = witt_coproduct(N);
            // triple alphabet U, V, W
            SymbolList names;
            const char* blocks[3] = {"U", "V", "W"};
            for (const char* b : blocks)
                for (unsigned i = 1; i <= N; ++i) names.push_back(std::string(b) + std::to_string(i));
            auto uvw = make_symbols(std::move(names));
            auto var = [&](unsigned block, unsigned i) {
                return ParamPoly::variable(uvw, block * N + i - 1);
            };
            // images for Z evaluated on (Z(U,V), W) and on (U, Z(V,W))
            std::vector<ParamPoly> uv, vw;
            for (unsigned i = 1; i <= N; ++i) {
                std::vector<ParamPoly> args;
                for (unsigned j = 1; j <= N; ++j) args.push_back(var(0, j));
                for (unsigned j = 1; j <= N; ++j) args.push_back(var(1, j));
                uv.push_back(t.z[i - 1].substituted(args));
            }
            for (unsigned i = 1; i <= N; ++i) {
                std::vector<ParamPoly> args;
                for (unsigned j = 1; j <= N; ++j) args.push_back(var(1, j));
                for (unsigned j = 1; j <= N; ++j) args.push_back(var(2, j));
                vw.push_back(t.z[i - 1].substituted(args));
            }
            for (unsigned i = 1; i <= N; ++i) {
                std::vector<ParamPoly> left, right;
                for (unsigned j = 1; j <= N; ++j) left.push_back(uv[j - 1]);
                for (unsigned j = 1; j <= N; ++j) left.push_back(var(2, j));
                for (unsigned j = 1; j <= N; ++j) right.push_back(var(0, j));
                for (unsigned j = 1; j <= N; ++j) right.push_back(vw[j - 1]);
                CHECK(t.z[i - 1].substituted(left) == t.z[i - 1].substituted(right));
            }
        }
    }
}

TEST_CASE("commutation of the witt operators") {
    SUBCASE("all pairs commute at N = 5") { CHECK(check_commuting(5).ok); }
    SUBCASE("stress case N = 8") { CHECK(check_commuting(8).ok); }
    SUBCASE("an operator commutes with itself exactly") {
        auto op = psi_univ(2, 6);
        CHECK(op.commutator(op).is_zero());
    }
    SUBCASE("brackets vanish identically for the invariant form") {
        for (unsigned i = 1; i <= 4; ++i)
            for (unsigned j = i + 1; j <= 4; ++j)
                CHECK(psi_univ(i, 4).commutator(psi_univ(j, 4)).is_zero());
    }
}

TEST_CASE("left invariance") {
    SUBCASE("selected cases") {
        CHECK(check_invariance(1, 4).ok);
        CHECK(check_invariance(2, 5).ok);
    }
    SUBCASE("all indices through N = 6") {
        for (unsigned N = 2; N <= 6; ++N)
            for (unsigned i = 1; i <= N; ++i) {
                auto r = check_invariance(i, N);
                INFO("i=", i, " N=", N, " ", r.witness);
                CHECK(r.ok);
            }
    }
    SUBCASE("a perturbed operator fails with a witness coordinate") {
        unsigned N = 4;
        auto syms = witt_alphabet(N);
        WittOp bad(syms);
        bad.add_term(unit_index(N, 1), ParamPoly::constant(syms, 1));
        bad.add_term(unit_index(N, 2), ParamPoly::variable(syms, 0).scaled(Rat(2)));
        auto r = check_invariance_of(bad, N);
        CHECK_FALSE(r.ok);
        CHECK(r.witness.find("Z_") != std::string::npos);
    }
}

TEST_CASE("witt report aggregates the checks") {
    auto rep = witt_report(5);
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() == 1 + 5);
}
