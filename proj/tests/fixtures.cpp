#include <array>

#include "fixtures.hpp"

namespace fixtures {

using ellop::CurvePoly;
using ellop::DividedOp;
using ellop::Rat;
using ellop::reduce;
using ellop::WeierstrassCurve;

// Terms transcribed from the published expansions; each row is
// {x-exponent, y-exponent, lambda-exponent, integer coefficient}.
DividedOp legendre_p2_display(const WeierstrassCurve& curve) {
    const auto& s = curve.syms;
    DividedOp op(curve);
    auto put = [&](long a, long b, const std::vector<std::array<long, 4>>& rows) {
        // ordinary dx^a dy^b = a! b! dx^[a] dy^[b]
        Rat fact(ellop::factorial(static_cast<unsigned long>(a)) *
                 ellop::factorial(static_cast<unsigned long>(b)));
        op.add_term(a, b, reduce(xy_poly(s, rows), curve).scaled(fact));
    };
    put(0, 2, {{2, 0, 1, 14}, {2, 0, 2, 4}, {0, 0, 2, 1}, {4, 0, 0, 9}, {3, 0, 0, -12},
               {2, 0, 0, 4}, {1, 0, 1, -4}, {1, 0, 2, -4}, {3, 0, 1, -12}});
    put(2, 0, {{0, 2, 0, 4}});
    put(1, 1, {{0, 1, 1, 4}, {1, 1, 1, -8}, {2, 1, 0, 12}, {1, 1, 0, -8}});
    put(1, 0, {{1, 0, 0, -4}, {2, 0, 0, 6}, {1, 0, 1, -4}, {0, 0, 1, 2}});
    put(0, 1, {{0, 1, 0, -4}, {1, 1, 0, 12}, {0, 1, 1, -4}});
    return op;
}

DividedOp legendre_p3_display(const WeierstrassCurve& curve) {
    const auto& s = curve.syms;
    DividedOp op(curve);
    auto put = [&](long a, long b, const std::vector<std::array<long, 4>>& rows) {
        Rat fact(ellop::factorial(static_cast<unsigned long>(a)) *
                 ellop::factorial(static_cast<unsigned long>(b)));
        op.add_term(a, b, reduce(xy_poly(s, rows), curve).scaled(fact));
    };
    put(0, 3, {{0, 0, 3, 1},  {3, 0, 0, -8},  {1, 0, 3, -6}, {1, 0, 2, -6}, {2, 0, 1, 12},
               {5, 0, 1, -54}, {2, 0, 3, 12}, {3, 0, 3, -8}, {4, 0, 2, 36}, {2, 0, 2, 33},
               {3, 0, 2, -60}, {3, 0, 1, -60}, {4, 0, 1, 99}, {5, 0, 0, -54}, {4, 0, 0, 36},
               {6, 0, 0, 27}});
    put(3, 0, {{0, 3, 0, 8}});
    put(1, 2, {{2, 1, 1, 84}, {2, 1, 2, 24}, {2, 1, 0, 24}, {3, 1, 1, -72}, {1, 1, 1, -24},
               {0, 1, 2, 6},  {4, 1, 0, 54}, {1, 1, 2, -24}, {3, 1, 0, -72}});
    put(2, 1, {{1, 2, 0, -24}, {1, 2, 1, -24}, {0, 2, 1, 12}, {2, 2, 0, 36}});
    put(0, 2, {{2, 1, 1, -108}, {1, 1, 0, 24}, {1, 1, 1, 84}, {0, 1, 1, -12}, {3, 1, 0, 108},
               {0, 1, 2, -12},  {1, 1, 2, 24}, {2, 1, 0, -108}});
    put(1, 1, {{3, 0, 1, -72}, {4, 0, 0, 54}, {0, 2, 0, -24}, {3, 0, 0, -72}, {0, 0, 2, 6},
               {1, 0, 2, -24}, {2, 0, 0, 24}, {0, 2, 1, -24}, {1, 2, 0, 72},  {2, 0, 1, 84},
               {2, 0, 2, 24},  {1, 0, 1, -24}});
    put(1, 0, {{1, 1, 0, 24}, {0, 1, 1, -8}, {0, 1, 0, -8}});
    put(0, 1, {{0, 0, 1, -4}, {2, 0, 0, -36}, {1, 0, 0, 8}, {1, 0, 1, 28}, {2, 0, 1, -36},
               {0, 2, 0, 24}, {3, 0, 0, 36},  {0, 0, 2, -4}, {1, 0, 2, 8}});
    put(2, 0, {{1, 1, 1, -24}, {1, 1, 0, -24}, {0, 1, 1, 12}, {2, 1, 0, 36}});
    return op;
}

}  // namespace fixtures
