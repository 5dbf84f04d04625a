#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ellop/curve.hpp"
#include "ellop/divided_op.hpp"

namespace fixtures {

// Deterministic generator for property tests (splitmix64).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// Polynomial in x, y, lambda from flat (cx, cy, clam, coefficient) tuples.
inline ellop::CurvePoly xy_poly(const ellop::SymbolsPtr& syms,
                                const std::vector<std::array<long, 4>>& rows) {
    ellop::CurvePoly p(syms);
    for (const auto& [xe, ye, le, c] : rows) {
        ellop::ParamPoly coeff =
            le == 0 ? ellop::ParamPoly::constant(syms, ellop::Rat(c))
                    : ellop::ParamPoly::variable(syms, 0, static_cast<unsigned>(le))
                          .scaled(ellop::Rat(c));
        p.add_term(xe, ye, coeff);
    }
    return p;
}

// The published square of the tangent field on the legendre family, in
// ordinary-partial form (dx^a dy^b = a! b! dx^[a] dy^[b]).
ellop::DividedOp legendre_p2_display(const ellop::WeierstrassCurve& curve);

// The published cube, same conventions.
ellop::DividedOp legendre_p3_display(const ellop::WeierstrassCurve& curve);

}  // namespace fixtures
