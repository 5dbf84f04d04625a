#pragma once

#include <string>

#include "ellop/curve.hpp"
#include "ellop/divided_op.hpp"
#include "ellop/report.hpp"

namespace ellop {

// The Stohr-Voloch numerator d^(2p-2)/dx^(p-1) dy^(p-1) (f^(p-1) h),
// computed in the ambient ring over F_p and reduced modulo f.
// Parameters may stay symbolic; the curve must have integral coefficients.
CurveElement cartier_numerator(const WeierstrassCurve& curve, const CurveElement& h, long prime);

struct PthRootResult {
    bool ok = false;
    CurveElement root;        // g with g^p = u mod (f, p) on success
    std::string obstruction;  // the non-p-power obstruction on failure

    explicit PthRootResult(SymbolsPtr syms) : root(std::move(syms)) {}
};

// Solve g^p = u mod (f, p) on the canonical A(x) + B(x)y form. The p-power
// map is F_p-linear on coefficients, so this is an exact linear solve.
// Requires every curve coefficient and every coefficient of u to be an
// integer constant (specialize parameters first).
PthRootResult pth_root(const CurveElement& u, const WeierstrassCurve& curve, long prime);

// C(h w) = g w with g = pth_root(cartier_numerator(h)).
PthRootResult cartier_apply(const WeierstrassCurve& curve, const CurveElement& h, long prime);

// Compare h -> cartier_numerator(h) with h -> candidate(h) mod p on all
// basis monomials x^i, x^i y with i <= degree_bound.
VerificationReport operator_identity_check(const WeierstrassCurve& curve, long prime,
                                           const DividedOp& candidate, long degree_bound);

}  // namespace ellop
