#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellop/curve.hpp"
#include "ellop/divided_op.hpp"
#include "ellop/heisenberg.hpp"
#include "ellop/local_op.hpp"
#include "ellop/report.hpp"

namespace ellop {

// The conjectured morphism on mode monomials: b_{-j} -> alpha_j P extended
// multiplicatively; every image is a polynomial in P with ParamPoly
// coefficients. Returned as (coefficient, degree) pairs, ready for global
// composition or local expansion.
std::vector<std::pair<ParamPoly, int>> psi_p_polynomial(const FockElement& e,
                                                        const WeierstrassCurve& curve, long N);

// The image as a global divided-power operator.
DividedOp psi_image(const FockElement& e, const WeierstrassCurve& curve, long N);

// Coefficient integrality in the divided basis plus the action-integrality
// cross-check on basis monomials up to order + 2.
VerificationReport verify_integral(const FockElement& e, const WeierstrassCurve& curve);

// Regularity and integrality of the local expansion at the origin, to
// precision N.
VerificationReport verify_global(const FockElement& e, const WeierstrassCurve& curve, long N);

// descent(local psi(e) mod p) == local psi(frobenius_pi(e)) mod p, compared
// to precision N / p.
VerificationReport verify_frobenius(const FockElement& e, const WeierstrassCurve& curve,
                                    long prime, long N);

// Lattice subjects swept by batch verification: single generators
// Lambda[n, r] for n <= max_degree, r in {1, 2}, and monomials in the r = 1
// generators with total weight sum(n_i + 1) <= max_degree + 1.
struct BatchSubject {
    std::string name;
    FockElement element;
};
std::vector<BatchSubject> batch_subjects(int max_degree);

std::vector<VerificationReport> batch_verify(const WeierstrassCurve& curve, int max_degree,
                                             const std::vector<long>& primes, long N);

}  // namespace ellop
