#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ellop/curve.hpp"

namespace ellop {

struct IntegralityResult {
    bool ok = true;
    std::string witness;  // empty iff ok
};

// Differential operator sum c_{a,b} dx^[a] dy^[b] with divided powers
// (a! dx^[a] = dx^a) and coefficients in the coordinate ring, stored as
// canonical residues. Multi-indices act on the ambient polynomial ring;
// equality as operators on the curve is decided by equals_on_curve.
class DividedOp {
  public:
    using Key = std::pair<long, long>;  // (a, b) for dx^[a] dy^[b]

    explicit DividedOp(WeierstrassCurve curve) : curve_(std::move(curve)) {}

    static DividedOp zero(const WeierstrassCurve& curve);
    static DividedOp identity(const WeierstrassCurve& curve);
    static DividedOp multiplication(const CurveElement& c, const WeierstrassCurve& curve);
    // dx^[a] dy^[b]
    static DividedOp divided_partial(const WeierstrassCurve& curve, long a, long b);

    const WeierstrassCurve& curve() const { return curve_; }
    const std::map<Key, CurveElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long order() const;

    CurveElement coefficient(long a, long b) const;  // zero element if absent

    DividedOp operator+(const DividedOp& o) const;
    DividedOp operator-(const DividedOp& o) const;
    DividedOp operator-() const;
    bool operator==(const DividedOp& o) const;

    DividedOp scaled(const Rat& c) const;
    DividedOp scaled(const ParamPoly& c) const;

    // Exact composition in the ambient divided-power Weyl algebra:
    //   dx^[m] dx^[n] = C(m+n, n) dx^[m+n]
    //   dx^[m] (c .)  = sum_i D_x^[i](c) dx^[m-i]
    // Coefficients are re-reduced to canonical residues.
    DividedOp compose(const DividedOp& o) const;

    // Apply in the ambient ring to the canonical representative, then reduce.
    CurveElement apply(const CurveElement& h) const;

    IntegralityResult is_integral() const;
    DividedOp reduce_mod_p(long prime) const;

    void set_term(long a, long b, const CurveElement& c);
    void add_term(long a, long b, const CurveElement& c);

    // Canonical text form: "c * dx^[a] dy^[b]" terms in (a,b) order.
    std::string to_string() const;

  private:
    void check_compatible(const DividedOp& o) const;

    WeierstrassCurve curve_;
    std::map<Key, CurveElement> terms_;
};

// P = f_y dx - f_x dy, the invariant tangent derivation of the curve.
DividedOp tangent_derivation(const WeierstrassCurve& curve);

struct PowerFactorialResult {
    DividedOp op;  // p^n with every divided-basis coefficient divided by n!
    bool integral = false;
    std::string witness;  // multi-index, coefficient and divisor on failure
};

// p^n / n!; non-integrality is a value, not an error.
PowerFactorialResult power_over_factorial(const DividedOp& p, unsigned n);

// Agreement as endomorphisms on x^i and x^i y for all i <= degree_bound.
bool equals_on_curve(const DividedOp& p, const DividedOp& q, long degree_bound);

}  // namespace ellop
