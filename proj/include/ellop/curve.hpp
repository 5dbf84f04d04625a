#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellop/laurent.hpp"
#include "ellop/parampoly.hpp"

namespace ellop {

// Weierstrass data y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
// Singular curves are allowed; nothing here assumes smoothness.
struct WeierstrassCurve {
    SymbolsPtr syms;
    ParamPoly a1, a2, a3, a4, a6;
    std::string name;

    static WeierstrassCurve general();        // symbolic a1..a6
    static WeierstrassCurve legendre();       // y^2 = x(x-1)(x-lambda)
    static WeierstrassCurve tate_singular();  // y^2 + xy = x^3
    static WeierstrassCurve from_coefficients(SymbolsPtr syms, ParamPoly a1, ParamPoly a2,
                                              ParamPoly a3, ParamPoly a4, ParamPoly a6,
                                              std::string name = "");

    bool is_integral() const;
    bool operator==(const WeierstrassCurve& o) const;

    // Substitute parameter values (symbol list order); result has no symbols.
    WeierstrassCurve specialized(const std::vector<Rat>& values) const;

    std::string to_string() const;
};

// Polynomial in the ambient variables x, y with ParamPoly coefficients.
// Canonical order: (x-exponent, y-exponent) lexicographic; no zero terms.
class CurvePoly {
  public:
    using Key = std::pair<long, long>;  // (x-exponent, y-exponent)
    using TermMap = std::map<Key, ParamPoly>;

    explicit CurvePoly(SymbolsPtr syms) : syms_(std::move(syms)) {}

    static CurvePoly constant(SymbolsPtr syms, const Rat& c);
    static CurvePoly monomial(SymbolsPtr syms, const ParamPoly& c, long xe, long ye);

    const SymbolsPtr& symbols() const { return syms_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long x_degree() const;
    long y_degree() const;

    CurvePoly operator+(const CurvePoly& o) const;
    CurvePoly operator-(const CurvePoly& o) const;
    CurvePoly operator*(const CurvePoly& o) const;
    CurvePoly operator-() const;
    bool operator==(const CurvePoly& o) const;

    CurvePoly scaled(const ParamPoly& c) const;
    CurvePoly scaled(const Rat& c) const;
    CurvePoly pow(unsigned n) const;

    // Divided partials: x^a -> C(a,k) x^(a-k); integer combinatorics.
    CurvePoly divided_partial_x(unsigned k) const;
    CurvePoly divided_partial_y(unsigned k) const;
    // Ordinary partials (d/dx)^k = k! * divided.
    CurvePoly partial_x(unsigned k) const;
    CurvePoly partial_y(unsigned k) const;

    bool is_integral() const;
    std::string integrality_witness() const;
    CurvePoly reduce_mod_p(long prime) const;

    // Evaluate on Laurent series x(z), y(z).
    LaurentSeries eval_series(const LaurentSeries& xs, const LaurentSeries& ys) const;

    void set_term(long xe, long ye, const ParamPoly& c);
    void add_term(long xe, long ye, const ParamPoly& c);

    std::string to_string() const;

  private:
    void check_compatible(const CurvePoly& o) const;

    SymbolsPtr syms_;
    TermMap terms_;
};

// Canonical residue A(x) + B(x)y of the coordinate ring modulo the
// Weierstrass equation.
class CurveElement {
  public:
    explicit CurveElement(SymbolsPtr syms) : p_(std::move(syms)) {}

    // poly must already have y-degree <= 1 (use reduce() otherwise).
    static CurveElement from_reduced(CurvePoly poly);
    static CurveElement constant(SymbolsPtr syms, const Rat& c);
    static CurveElement x_power(SymbolsPtr syms, unsigned i, bool times_y = false);

    const CurvePoly& poly() const { return p_; }
    const SymbolsPtr& symbols() const { return p_.symbols(); }
    bool is_zero() const { return p_.is_zero(); }

    // Dense univariate coefficient lists of A and B (value = A(x) + B(x)y).
    std::vector<ParamPoly> a_coeffs() const;
    std::vector<ParamPoly> b_coeffs() const;

    CurveElement operator+(const CurveElement& o) const;
    CurveElement operator-(const CurveElement& o) const;
    CurveElement operator-() const;
    bool operator==(const CurveElement& o) const;
    bool operator!=(const CurveElement& o) const { return !(*this == o); }

    CurveElement scaled(const ParamPoly& c) const;
    CurveElement scaled(const Rat& c) const;

    bool is_integral() const { return p_.is_integral(); }
    std::string integrality_witness() const { return p_.integrality_witness(); }
    CurveElement reduce_mod_p(long prime) const;

    std::string to_string() const { return p_.to_string(); }

  private:
    CurvePoly p_;
};

// f(x,y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6.
CurvePoly weierstrass_f(const WeierstrassCurve& curve);

// Canonical reduction: substitute y^2 -> x^3 + a2 x^2 + a4 x + a6 - a1 xy - a3 y
// until the y-degree is at most 1.
CurveElement reduce(const CurvePoly& p, const WeierstrassCurve& curve);

CurveElement multiply_on_curve(const CurveElement& a, const CurveElement& b,
                               const WeierstrassCurve& curve);

// The unique w(z) = z^3(1 + O(z)) with w = z^3 + a1 zw + a2 z^2 w + a3 w^2
//                                          + a4 zw^2 + a6 w^3, to precision N.
LaurentSeries chart_series_w(const WeierstrassCurve& curve, long N);

// x(z) = z/w (valuation -2) and y(z) = -1/w (valuation -3), to precision N.
std::pair<LaurentSeries, LaurentSeries> local_xy(const WeierstrassCurve& curve, long N);

// Expansion coefficients of the invariant differential at the origin:
// dx/(2y + a1 x + a3) = (sum alpha_{i+1} z^i) dz; returns alpha_1..alpha_N.
std::vector<ParamPoly> invariant_differential(const WeierstrassCurve& curve, long N);

// I_n = -alpha_n for n >= 1 (sign convention reported by the drivers).
std::vector<ParamPoly> i_coefficients(const WeierstrassCurve& curve, long N);

}  // namespace ellop
