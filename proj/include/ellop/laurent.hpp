#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellop/parampoly.hpp"

namespace ellop {

// Truncated Laurent series with exact ParamPoly coefficients.
//
// Coefficients are known for all exponents k < precision(); querying at or
// beyond the precision throws. Precision propagates pessimistically:
//   a + b : min(Na, Nb)
//   a * b : min(Na + vb, Nb + va)
//   1 / a : Na - 2 va          (relative precision preserved)
//   d/dz  : Na - 1
// The zero series reports valuation() == precision() ("zero to O(z^N)").
class LaurentSeries {
  public:
    LaurentSeries(std::string var, SymbolsPtr syms, long valuation,
                  std::vector<ParamPoly> coeffs, long precision);

    static LaurentSeries zero(std::string var, SymbolsPtr syms, long precision);
    static LaurentSeries monomial(std::string var, SymbolsPtr syms, const ParamPoly& c,
                                  long exponent, long precision);
    static LaurentSeries monomial(std::string var, SymbolsPtr syms, const Rat& c, long exponent,
                                  long precision);

    const std::string& var() const { return var_; }
    const SymbolsPtr& symbols() const { return syms_; }
    long valuation() const { return val_; }
    long precision() const { return prec_; }
    bool is_zero() const { return coef_.empty(); }

    // Coefficient of var^k; exact for k < precision(), throws beyond.
    ParamPoly coeff(long k) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    bool operator==(const LaurentSeries& o) const;

    LaurentSeries scaled(const ParamPoly& c) const;
    LaurentSeries scaled(const Rat& c) const;
    LaurentSeries shifted(long k) const;  // multiply by var^k
    LaurentSeries truncated(long new_prec) const;

    // Requires a nonzero leading coefficient that is a rational constant.
    LaurentSeries inverse() const;

    LaurentSeries derivative() const;

    // Substitute var -> var^k (k >= 1); gaps are known zeros.
    LaurentSeries compose_power(unsigned k) const;

    LaurentSeries reduce_mod_p(long prime) const;

    bool is_integral() const;
    std::string integrality_witness() const;  // "z^k: coeff", or ""

    // Equal coefficients for all exponents k < limit; limit must not exceed
    // either precision.
    bool agrees_with(const LaurentSeries& o, long limit) const;

    std::string to_string() const;

  private:
    void normalize();
    void check_compatible(const LaurentSeries& o) const;

    std::string var_;
    SymbolsPtr syms_;
    long val_ = 0;
    std::vector<ParamPoly> coef_;  // coef_[i] = coefficient of var^(val_ + i)
    long prec_ = 0;
};

}  // namespace ellop
