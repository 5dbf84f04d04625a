#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellop/curve.hpp"
#include "ellop/laurent.hpp"

namespace ellop {

// Operator sum a_j(z) dz^[j] at the origin chart, with truncated series
// coefficients. Regularity (all valuations >= 0) is a checked property.
class LocalOp {
  public:
    LocalOp(SymbolsPtr syms, long precision)
        : syms_(std::move(syms)), prec_(precision) {}

    static LocalOp zero(SymbolsPtr syms, long precision);
    static LocalOp identity(SymbolsPtr syms, long precision);

    const SymbolsPtr& symbols() const { return syms_; }
    long precision() const { return prec_; }
    const std::map<long, LaurentSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long max_order() const;

    LaurentSeries coeff(long j) const;  // zero series if absent

    LocalOp operator+(const LocalOp& o) const;
    LocalOp operator-(const LocalOp& o) const;
    bool operator==(const LocalOp& o) const;

    LocalOp scaled(const Rat& c) const;
    LocalOp scaled(const ParamPoly& c) const;

    // Divided one-variable composition:
    //   a dz^[m] . b dz^[n] = sum_i a D^[i](b) C(m-i+n, n) dz^[m-i+n]
    LocalOp compose(const LocalOp& o) const;

    LocalOp reduce_mod_p(long prime) const;
    LocalOp truncated(long new_prec) const;

    struct RegularIntegralResult {
        bool ok = true;
        std::string witness;
    };
    // Every coefficient series has valuation >= 0 and integral coefficients.
    RegularIntegralResult regular_and_integral() const;

    void set_term(long j, const LaurentSeries& s);
    void add_term(long j, const LaurentSeries& s);

    // Agreement up to series exponent `limit` and all orders.
    bool agrees_with(const LocalOp& o, long limit) const;

    std::string to_string() const;

  private:
    SymbolsPtr syms_;
    std::map<long, LaurentSeries> terms_;
    long prec_;
};

// P in the chart: s(z) dz^[1] with
// s = 1 - a1 z - 2 a3 w(z) - a2 z^2 - 2 a4 z w(z) - 3 a6 w(z)^2, s(0) = 1.
LocalOp p_local(const WeierstrassCurve& curve, long N);

// sum c_k P^k expanded at the origin through p_local composition.
LocalOp from_p_polynomial(const std::vector<std::pair<ParamPoly, int>>& poly,
                          const WeierstrassCurve& curve, long N);

struct DescentResult {
    LocalOp op;
    long dropped_order_or_exponent = 0;  // terms with j or l not divisible by p
    long dropped_parameter = 0;          // terms with a parameter exponent not divisible by p
};

// Inverse-Frobenius descent: keep dz^[j] with p | j and z^l with p | l,
// mapping j -> j/p, l -> l/p; parameter exponents are rooted the same way
// (the descent is p^-1-semilinear over the coefficient ring). Dropped terms
// are counted, never silently invented. Input must be reduced mod p.
DescentResult frobenius_descent(const LocalOp& p, long prime);

}  // namespace ellop
