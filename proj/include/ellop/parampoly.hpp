#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellop/rational.hpp"

namespace ellop {

// The parameter alphabet is fixed per value; values over different alphabets
// never mix.
using SymbolList = std::vector<std::string>;
using SymbolsPtr = std::shared_ptr<const SymbolList>;

SymbolsPtr make_symbols(std::initializer_list<std::string> names);
SymbolsPtr make_symbols(SymbolList names);
SymbolsPtr no_symbols();

inline bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
    return a == b || *a == *b;
}

// Exponent vector, parallel to the symbol list.
struct Monomial {
    std::vector<unsigned> exp;

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exp) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Graded lexicographic term order: total degree first, then exponent vector.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

class NonIntegralError : public std::domain_error {
  public:
    NonIntegralError(const std::string& what, std::string witness_)
        : std::domain_error(what), witness(std::move(witness_)) {}
    std::string witness;
};

// Sparse multivariate polynomial over Rat in a fixed parameter alphabet.
// Canonical form: graded-lex term map, no stored zero coefficients.
class ParamPoly {
  public:
    using TermMap = std::map<Monomial, Rat, GradedLex>;

    ParamPoly() : syms_(no_symbols()) {}
    explicit ParamPoly(SymbolsPtr syms) : syms_(std::move(syms)) {}

    static ParamPoly constant(SymbolsPtr syms, const Rat& c);
    static ParamPoly variable(SymbolsPtr syms, std::size_t index, unsigned power = 1);

    const SymbolsPtr& symbols() const { return syms_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant
    unsigned degree() const;

    // True iff every coefficient has denominator 1.
    bool is_integral() const;
    // First non-integral coefficient, rendered "coeff * monomial"; "" if integral.
    std::string integrality_witness() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    bool operator==(const ParamPoly& o) const {
        return same_symbols(syms_, o.syms_) && terms_ == o.terms_;
    }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly scaled(const Rat& c) const;
    ParamPoly pow(unsigned n) const;

    // Coefficients replaced by least nonnegative residues mod prime;
    // throws NonIntegralError (with witness) on non-integral input.
    ParamPoly reduce_mod_p(long prime) const;

    // Full evaluation; values parallel to the symbol list.
    Rat evaluated(const std::vector<Rat>& values) const;

    // Simultaneous substitution symbol[i] -> images[i]; images share one alphabet.
    ParamPoly substituted(const std::vector<ParamPoly>& images) const;

    // Reinterpret over a longer alphabet whose prefix is the current one.
    ParamPoly extended(const SymbolsPtr& bigger) const;

    // Ordinary partial derivative in one symbol.
    ParamPoly partial(std::size_t var) const;

    // Semilinear p-th root: every parameter exponent divisible by p is divided
    // by p (coefficients are expected in [0, p), fixed by Frobenius); terms
    // with a non-divisible exponent are dropped and counted in *dropped.
    ParamPoly param_root(long prime, long* dropped) const;

    std::string to_string() const;
    std::string monomial_string(const Monomial& m) const;

  private:
    void check_compatible(const ParamPoly& o) const;
    void add_term(const Monomial& m, const Rat& c);

    SymbolsPtr syms_;
    TermMap terms_;
};

std::string format_term(const Rat& c, const std::string& mono, bool leading);

}  // namespace ellop
