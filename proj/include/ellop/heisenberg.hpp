#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellop/parampoly.hpp"

namespace ellop {

// Product of lowering modes b_{-m}, m >= 1, as a sorted multiset of the m's.
// The empty monomial is the vacuum.
struct BosonMonomial {
    std::vector<long> modes;  // ascending

    static BosonMonomial vacuum() { return {}; }
    static BosonMonomial single(long m);
    static BosonMonomial of(std::vector<long> ms);

    long degree() const;  // sum of modes
    bool operator==(const BosonMonomial& o) const { return modes == o.modes; }
    std::string to_string() const;
};

struct BosonLess {
    bool operator()(const BosonMonomial& a, const BosonMonomial& b) const {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.modes < b.modes;
    }
};

// Exact linear combination of mode monomials; the working presentation of
// elements of the Fock space and of its integral lattice.
class FockElement {
  public:
    using TermMap = std::map<BosonMonomial, Rat, BosonLess>;

    FockElement() = default;

    static FockElement zero() { return {}; }
    static FockElement vacuum(const Rat& c = 1);
    static FockElement monomial(const BosonMonomial& m, const Rat& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;    // max monomial degree
    long max_mode() const;  // largest mode index appearing

    FockElement operator+(const FockElement& o) const;
    FockElement operator-(const FockElement& o) const;
    FockElement operator*(const FockElement& o) const;
    FockElement operator-() const;
    bool operator==(const FockElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FockElement& o) const { return !(*this == o); }

    FockElement scaled(const Rat& c) const;

    bool is_integral() const;

    void add_term(const BosonMonomial& m, const Rat& c);

    std::string to_string() const;

  private:
    TermMap terms_;
};

// Alphabet X1..Xk.
SymbolsPtr lambda_alphabet(std::size_t k);

// Lambda_n: the coefficient of t^(n+1) in exp(sum_j X_j t^j / j), via the
// recursion (n+1) Lambda_n = sum_{j=1..n+1} X_j Lambda_{n-j}, Lambda_{-1} = 1.
// Lives over X1..X_{n+1} unless a larger alphabet is supplied.
ParamPoly lambda_poly(unsigned n);
ParamPoly lambda_poly(unsigned n, const SymbolsPtr& alphabet);

// Substitute X_m -> b_{r m}. Fock-valued output needs r < 0.
FockElement psi_substitute(const ParamPoly& lp, long r);

// psi_substitute(lambda_poly(n), -r); the lattice generators.
FockElement lambda_generator(unsigned n, unsigned r = 1);

// A monomial in the r = 1 generators, recorded by its Lambda indices.
struct LambdaMonomial {
    std::vector<unsigned> ns;  // ascending
    bool operator==(const LambdaMonomial& o) const { return ns == o.ns; }
    bool operator<(const LambdaMonomial& o) const;
    std::string to_string() const;
};

struct LambdaExpansion {
    std::map<LambdaMonomial, Rat> coords;
    bool integral = true;
    std::string witness;  // first non-integral coordinate, if any
};

// Coordinates in the basis of monomials in the r = 1 generators, solved
// degree by degree by exact linear algebra.
LambdaExpansion to_lambda_basis(const FockElement& e);

// b_{-m} multiplies; b_m (m > 0) acts as m * d/d b_{-m}; b_0 acts as zero.
FockElement mode_action(long n, const FockElement& e);

// L_m = sum_{j > max(0, m)} j b_{m-j} d/d b_{-j}; defined for m >= -1.
FockElement l_action(long m, const FockElement& e);

// c(f, g) = -Res_{t=0} f dg for Laurent polynomials in t.
Rat cocycle(const std::map<long, Rat>& f, const std::map<long, Rat>& g);

// Frobenius on the reduced lattice: on generators, Lambda_n -> Lambda_{(n+1)/p - 1}
// when p | n + 1, else 0; multiplicative on monomials, coordinates mod p.
// Requires an integral Lambda-basis expansion.
FockElement frobenius_pi(const FockElement& e, long prime);

}  // namespace ellop
