#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ellop {

// Exact scalars. mpq_class results of arithmetic are always canonical
// (gcd(num, den) = 1, den > 0, zero = 0/1); the helpers below keep
// explicitly constructed values canonical too.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Binomial coefficient with arbitrary integer upper index:
// C(n, k) = n(n-1)...(n-k+1) / k!, an integer for every integer n.
inline Int binomial(const Int& n, unsigned long k) {
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    if (r != 0) throw std::logic_error("binomial: non-exact division");
    return q;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

// Least nonnegative residue.
inline Int mod_nonneg(const Int& a, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(long p, const char* where) {
    if (!is_prime(p))
        throw std::domain_error(std::string(where) + ": " + std::to_string(p) +
                                " is not a prime");
}

// Residue of an integer rational, as a canonical lift in [0, p).
inline Rat rat_mod_p(const Rat& r, long p) {
    if (!is_integer(r)) throw std::domain_error("rat_mod_p: not an integer: " + r.get_str());
    return Rat(mod_nonneg(r.get_num(), Int(p)));
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace ellop
