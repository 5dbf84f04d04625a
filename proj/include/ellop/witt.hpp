#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellop/parampoly.hpp"
#include "ellop/report.hpp"

namespace ellop {

// Differential operator on a truncated polynomial coordinate ring, ordinary
// partial basis: sum c_alpha d^alpha with d^alpha = prod (d/dX_i)^alpha_i.
class WittOp {
  public:
    using MultiIndex = std::vector<unsigned>;

    explicit WittOp(SymbolsPtr syms) : syms_(std::move(syms)) {}

    static WittOp zero(SymbolsPtr syms) { return WittOp(std::move(syms)); }

    const SymbolsPtr& symbols() const { return syms_; }
    const std::map<MultiIndex, ParamPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WittOp operator+(const WittOp& o) const;
    WittOp operator-(const WittOp& o) const;
    bool operator==(const WittOp& o) const;

    WittOp compose(const WittOp& o) const;
    WittOp commutator(const WittOp& o) const;  // [this, o]

    ParamPoly apply(const ParamPoly& f) const;

    void add_term(const MultiIndex& idx, const ParamPoly& c);

    std::string to_string() const;

  private:
    SymbolsPtr syms_;
    std::map<MultiIndex, ParamPoly> terms_;
};

// Alphabet X1..XN.
SymbolsPtr witt_alphabet(unsigned N);

// The invariant derivation attached to b_{-i} on the truncated Witt
// coordinate ring: d_i + X_1 d_{i+1} + X_2 d_{i+2} + ... (indices <= N).
// Characterized by D_i(E) = t^i E for E = 1 + sum X_k t^k.
WittOp psi_univ(unsigned i, unsigned N);

// Z_i(X, Y) from (1 + sum X_i t^i)(1 + sum Y_j t^j) = 1 + sum Z_i t^i,
// over the doubled alphabet [X1..XN, Y1..YN].
struct CoproductTable {
    unsigned N = 0;
    SymbolsPtr xy;               // X1..XN, Y1..YN
    std::vector<ParamPoly> z;    // z[i-1] = Z_i
};
CoproductTable witt_coproduct(unsigned N);

struct WittCheck {
    bool ok = true;
    std::string witness;
};

// [psi_univ(i), psi_univ(j)] vanishes on indices <= N - 1 for all i < j <= N
// (boundary terms at index N are reported, not asserted).
WittCheck check_commuting(unsigned N);

// Left-invariance of psi_univ(i) through the coproduct, on coordinates
// Z_k with k <= N - 1; the k = N boundary is reported only.
WittCheck check_invariance(unsigned i, unsigned N);

// Same invariance test for an arbitrary operator (sensitivity control).
WittCheck check_invariance_of(const WittOp& op, unsigned N);

VerificationReport witt_report(unsigned N);

}  // namespace ellop
