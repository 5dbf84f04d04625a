#include "ellop/local_op.hpp"

#include <sstream>

namespace ellop {

namespace {

// Divided derivative on a Laurent series: z^k -> C(k, i) z^(k-i).
LaurentSeries divided_derivative(const LaurentSeries& s, unsigned i) {
    if (i == 0) return s;
    std::vector<ParamPoly> c;
    long val = s.valuation();
    long prec = s.precision();
    for (long k = val; k < prec; ++k)
        c.push_back(s.coeff(k).scaled(Rat(binomial(k, i))));
    return LaurentSeries(s.var(), s.symbols(), val - static_cast<long>(i), std::move(c),
                         prec - static_cast<long>(i));
}

const std::string kVar = "z";

}  // namespace

LocalOp LocalOp::zero(SymbolsPtr syms, long precision) { return LocalOp(std::move(syms), precision); }

LocalOp LocalOp::identity(SymbolsPtr syms, long precision) {
    LocalOp r(syms, precision);
    r.set_term(0, LaurentSeries::monomial(kVar, syms, Rat(1), 0, precision));
    return r;
}

long LocalOp::max_order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentSeries LocalOp::coeff(long j) const {
    auto it = terms_.find(j);
    if (it == terms_.end()) return LaurentSeries::zero(kVar, syms_, prec_);
    return it->second;
}

void LocalOp::set_term(long j, const LaurentSeries& s) {
    prec_ = std::min(prec_, s.precision());
    if (s.is_zero())
        terms_.erase(j);
    else
        terms_.insert_or_assign(j, s);
}

void LocalOp::add_term(long j, const LaurentSeries& s) {
    prec_ = std::min(prec_, s.precision());
    auto it = terms_.find(j);
    if (it == terms_.end()) {
        if (!s.is_zero()) terms_.emplace(j, s);
    } else {
        LaurentSeries sum = it->second + s;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

LocalOp LocalOp::operator+(const LocalOp& o) const {
    LocalOp r = *this;
    r.prec_ = std::min(prec_, o.prec_);
    for (const auto& [j, s] : o.terms_) r.add_term(j, s);
    return r;
}

LocalOp LocalOp::operator-(const LocalOp& o) const {
    LocalOp r = *this;
    r.prec_ = std::min(prec_, o.prec_);
    for (const auto& [j, s] : o.terms_) r.add_term(j, -s);
    return r;
}

bool LocalOp::operator==(const LocalOp& o) const {
    return same_symbols(syms_, o.syms_) && prec_ == o.prec_ && terms_ == o.terms_;
}

LocalOp LocalOp::scaled(const Rat& c) const {
    LocalOp r(syms_, prec_);
    if (c == 0) return r;
    for (const auto& [j, s] : terms_) r.terms_.emplace(j, s.scaled(c));
    return r;
}

LocalOp LocalOp::scaled(const ParamPoly& c) const {
    LocalOp r(syms_, prec_);
    if (c.is_zero()) return r;
    for (const auto& [j, s] : terms_) r.set_term(j, s.scaled(c));
    return r;
}

LocalOp LocalOp::compose(const LocalOp& o) const {
    if (!same_symbols(syms_, o.syms_))
        throw std::invalid_argument("LocalOp::compose: mixed parameter alphabets");
    LocalOp r(syms_, std::min(prec_, o.prec_));
    for (const auto& [m, a] : terms_) {
        for (const auto& [n, b] : o.terms_) {
            for (long i = 0; i <= m; ++i) {
                LaurentSeries d = divided_derivative(b, static_cast<unsigned>(i));
                Rat c(binomial(m - i + n, static_cast<unsigned long>(n)));
                // Zero summands still carry precision information.
                r.add_term(m - i + n, (a * d).scaled(c));
            }
        }
    }
    return r;
}

LocalOp LocalOp::reduce_mod_p(long prime) const {
    LocalOp r(syms_, prec_);
    for (const auto& [j, s] : terms_) r.set_term(j, s.reduce_mod_p(prime));
    return r;
}

LocalOp LocalOp::truncated(long new_prec) const {
    if (new_prec > prec_)
        throw std::invalid_argument("LocalOp::truncated: cannot raise precision");
    LocalOp r(syms_, new_prec);
    for (const auto& [j, s] : terms_) r.set_term(j, s.truncated(new_prec));
    return r;
}

LocalOp::RegularIntegralResult LocalOp::regular_and_integral() const {
    for (const auto& [j, s] : terms_) {
        if (!s.is_zero() && s.valuation() < 0)
            return {false, "dz^[" + std::to_string(j) + "]: valuation " +
                               std::to_string(s.valuation()) + " < 0"};
        if (!s.is_integral())
            return {false, "dz^[" + std::to_string(j) + "]: " + s.integrality_witness()};
    }
    return {true, ""};
}

bool LocalOp::agrees_with(const LocalOp& o, long limit) const {
    long hi = std::max(max_order(), o.max_order());
    for (long j = 0; j <= hi; ++j)
        if (!coeff(j).agrees_with(o.coeff(j), limit)) return false;
    return true;
}

std::string LocalOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, s] : terms_) {
        if (!first) os << " + ";
        os << "[" << s.to_string() << "]";
        if (j > 0) os << " * dz^[" << j << "]";
        first = false;
    }
    return os.str();
}

LocalOp p_local(const WeierstrassCurve& curve, long N) {
    if (N < 4) throw std::invalid_argument("p_local: need N >= 4");
    const auto& syms = curve.syms;
    LaurentSeries w = chart_series_w(curve, N);
    LaurentSeries one = LaurentSeries::monomial(kVar, syms, Rat(1), 0, N);
    LaurentSeries z1 = LaurentSeries::monomial(kVar, syms, Rat(1), 1, N);
    LaurentSeries z2 = LaurentSeries::monomial(kVar, syms, Rat(1), 2, N);
    LaurentSeries w2 = (w * w).truncated(N);
    LaurentSeries s = one - z1.scaled(curve.a1) - w.scaled(curve.a3).scaled(Rat(2)) -
                      z2.scaled(curve.a2) - w.shifted(1).truncated(N).scaled(curve.a4).scaled(Rat(2)) -
                      w2.scaled(curve.a6).scaled(Rat(3));
    LocalOp p(syms, N);
    p.set_term(1, s);
    return p;
}

LocalOp from_p_polynomial(const std::vector<std::pair<ParamPoly, int>>& poly,
                          const WeierstrassCurve& curve, long N) {
    // Composition erodes precision through the divided derivatives; build the
    // powers with enough padding that the result is exact to N, then truncate.
    long maxdeg = 0;
    for (const auto& [c, k] : poly) maxdeg = std::max(maxdeg, static_cast<long>(k));
    long pad = maxdeg * (maxdeg + 1) / 2 + 1;
    LocalOp base = p_local(curve, N + pad);
    LocalOp acc = LocalOp::zero(curve.syms, N + pad);
    // Power cache, built on demand.
    std::map<int, LocalOp> powers;
    powers.emplace(0, LocalOp::identity(curve.syms, N + pad));
    auto power = [&](int k) -> const LocalOp& {
        int have = powers.rbegin()->first;
        while (have < k) {
            LocalOp next = powers.at(have).compose(base);
            ++have;
            powers.emplace(have, std::move(next));
        }
        return powers.at(k);
    };
    for (const auto& [c, k] : poly) {
        if (k < 0) throw std::invalid_argument("from_p_polynomial: negative degree");
        acc = acc + power(k).scaled(c);
    }
    if (acc.precision() < N)
        throw std::logic_error("from_p_polynomial: padding underestimated the precision loss");
    return acc.truncated(N);
}

DescentResult frobenius_descent(const LocalOp& p, long prime) {
    require_prime(prime, "frobenius_descent");
    // Reject non-reduced input: coefficients must equal their mod-p reduction.
    for (const auto& [j, s] : p.terms()) {
        for (long k = s.valuation(); k < s.precision(); ++k) {
            ParamPoly c = s.coeff(k);
            if (!c.is_integral() || !(c == c.reduce_mod_p(prime)))
                throw std::invalid_argument(
                    "frobenius_descent: input not reduced mod " + std::to_string(prime) +
                    " at dz^[" + std::to_string(j) + "], z^" + std::to_string(k));
        }
    }
    long new_prec = (p.precision() - 1) / prime + 1;
    DescentResult result{LocalOp::zero(p.symbols(), new_prec), 0, 0};
    for (const auto& [j, s] : p.terms()) {
        if (j % prime != 0) {
            ++result.dropped_order_or_exponent;
            continue;
        }
        long sp = (s.precision() - 1) / prime + 1;  // descended precision of this series
        std::vector<ParamPoly> keep;
        long lo = s.valuation();
        long start = lo / prime;
        while (start * prime < lo) ++start;
        for (long m = start; m < sp; ++m) {
            ParamPoly c = s.coeff(m * prime);
            long dropped_param = 0;
            keep.push_back(c.param_root(prime, &dropped_param));
            result.dropped_parameter += dropped_param;
        }
        for (long k = lo; k < s.precision(); ++k)
            if (k % prime != 0 && !s.coeff(k).is_zero()) ++result.dropped_order_or_exponent;
        LaurentSeries ser(kVar, p.symbols(), start, std::move(keep), sp);
        result.op.add_term(j / prime, ser);
    }
    return result;
}

}  // namespace ellop
