#include "ellop/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ellop {

LaurentSeries::LaurentSeries(std::string var, SymbolsPtr syms, long valuation,
                             std::vector<ParamPoly> coeffs, long precision)
    : var_(std::move(var)), syms_(std::move(syms)), val_(valuation), coef_(std::move(coeffs)),
      prec_(precision) {
    if (val_ + static_cast<long>(coef_.size()) > prec_)
        throw std::invalid_argument("LaurentSeries: coefficients extend beyond precision");
    coef_.resize(static_cast<std::size_t>(prec_ - val_), ParamPoly(syms_));
    normalize();
}

LaurentSeries LaurentSeries::zero(std::string var, SymbolsPtr syms, long precision) {
    return LaurentSeries(std::move(var), std::move(syms), precision, {}, precision);
}

LaurentSeries LaurentSeries::monomial(std::string var, SymbolsPtr syms, const ParamPoly& c,
                                      long exponent, long precision) {
    if (exponent >= precision)
        throw std::invalid_argument("LaurentSeries::monomial: exponent beyond precision");
    return LaurentSeries(std::move(var), syms, exponent, {c}, precision);
}

LaurentSeries LaurentSeries::monomial(std::string var, SymbolsPtr syms, const Rat& c,
                                      long exponent, long precision) {
    ParamPoly p = ParamPoly::constant(syms, c);
    return monomial(std::move(var), std::move(syms), p, exponent, precision);
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coef_.size() && coef_[lead].is_zero()) ++lead;
    if (lead == coef_.size()) {
        coef_.clear();
        val_ = prec_;
        return;
    }
    if (lead > 0) {
        coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("LaurentSeries: mixed variables");
    if (!same_symbols(syms_, o.syms_))
        throw std::invalid_argument("LaurentSeries: mixed parameter alphabets");
}

ParamPoly LaurentSeries::coeff(long k) const {
    if (k >= prec_)
        throw std::out_of_range("LaurentSeries::coeff: exponent " + std::to_string(k) +
                                " beyond precision " + std::to_string(prec_));
    if (k < val_ || coef_.empty()) return ParamPoly(syms_);
    return coef_[static_cast<std::size_t>(k - val_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_compatible(o);
    long prec = std::min(prec_, o.prec_);
    long val = std::min(val_, o.val_);
    if (val >= prec) return zero(var_, syms_, prec);
    std::vector<ParamPoly> c(static_cast<std::size_t>(prec - val), ParamPoly(syms_));
    for (long k = val; k < prec; ++k) {
        ParamPoly s(syms_);
        if (k >= val_ && k < val_ + static_cast<long>(coef_.size()))
            s += coef_[static_cast<std::size_t>(k - val_)];
        if (k >= o.val_ && k < o.val_ + static_cast<long>(o.coef_.size()))
            s += o.coef_[static_cast<std::size_t>(k - o.val_)];
        c[static_cast<std::size_t>(k - val)] = s;
    }
    return LaurentSeries(var_, syms_, val, std::move(c), prec);
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<ParamPoly> c;
    c.reserve(coef_.size());
    for (const auto& p : coef_) c.push_back(-p);
    return LaurentSeries(var_, syms_, val_, std::move(c), prec_);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check_compatible(o);
    long prec = std::min(prec_ + o.val_, o.prec_ + val_);
    long val = val_ + o.val_;
    if (is_zero() || o.is_zero() || val >= prec)
        return zero(var_, syms_, prec);
    std::vector<ParamPoly> c(static_cast<std::size_t>(prec - val), ParamPoly(syms_));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j) {
            long k = val_ + static_cast<long>(i) + o.val_ + static_cast<long>(j);
            if (k >= prec) break;
            if (o.coef_[j].is_zero()) continue;
            c[static_cast<std::size_t>(k - val)] += coef_[i] * o.coef_[j];
        }
    }
    return LaurentSeries(var_, syms_, val, std::move(c), prec);
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return var_ == o.var_ && same_symbols(syms_, o.syms_) && val_ == o.val_ &&
           prec_ == o.prec_ && coef_ == o.coef_;
}

LaurentSeries LaurentSeries::scaled(const ParamPoly& c) const {
    std::vector<ParamPoly> r;
    r.reserve(coef_.size());
    for (const auto& p : coef_) r.push_back(p * c);
    return LaurentSeries(var_, syms_, val_, std::move(r), prec_);
}

LaurentSeries LaurentSeries::scaled(const Rat& c) const {
    std::vector<ParamPoly> r;
    r.reserve(coef_.size());
    for (const auto& p : coef_) r.push_back(p.scaled(c));
    return LaurentSeries(var_, syms_, val_, std::move(r), prec_);
}

LaurentSeries LaurentSeries::shifted(long k) const {
    return LaurentSeries(var_, syms_, val_ + k, coef_, prec_ + k);
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
    if (new_prec > prec_)
        throw std::invalid_argument("LaurentSeries::truncated: cannot raise precision");
    if (new_prec <= val_) return zero(var_, syms_, new_prec);
    std::vector<ParamPoly> c(coef_.begin(),
                             coef_.begin() + static_cast<long>(new_prec - val_));
    return LaurentSeries(var_, syms_, val_, std::move(c), new_prec);
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero())
        throw std::domain_error("LaurentSeries::inverse: zero series");
    const ParamPoly& lead = coef_.front();
    if (!lead.is_constant())
        throw std::domain_error("LaurentSeries::inverse: leading coefficient " +
                                lead.to_string() + " is not an invertible constant");
    Rat c0 = lead.constant_value();
    long rel = prec_ - val_;  // known coefficients, relative to the valuation
    // (c0 z^v (1+u))^-1 = c0^-1 z^-v sum (-u)^k, solved by back-substitution.
    std::vector<ParamPoly> inv(static_cast<std::size_t>(rel), ParamPoly(syms_));
    Rat inv0 = Rat(1) / c0;
    inv[0] = ParamPoly::constant(syms_, inv0);
    for (long n = 1; n < rel; ++n) {
        ParamPoly s(syms_);
        for (long k = 1; k <= n; ++k)
            s += coef_[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
        inv[static_cast<std::size_t>(n)] = s.scaled(-inv0);
    }
    return LaurentSeries(var_, syms_, -val_, std::move(inv), rel - val_);
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<ParamPoly> c;
    c.reserve(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        long k = val_ + static_cast<long>(i);
        c.push_back(coef_[i].scaled(Rat(k)));
    }
    return LaurentSeries(var_, syms_, val_ - 1, std::move(c), prec_ - 1);
}

LaurentSeries LaurentSeries::compose_power(unsigned k) const {
    if (k == 0) throw std::invalid_argument("LaurentSeries::compose_power: k must be >= 1");
    long kk = static_cast<long>(k);
    long prec = kk * (prec_ - 1) + 1;
    long val = kk * val_;
    if (is_zero()) return zero(var_, syms_, prec);
    std::vector<ParamPoly> c(static_cast<std::size_t>(prec - val), ParamPoly(syms_));
    for (std::size_t i = 0; i < coef_.size(); ++i)
        c[static_cast<std::size_t>(kk * static_cast<long>(i))] = coef_[i];
    return LaurentSeries(var_, syms_, val, std::move(c), prec);
}

LaurentSeries LaurentSeries::reduce_mod_p(long prime) const {
    std::vector<ParamPoly> c;
    c.reserve(coef_.size());
    for (const auto& p : coef_) c.push_back(p.reduce_mod_p(prime));
    return LaurentSeries(var_, syms_, val_, std::move(c), prec_);
}

bool LaurentSeries::is_integral() const {
    for (const auto& p : coef_)
        if (!p.is_integral()) return false;
    return true;
}

std::string LaurentSeries::integrality_witness() const {
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (!coef_[i].is_integral())
            return var_ + "^" + std::to_string(val_ + static_cast<long>(i)) + ": " +
                   coef_[i].integrality_witness();
    return "";
}

bool LaurentSeries::agrees_with(const LaurentSeries& o, long limit) const {
    check_compatible(o);
    if (limit > prec_ || limit > o.prec_)
        throw std::out_of_range("LaurentSeries::agrees_with: limit beyond precision");
    long lo = std::min(val_, o.val_);
    for (long k = lo; k < limit; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        long k = val_ + static_cast<long>(i);
        if (!first) os << " + ";
        os << "(" << coef_[i].to_string() << ")";
        if (k != 0) os << "*" << var_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var_ << "^" << prec_ << ")";
    return os.str();
}

}  // namespace ellop
