#include "ellop/curve.hpp"

#include <sstream>

namespace ellop {

WeierstrassCurve WeierstrassCurve::general() {
    auto syms = make_symbols({"a1", "a2", "a3", "a4", "a6"});
    return {syms,
            ParamPoly::variable(syms, 0),
            ParamPoly::variable(syms, 1),
            ParamPoly::variable(syms, 2),
            ParamPoly::variable(syms, 3),
            ParamPoly::variable(syms, 4),
            "general"};
}

WeierstrassCurve WeierstrassCurve::legendre() {
    auto syms = make_symbols({"lambda"});
    ParamPoly lam = ParamPoly::variable(syms, 0);
    ParamPoly one = ParamPoly::constant(syms, 1);
    return {syms,
            ParamPoly(syms),
            -(one + lam),  // a2 = -(1 + lambda)
            ParamPoly(syms),
            lam,  // a4 = lambda
            ParamPoly(syms),
            "legendre"};
}

WeierstrassCurve WeierstrassCurve::tate_singular() {
    auto syms = no_symbols();
    return {syms,
            ParamPoly::constant(syms, 1),
            ParamPoly(syms),
            ParamPoly(syms),
            ParamPoly(syms),
            ParamPoly(syms),
            "tate-singular"};
}

WeierstrassCurve WeierstrassCurve::from_coefficients(SymbolsPtr syms, ParamPoly a1, ParamPoly a2,
                                                     ParamPoly a3, ParamPoly a4, ParamPoly a6,
                                                     std::string name) {
    return {std::move(syms), std::move(a1), std::move(a2), std::move(a3),
            std::move(a4),  std::move(a6), std::move(name)};
}

bool WeierstrassCurve::is_integral() const {
    return a1.is_integral() && a2.is_integral() && a3.is_integral() && a4.is_integral() &&
           a6.is_integral();
}

bool WeierstrassCurve::operator==(const WeierstrassCurve& o) const {
    return same_symbols(syms, o.syms) && a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 &&
           a6 == o.a6;
}

WeierstrassCurve WeierstrassCurve::specialized(const std::vector<Rat>& values) const {
    auto none = no_symbols();
    auto spec = [&](const ParamPoly& p) {
        return ParamPoly::constant(none, p.evaluated(values));
    };
    return {none, spec(a1), spec(a2), spec(a3), spec(a4), spec(a6), name + "(specialized)"};
}

std::string WeierstrassCurve::to_string() const {
    std::ostringstream os;
    os << "a1=" << a1.to_string() << ", a2=" << a2.to_string() << ", a3=" << a3.to_string()
       << ", a4=" << a4.to_string() << ", a6=" << a6.to_string();
    return os.str();
}

// ---------------------------------------------------------------------------
// CurvePoly

CurvePoly CurvePoly::constant(SymbolsPtr syms, const Rat& c) {
    CurvePoly p(std::move(syms));
    p.add_term(0, 0, ParamPoly::constant(p.syms_, c));
    return p;
}

CurvePoly CurvePoly::monomial(SymbolsPtr syms, const ParamPoly& c, long xe, long ye) {
    CurvePoly p(std::move(syms));
    p.add_term(xe, ye, c);
    return p;
}

long CurvePoly::x_degree() const {
    long d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

long CurvePoly::y_degree() const {
    long d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

void CurvePoly::check_compatible(const CurvePoly& o) const {
    if (!same_symbols(syms_, o.syms_))
        throw std::invalid_argument("CurvePoly: mixing distinct parameter alphabets");
}

void CurvePoly::set_term(long xe, long ye, const ParamPoly& c) {
    if (c.is_zero())
        terms_.erase({xe, ye});
    else
        terms_[{xe, ye}] = c;
}

void CurvePoly::add_term(long xe, long ye, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({xe, ye});
    if (it == terms_.end()) {
        terms_[{xe, ye}] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CurvePoly CurvePoly::operator+(const CurvePoly& o) const {
    check_compatible(o);
    CurvePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

CurvePoly CurvePoly::operator-() const {
    CurvePoly r(syms_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

CurvePoly CurvePoly::operator-(const CurvePoly& o) const { return *this + (-o); }

CurvePoly CurvePoly::operator*(const CurvePoly& o) const {
    check_compatible(o);
    CurvePoly r(syms_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

bool CurvePoly::operator==(const CurvePoly& o) const {
    return same_symbols(syms_, o.syms_) && terms_ == o.terms_;
}

CurvePoly CurvePoly::scaled(const ParamPoly& c) const {
    CurvePoly r(syms_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

CurvePoly CurvePoly::scaled(const Rat& c) const {
    CurvePoly r(syms_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v.scaled(c));
    return r;
}

CurvePoly CurvePoly::pow(unsigned n) const {
    CurvePoly r = constant(syms_, 1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

CurvePoly CurvePoly::divided_partial_x(unsigned k) const {
    CurvePoly r(syms_);
    for (const auto& [key, c] : terms_) {
        if (key.first < static_cast<long>(k)) continue;
        Rat b(binomial(key.first, k));
        r.add_term(key.first - static_cast<long>(k), key.second, c.scaled(b));
    }
    return r;
}

CurvePoly CurvePoly::divided_partial_y(unsigned k) const {
    CurvePoly r(syms_);
    for (const auto& [key, c] : terms_) {
        if (key.second < static_cast<long>(k)) continue;
        Rat b(binomial(key.second, k));
        r.add_term(key.first, key.second - static_cast<long>(k), c.scaled(b));
    }
    return r;
}

CurvePoly CurvePoly::partial_x(unsigned k) const {
    return divided_partial_x(k).scaled(Rat(factorial(k)));
}

CurvePoly CurvePoly::partial_y(unsigned k) const {
    return divided_partial_y(k).scaled(Rat(factorial(k)));
}

bool CurvePoly::is_integral() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_integral()) return false;
    return true;
}

std::string CurvePoly::integrality_witness() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_integral())
            return "x^" + std::to_string(k.first) + " y^" + std::to_string(k.second) + ": " +
                   c.integrality_witness();
    return "";
}

CurvePoly CurvePoly::reduce_mod_p(long prime) const {
    CurvePoly r(syms_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c.reduce_mod_p(prime));
    return r;
}

LaurentSeries CurvePoly::eval_series(const LaurentSeries& xs, const LaurentSeries& ys) const {
    // Power caches; exponents here stay small.
    long prec = std::min(xs.precision(), ys.precision());
    LaurentSeries acc = LaurentSeries::zero(xs.var(), syms_, prec);
    for (const auto& [k, c] : terms_) {
        LaurentSeries t = LaurentSeries::monomial(xs.var(), syms_, Rat(1), 0, prec);
        for (long i = 0; i < k.first; ++i) t = t * xs;
        for (long j = 0; j < k.second; ++j) t = t * ys;
        acc = acc + t.scaled(c);
    }
    return acc;
}

std::string CurvePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        if (k.first > 0) mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        if (c.is_constant()) {
            os << format_term(c.constant_value(), mono, first);
        } else {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CurveElement

CurveElement CurveElement::from_reduced(CurvePoly poly) {
    if (poly.y_degree() > 1)
        throw std::invalid_argument("CurveElement: y-degree exceeds 1; reduce first");
    CurveElement e(poly.symbols());
    e.p_ = std::move(poly);
    return e;
}

CurveElement CurveElement::constant(SymbolsPtr syms, const Rat& c) {
    return from_reduced(CurvePoly::constant(std::move(syms), c));
}

CurveElement CurveElement::x_power(SymbolsPtr syms, unsigned i, bool times_y) {
    CurvePoly p(syms);
    p.add_term(i, times_y ? 1 : 0, ParamPoly::constant(syms, 1));
    return from_reduced(std::move(p));
}

std::vector<ParamPoly> CurveElement::a_coeffs() const {
    std::vector<ParamPoly> r(static_cast<std::size_t>(p_.x_degree()) + 1, ParamPoly(symbols()));
    for (const auto& [k, c] : p_.terms())
        if (k.second == 0) r[static_cast<std::size_t>(k.first)] = c;
    return r;
}

std::vector<ParamPoly> CurveElement::b_coeffs() const {
    std::vector<ParamPoly> r(static_cast<std::size_t>(p_.x_degree()) + 1, ParamPoly(symbols()));
    for (const auto& [k, c] : p_.terms())
        if (k.second == 1) r[static_cast<std::size_t>(k.first)] = c;
    return r;
}

CurveElement CurveElement::operator+(const CurveElement& o) const {
    return from_reduced(p_ + o.p_);
}

CurveElement CurveElement::operator-(const CurveElement& o) const {
    return from_reduced(p_ - o.p_);
}

CurveElement CurveElement::operator-() const { return from_reduced(-p_); }

bool CurveElement::operator==(const CurveElement& o) const { return p_ == o.p_; }

CurveElement CurveElement::scaled(const ParamPoly& c) const { return from_reduced(p_.scaled(c)); }

CurveElement CurveElement::scaled(const Rat& c) const { return from_reduced(p_.scaled(c)); }

CurveElement CurveElement::reduce_mod_p(long prime) const {
    return from_reduced(p_.reduce_mod_p(prime));
}

// ---------------------------------------------------------------------------
// Curve operations

CurvePoly weierstrass_f(const WeierstrassCurve& curve) {
    const auto& s = curve.syms;
    CurvePoly f(s);
    f.add_term(0, 2, ParamPoly::constant(s, 1));
    f.add_term(1, 1, curve.a1);
    f.add_term(0, 1, curve.a3);
    f.add_term(3, 0, ParamPoly::constant(s, -1));
    f.add_term(2, 0, -curve.a2);
    f.add_term(1, 0, -curve.a4);
    f.add_term(0, 0, -curve.a6);
    return f;
}

CurveElement reduce(const CurvePoly& p, const WeierstrassCurve& curve) {
    const auto& s = curve.syms;
    if (!same_symbols(s, p.symbols()))
        throw std::invalid_argument("reduce: polynomial and curve alphabets differ");
    // y^2 = x^3 + a2 x^2 + a4 x + a6 - a1 xy - a3 y
    CurvePoly rhs(s);
    rhs.add_term(3, 0, ParamPoly::constant(s, 1));
    rhs.add_term(2, 0, curve.a2);
    rhs.add_term(1, 0, curve.a4);
    rhs.add_term(0, 0, curve.a6);
    rhs.add_term(1, 1, -curve.a1);
    rhs.add_term(0, 1, -curve.a3);

    CurvePoly work = p;
    while (work.y_degree() > 1) {
        CurvePoly next(s);
        for (const auto& [k, c] : work.terms()) {
            if (k.second <= 1) {
                next.add_term(k.first, k.second, c);
            } else {
                // c x^i y^j -> c x^i y^(j-2) * rhs
                for (const auto& [rk, rc] : rhs.terms())
                    next.add_term(k.first + rk.first, k.second - 2 + rk.second, c * rc);
            }
        }
        work = std::move(next);
    }
    return CurveElement::from_reduced(std::move(work));
}

CurveElement multiply_on_curve(const CurveElement& a, const CurveElement& b,
                               const WeierstrassCurve& curve) {
    return reduce(a.poly() * b.poly(), curve);
}

LaurentSeries chart_series_w(const WeierstrassCurve& curve, long N) {
    if (N < 4) throw std::invalid_argument("chart_series_w: need N >= 4");
    const auto& s = curve.syms;
    const std::string z = "z";
    LaurentSeries w = LaurentSeries::monomial(z, s, Rat(1), 3, N);
    // Fixed-point iteration with a doubling precision schedule; contraction in
    // the z-adic topology gains at least one valid order per pass.
    for (long prec = std::min<long>(8, N);; prec = std::min(2 * prec, N)) {
        LaurentSeries wt = w.truncated(prec);
        for (;;) {
            LaurentSeries z3 = LaurentSeries::monomial(z, s, Rat(1), 3, prec);
            LaurentSeries zw = wt.shifted(1).truncated(prec);
            LaurentSeries w2 = (wt * wt).truncated(prec);
            LaurentSeries next = z3 + zw.scaled(curve.a1) + zw.shifted(1).truncated(prec).scaled(curve.a2) +
                                 w2.scaled(curve.a3) + w2.shifted(1).truncated(prec).scaled(curve.a4) +
                                 (w2 * wt).truncated(prec).scaled(curve.a6);
            if (next == wt) break;
            wt = next;
        }
        if (prec == N) return wt;
        // Seed the next level with the converged lower-precision tail.
        std::vector<ParamPoly> c;
        for (long k = wt.valuation(); k < wt.precision(); ++k) c.push_back(wt.coeff(k));
        w = LaurentSeries(z, s, wt.valuation(), std::move(c), N);
    }
}

std::pair<LaurentSeries, LaurentSeries> local_xy(const WeierstrassCurve& curve, long N) {
    if (N < 4) throw std::invalid_argument("local_xy: need N >= 4");
    LaurentSeries w = chart_series_w(curve, N + 6);
    LaurentSeries winv = w.inverse();  // valuation -3, precision N
    LaurentSeries x = winv.shifted(1); // z / w
    LaurentSeries y = -winv;
    return {x.truncated(N), y.truncated(N)};
}

std::vector<ParamPoly> invariant_differential(const WeierstrassCurve& curve, long N) {
    if (N < 4) throw std::invalid_argument("invariant_differential: need N >= 4");
    auto [x, y] = local_xy(curve, N + 4);
    const auto& s = curve.syms;
    LaurentSeries xp = x.derivative();
    LaurentSeries den = y.scaled(Rat(2)) + x.scaled(curve.a1) +
                        LaurentSeries::monomial("z", s, curve.a3, 0, y.precision());
    LaurentSeries omega = xp * den.inverse();
    std::vector<ParamPoly> alpha;
    alpha.reserve(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) alpha.push_back(omega.coeff(i));
    return alpha;
}

std::vector<ParamPoly> i_coefficients(const WeierstrassCurve& curve, long N) {
    if (N < 2) throw std::invalid_argument("i_coefficients: need N >= 2");
    std::vector<ParamPoly> alpha = invariant_differential(curve, std::max<long>(N, 4));
    std::vector<ParamPoly> I;
    I.reserve(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) I.push_back(-alpha[static_cast<std::size_t>(i)]);
    return I;
}

}  // namespace ellop
