#include "ellop/divided_op.hpp"

#include <sstream>

namespace ellop {

DividedOp DividedOp::zero(const WeierstrassCurve& curve) { return DividedOp(curve); }

DividedOp DividedOp::identity(const WeierstrassCurve& curve) {
    DividedOp r(curve);
    r.set_term(0, 0, CurveElement::constant(curve.syms, 1));
    return r;
}

DividedOp DividedOp::multiplication(const CurveElement& c, const WeierstrassCurve& curve) {
    DividedOp r(curve);
    r.set_term(0, 0, c);
    return r;
}

DividedOp DividedOp::divided_partial(const WeierstrassCurve& curve, long a, long b) {
    DividedOp r(curve);
    r.set_term(a, b, CurveElement::constant(curve.syms, 1));
    return r;
}

long DividedOp::order() const {
    long d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

CurveElement DividedOp::coefficient(long a, long b) const {
    auto it = terms_.find({a, b});
    if (it == terms_.end()) return CurveElement(curve_.syms);
    return it->second;
}

void DividedOp::check_compatible(const DividedOp& o) const {
    if (!(curve_ == o.curve_))
        throw std::invalid_argument("DividedOp: operators live on different curves");
}

void DividedOp::set_term(long a, long b, const CurveElement& c) {
    if (c.is_zero())
        terms_.erase({a, b});
    else
        terms_.insert_or_assign({a, b}, c);
}

void DividedOp::add_term(long a, long b, const CurveElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
        terms_.emplace(Key{a, b}, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DividedOp DividedOp::operator+(const DividedOp& o) const {
    check_compatible(o);
    DividedOp r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

DividedOp DividedOp::operator-() const {
    DividedOp r(curve_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DividedOp DividedOp::operator-(const DividedOp& o) const { return *this + (-o); }

bool DividedOp::operator==(const DividedOp& o) const {
    return curve_ == o.curve_ && terms_ == o.terms_;
}

DividedOp DividedOp::scaled(const Rat& c) const {
    DividedOp r(curve_);
    for (const auto& [k, v] : terms_) r.set_term(k.first, k.second, v.scaled(c));
    return r;
}

DividedOp DividedOp::scaled(const ParamPoly& c) const {
    DividedOp r(curve_);
    for (const auto& [k, v] : terms_) r.set_term(k.first, k.second, v.scaled(c));
    return r;
}

DividedOp DividedOp::compose(const DividedOp& o) const {
    check_compatible(o);
    DividedOp r(curve_);
    for (const auto& [ka, ca] : terms_) {
        const long m1 = ka.first, n1 = ka.second;
        for (const auto& [kb, cb] : o.terms_) {
            const long m2 = kb.first, n2 = kb.second;
            const CurvePoly& coeff = cb.poly();
            // dx^[m1] dy^[n1] (coeff .) dx^[m2] dy^[n2], two-variable divided
            // Leibniz followed by the binomial merge of like partials.
            for (long i = 0; i <= m1; ++i) {
                for (long j = 0; j <= n1; ++j) {
                    CurvePoly d = coeff.divided_partial_x(static_cast<unsigned>(i))
                                      .divided_partial_y(static_cast<unsigned>(j));
                    if (d.is_zero()) continue;
                    Rat cx(binomial(m1 - i + m2, static_cast<unsigned long>(m2)));
                    Rat cy(binomial(n1 - j + n2, static_cast<unsigned long>(n2)));
                    CurvePoly term = ca.poly() * d;
                    CurveElement red = reduce(term, curve_);
                    r.add_term(m1 - i + m2, n1 - j + n2, red.scaled(cx * cy));
                }
            }
        }
    }
    return r;
}

CurveElement DividedOp::apply(const CurveElement& h) const {
    CurvePoly acc(curve_.syms);
    for (const auto& [k, c] : terms_) {
        CurvePoly d = h.poly()
                          .divided_partial_x(static_cast<unsigned>(k.first))
                          .divided_partial_y(static_cast<unsigned>(k.second));
        if (d.is_zero()) continue;
        acc = acc + c.poly() * d;
    }
    return reduce(acc, curve_);
}

IntegralityResult DividedOp::is_integral() const {
    for (const auto& [k, c] : terms_) {
        if (!c.is_integral())
            return {false, "dx^[" + std::to_string(k.first) + "] dy^[" + std::to_string(k.second) +
                               "]: " + c.integrality_witness()};
    }
    return {true, ""};
}

DividedOp DividedOp::reduce_mod_p(long prime) const {
    DividedOp r(curve_);
    for (const auto& [k, c] : terms_) r.set_term(k.first, k.second, c.reduce_mod_p(prime));
    return r;
}

std::string DividedOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (k.first > 0) os << " * dx^[" << k.first << "]";
        if (k.second > 0) os << " * dy^[" << k.second << "]";
        first = false;
    }
    return os.str();
}

DividedOp tangent_derivation(const WeierstrassCurve& curve) {
    CurvePoly f = weierstrass_f(curve);
    DividedOp p(curve);
    p.set_term(1, 0, reduce(f.partial_y(1), curve));
    p.set_term(0, 1, reduce(-f.partial_x(1), curve));
    return p;
}

PowerFactorialResult power_over_factorial(const DividedOp& p, unsigned n) {
    if (n < 1) throw std::invalid_argument("power_over_factorial: n must be >= 1");
    DividedOp acc = p;
    for (unsigned i = 1; i < n; ++i) acc = acc.compose(p);
    Rat inv_fact = Rat(1) / Rat(factorial(n));
    DividedOp divided = acc.scaled(inv_fact);
    IntegralityResult integral = divided.is_integral();
    if (integral.ok) return {std::move(divided), true, ""};
    return {std::move(divided), false, integral.witness + " (divisor " + std::to_string(n) + "!)"};
}

bool equals_on_curve(const DividedOp& p, const DividedOp& q, long degree_bound) {
    if (degree_bound < std::max(p.order(), q.order()))
        throw std::invalid_argument("equals_on_curve: degree bound below operator order");
    const auto& syms = p.curve().syms;
    for (long i = 0; i <= degree_bound; ++i) {
        CurveElement xi = CurveElement::x_power(syms, static_cast<unsigned>(i), false);
        if (!(p.apply(xi) == q.apply(xi))) return false;
        CurveElement xiy = CurveElement::x_power(syms, static_cast<unsigned>(i), true);
        if (!(p.apply(xiy) == q.apply(xiy))) return false;
    }
    return true;
}

}  // namespace ellop
