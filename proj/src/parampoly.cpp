#include "ellop/parampoly.hpp"

#include <sstream>

namespace ellop {

SymbolsPtr make_symbols(std::initializer_list<std::string> names) {
    return std::make_shared<const SymbolList>(names);
}

SymbolsPtr make_symbols(SymbolList names) {
    return std::make_shared<const SymbolList>(std::move(names));
}

SymbolsPtr no_symbols() {
    static const SymbolsPtr empty = std::make_shared<const SymbolList>();
    return empty;
}

ParamPoly ParamPoly::constant(SymbolsPtr syms, const Rat& c) {
    ParamPoly p(std::move(syms));
    if (c != 0) p.terms_[Monomial{std::vector<unsigned>(p.syms_->size(), 0)}] = c;
    return p;
}

ParamPoly ParamPoly::variable(SymbolsPtr syms, std::size_t index, unsigned power) {
    if (index >= syms->size()) throw std::out_of_range("ParamPoly::variable: index out of range");
    ParamPoly p(std::move(syms));
    Monomial m{std::vector<unsigned>(p.syms_->size(), 0)};
    m.exp[index] = power;
    p.terms_[m] = 1;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat ParamPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("ParamPoly: not a constant: " + to_string());
    return terms_.begin()->second;
}

unsigned ParamPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool ParamPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string ParamPoly::integrality_witness() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return format_term(c, monomial_string(m), true);
    return "";
}

void ParamPoly::check_compatible(const ParamPoly& o) const {
    if (!same_symbols(syms_, o.syms_))
        throw std::invalid_argument("ParamPoly: mixing distinct parameter alphabets");
}

void ParamPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(syms_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    check_compatible(o);
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    check_compatible(o);
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    check_compatible(o);
    ParamPoly r(syms_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ParamPoly ParamPoly::scaled(const Rat& c) const {
    ParamPoly r(syms_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

ParamPoly ParamPoly::pow(unsigned n) const {
    ParamPoly r = constant(syms_, 1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
}

ParamPoly ParamPoly::reduce_mod_p(long prime) const {
    require_prime(prime, "reduce_mod_p");
    ParamPoly r(syms_);
    for (const auto& [m, c] : terms_) {
        if (!is_integer(c))
            throw NonIntegralError("reduce_mod_p: non-integral coefficient",
                                   format_term(c, monomial_string(m), true));
        Rat red = rat_mod_p(c, prime);
        if (red != 0) r.terms_[m] = red;
    }
    return r;
}

Rat ParamPoly::evaluated(const std::vector<Rat>& values) const {
    if (values.size() != syms_->size())
        throw std::invalid_argument("ParamPoly::evaluated: wrong number of values");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            for (unsigned e = 0; e < m.exp[i]; ++e) t *= values[i];
        acc += t;
    }
    return acc;
}

ParamPoly ParamPoly::substituted(const std::vector<ParamPoly>& images) const {
    if (images.size() != syms_->size())
        throw std::invalid_argument("ParamPoly::substituted: wrong number of images");
    SymbolsPtr target = images.empty() ? no_symbols() : images.front().symbols();
    ParamPoly acc(target);
    for (const auto& [m, c] : terms_) {
        ParamPoly t = ParamPoly::constant(target, c);
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (m.exp[i] > 0) t *= images[i].pow(m.exp[i]);
        acc += t;
    }
    return acc;
}

ParamPoly ParamPoly::extended(const SymbolsPtr& bigger) const {
    if (bigger->size() < syms_->size() ||
        !std::equal(syms_->begin(), syms_->end(), bigger->begin()))
        throw std::invalid_argument("ParamPoly::extended: alphabet is not a prefix extension");
    ParamPoly r(bigger);
    for (const auto& [m, c] : terms_) {
        Monomial big{std::vector<unsigned>(bigger->size(), 0)};
        std::copy(m.exp.begin(), m.exp.end(), big.exp.begin());
        r.terms_[big] = c;
    }
    return r;
}

ParamPoly ParamPoly::partial(std::size_t var) const {
    if (var >= syms_->size()) throw std::out_of_range("ParamPoly::partial: bad variable");
    ParamPoly r(syms_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.add_term(d, c * Rat(m.exp[var]));
    }
    return r;
}

ParamPoly ParamPoly::param_root(long prime, long* dropped) const {
    ParamPoly r(syms_);
    for (const auto& [m, c] : terms_) {
        bool divisible = true;
        Monomial d = m;
        for (std::size_t i = 0; i < d.exp.size(); ++i) {
            if (d.exp[i] % prime != 0) {
                divisible = false;
                break;
            }
            d.exp[i] /= static_cast<unsigned>(prime);
        }
        if (!divisible) {
            if (dropped) ++*dropped;
            continue;
        }
        r.add_term(d, c);
    }
    return r;
}

std::string ParamPoly::monomial_string(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) os << "*";
        os << (*syms_)[i];
        if (m.exp[i] > 1) os << "^" << m.exp[i];
        first = false;
    }
    return os.str();
}

std::string format_term(const Rat& c, const std::string& mono, bool leading) {
    Rat a = c < 0 ? Rat(-c) : c;
    std::ostringstream os;
    if (!leading)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    bool unit = (a == 1);
    if (!unit || mono.empty()) {
        if (is_integer(a))
            os << a.get_str();
        else
            os << "(" << a.get_str() << ")";
        if (!mono.empty()) os << "*";
    }
    os << mono;
    return os.str();
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        out += format_term(c, monomial_string(m), leading);
        leading = false;
    }
    return out;
}

}  // namespace ellop
