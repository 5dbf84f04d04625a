#include "ellop/witt.hpp"

#include <sstream>

namespace ellop {

void WittOp::add_term(const MultiIndex& idx, const ParamPoly& c) {
    if (idx.size() != syms_->size())
        throw std::invalid_argument("WittOp: multi-index length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_[idx] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WittOp WittOp::operator+(const WittOp& o) const {
    WittOp r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
}

WittOp WittOp::operator-(const WittOp& o) const {
    WittOp r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
    return r;
}

bool WittOp::operator==(const WittOp& o) const {
    return same_symbols(syms_, o.syms_) && terms_ == o.terms_;
}

namespace {

ParamPoly iterated_partial(const ParamPoly& f, const WittOp::MultiIndex& idx) {
    ParamPoly r = f;
    for (std::size_t v = 0; v < idx.size(); ++v)
        for (unsigned k = 0; k < idx[v]; ++k) r = r.partial(v);
    return r;
}

// All gamma with gamma_i <= alpha_i, odometer order.
bool next_below(WittOp::MultiIndex& gamma, const WittOp::MultiIndex& alpha) {
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < alpha[i]) {
            ++gamma[i];
            for (std::size_t j = 0; j < i; ++j) gamma[j] = 0;
            return true;
        }
    }
    return false;
}

Rat multi_binomial(const WittOp::MultiIndex& alpha, const WittOp::MultiIndex& gamma) {
    Int b = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) b *= binomial(Int(alpha[i]), gamma[i]);
    return Rat(b);
}

}  // namespace

ParamPoly WittOp::apply(const ParamPoly& f) const {
    ParamPoly acc(syms_);
    for (const auto& [idx, c] : terms_) acc += c * iterated_partial(f, idx);
    return acc;
}

WittOp WittOp::compose(const WittOp& o) const {
    if (!same_symbols(syms_, o.syms_))
        throw std::invalid_argument("WittOp::compose: mixed alphabets");
    WittOp r(syms_);
    for (const auto& [alpha, c] : terms_) {
        for (const auto& [beta, d] : o.terms_) {
            // c d^alpha (d .) d^beta = sum_{gamma <= alpha} C(alpha, gamma)
            //   c d^gamma(d) d^(alpha - gamma + beta)
            MultiIndex gamma(alpha.size(), 0);
            do {
                ParamPoly dg = iterated_partial(d, gamma);
                if (dg.is_zero()) continue;
                MultiIndex out(alpha.size());
                for (std::size_t i = 0; i < alpha.size(); ++i)
                    out[i] = alpha[i] - gamma[i] + beta[i];
                r.add_term(out, (c * dg).scaled(multi_binomial(alpha, gamma)));
            } while (next_below(gamma, alpha));
        }
    }
    return r;
}

WittOp WittOp::commutator(const WittOp& o) const { return compose(o) - o.compose(*this); }

std::string WittOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (unsigned k = 0; k < idx[i]; ++k) os << " d/d" << (*syms_)[i];
        first = false;
    }
    return os.str();
}

SymbolsPtr witt_alphabet(unsigned N) {
    SymbolList names;
    for (unsigned i = 1; i <= N; ++i) names.push_back("X" + std::to_string(i));
    return make_symbols(std::move(names));
}

WittOp psi_univ(unsigned i, unsigned N) {
    if (i < 1 || i > N) throw std::out_of_range("psi_univ: need 1 <= i <= N");
    auto syms = witt_alphabet(N);
    WittOp op(syms);
    WittOp::MultiIndex di(N, 0);
    di[i - 1] = 1;
    op.add_term(di, ParamPoly::constant(syms, 1));
    for (unsigned m = 1; m + i <= N; ++m) {
        WittOp::MultiIndex idx(N, 0);
        idx[m + i - 1] = 1;
        op.add_term(idx, ParamPoly::variable(syms, m - 1));
    }
    return op;
}

CoproductTable witt_coproduct(unsigned N) {
    if (N < 1) throw std::invalid_argument("witt_coproduct: need N >= 1");
    SymbolList names;
    for (unsigned i = 1; i <= N; ++i) names.push_back("X" + std::to_string(i));
    for (unsigned i = 1; i <= N; ++i) names.push_back("Y" + std::to_string(i));
    CoproductTable table;
    table.N = N;
    table.xy = make_symbols(std::move(names));
    for (unsigned i = 1; i <= N; ++i) {
        ParamPoly zi = ParamPoly::variable(table.xy, i - 1) +
                       ParamPoly::variable(table.xy, N + i - 1);
        for (unsigned j = 1; j < i; ++j)
            zi += ParamPoly::variable(table.xy, j - 1) *
                  ParamPoly::variable(table.xy, N + (i - j) - 1);
        table.z.push_back(zi);
    }
    return table;
}

WittCheck check_commuting(unsigned N) {
    if (N < 2) throw std::invalid_argument("check_commuting: need N >= 2");
    for (unsigned i = 1; i <= N; ++i) {
        for (unsigned j = i + 1; j <= N; ++j) {
            WittOp bracket = psi_univ(i, N).commutator(psi_univ(j, N));
            for (const auto& [idx, c] : bracket.terms()) {
                bool interior = false;
                for (std::size_t v = 0; v + 1 < idx.size(); ++v)
                    if (idx[v] > 0) interior = true;
                if (interior)
                    return {false, "[psi(" + std::to_string(i) + "), psi(" + std::to_string(j) +
                                       ")] has interior term (" + c.to_string() + ") " +
                                       bracket.to_string()};
            }
        }
    }
    return {true, ""};
}

namespace {

WittCheck invariance_check_impl(const WittOp& op_on_x, unsigned N) {
    CoproductTable table = witt_coproduct(N);
    // Lift op to the Y block: rename X_m -> Y_m in coefficients and indices.
    WittOp op_y(table.xy);
    for (const auto& [idx, c] : op_on_x.terms()) {
        WittOp::MultiIndex lifted(2 * N, 0);
        for (std::size_t v = 0; v < idx.size(); ++v) lifted[N + v] = idx[v];
        std::vector<ParamPoly> y_images;
        for (unsigned m = 1; m <= N; ++m)
            y_images.push_back(ParamPoly::variable(table.xy, N + m - 1));
        op_y.add_term(lifted, c.substituted(y_images));
    }
    std::vector<ParamPoly> z_images(table.z);

    std::string boundary_note;
    for (unsigned k = 1; k <= N; ++k) {
        ParamPoly lhs = op_y.apply(table.z[k - 1]);
        ParamPoly xk = ParamPoly::variable(op_on_x.symbols(), k - 1);
        ParamPoly rhs = op_on_x.apply(xk).substituted(z_images);
        if (lhs == rhs) continue;
        if (k == N) {
            boundary_note = "boundary coordinate Z_" + std::to_string(N) +
                            " differs (truncation artifact, not asserted)";
            continue;
        }
        return {false, "invariance fails on Z_" + std::to_string(k) + ": coproduct-then-op " +
                           lhs.to_string() + " vs op-then-coproduct " + rhs.to_string()};
    }
    return {true, boundary_note};
}

}  // namespace

WittCheck check_invariance(unsigned i, unsigned N) {
    if (i < 1 || i > N) throw std::out_of_range("check_invariance: need 1 <= i <= N");
    return invariance_check_impl(psi_univ(i, N), N);
}

WittCheck check_invariance_of(const WittOp& op, unsigned N) {
    return invariance_check_impl(op, N);
}

VerificationReport witt_report(unsigned N) {
    VerificationReport rep;
    rep.subject = "universal Witt operators, truncation N = " + std::to_string(N);
    rep.curve = "(none)";
    rep.conventions = standard_conventions();

    WittCheck comm = check_commuting(N);
    rep.add("pairwise_commutation", comm.ok, comm.witness,
            comm.ok ? "all [psi(i), psi(j)] vanish on interior indices" : "");
    for (unsigned i = 1; i <= N; ++i) {
        WittCheck inv = check_invariance(i, N);
        rep.add("left_invariance_psi" + std::to_string(i), inv.ok, inv.ok ? "" : inv.witness,
                inv.ok ? (inv.witness.empty() ? "invariant through the coproduct" : inv.witness)
                       : "");
    }
    return rep;
}

}  // namespace ellop
