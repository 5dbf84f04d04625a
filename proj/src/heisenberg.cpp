#include "ellop/heisenberg.hpp"

#include <algorithm>
#include <sstream>

namespace ellop {

BosonMonomial BosonMonomial::single(long m) {
    if (m < 1) throw std::invalid_argument("BosonMonomial: mode index must be >= 1");
    return {{m}};
}

BosonMonomial BosonMonomial::of(std::vector<long> ms) {
    for (long m : ms)
        if (m < 1) throw std::invalid_argument("BosonMonomial: mode index must be >= 1");
    std::sort(ms.begin(), ms.end());
    return {std::move(ms)};
}

long BosonMonomial::degree() const {
    long d = 0;
    for (long m : modes) d += m;
    return d;
}

std::string BosonMonomial::to_string() const {
    if (modes.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < modes.size();) {
        std::size_t j = i;
        while (j < modes.size() && modes[j] == modes[i]) ++j;
        if (i > 0) os << "*";
        os << "b(-" << modes[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

FockElement FockElement::vacuum(const Rat& c) { return monomial(BosonMonomial::vacuum(), c); }

FockElement FockElement::monomial(const BosonMonomial& m, const Rat& c) {
    FockElement e;
    e.add_term(m, c);
    return e;
}

long FockElement::degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

long FockElement::max_mode() const {
    long d = 0;
    for (const auto& [m, c] : terms_)
        if (!m.modes.empty()) d = std::max(d, m.modes.back());
    return d;
}

void FockElement::add_term(const BosonMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockElement FockElement::operator+(const FockElement& o) const {
    FockElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

FockElement FockElement::operator-() const {
    FockElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

FockElement FockElement::operator-(const FockElement& o) const { return *this + (-o); }

FockElement FockElement::operator*(const FockElement& o) const {
    FockElement r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<long> modes = ma.modes;
            modes.insert(modes.end(), mb.modes.begin(), mb.modes.end());
            std::sort(modes.begin(), modes.end());
            r.add_term({std::move(modes)}, ca * cb);
        }
    }
    return r;
}

FockElement FockElement::scaled(const Rat& c) const {
    FockElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

bool FockElement::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string FockElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = m.modes.empty() ? "" : m.to_string();
        out += format_term(c, mono, leading);
        leading = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lambda polynomials

SymbolsPtr lambda_alphabet(std::size_t k) {
    SymbolList names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
    return make_symbols(std::move(names));
}

ParamPoly lambda_poly(unsigned n, const SymbolsPtr& alphabet) {
    if (alphabet->size() < n + 1)
        throw std::invalid_argument("lambda_poly: alphabet too small for Lambda_" +
                                    std::to_string(n));
    // (m+1) Lambda_m = sum_{j=1..m+1} X_j Lambda_{m-j}, Lambda_{-1} = 1.
    std::vector<ParamPoly> lam;  // lam[k] = Lambda_{k-1}, so lam[0] = 1
    lam.push_back(ParamPoly::constant(alphabet, 1));
    for (unsigned m = 0; m <= n; ++m) {
        ParamPoly s(alphabet);
        for (unsigned j = 1; j <= m + 1; ++j)
            s += ParamPoly::variable(alphabet, j - 1) * lam[m + 1 - j];
        lam.push_back(s.scaled(Rat(1, m + 1)));
    }
    return lam.back();
}

ParamPoly lambda_poly(unsigned n) { return lambda_poly(n, lambda_alphabet(n + 1)); }

FockElement psi_substitute(const ParamPoly& lp, long r) {
    if (r == 0) throw std::invalid_argument("psi_substitute: r must be nonzero");
    if (r > 0)
        throw std::invalid_argument(
            "psi_substitute: positive modes act on the Fock space, they are not states; "
            "use r < 0");
    long mult = -r;
    FockElement out;
    for (const auto& [mono, c] : lp.terms()) {
        std::vector<long> modes;
        for (std::size_t i = 0; i < mono.exp.size(); ++i)
            for (unsigned e = 0; e < mono.exp[i]; ++e)
                modes.push_back(mult * static_cast<long>(i + 1));
        out.add_term(BosonMonomial::of(std::move(modes)), c);
    }
    return out;
}

FockElement lambda_generator(unsigned n, unsigned r) {
    if (r < 1) throw std::invalid_argument("lambda_generator: r must be >= 1");
    return psi_substitute(lambda_poly(n), -static_cast<long>(r));
}

// ---------------------------------------------------------------------------
// Lambda basis

bool LambdaMonomial::operator<(const LambdaMonomial& o) const {
    long da = 0, db = 0;
    for (unsigned n : ns) da += n + 1;
    for (unsigned n : o.ns) db += n + 1;
    if (da != db) return da < db;
    return ns < o.ns;
}

std::string LambdaMonomial::to_string() const {
    if (ns.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < ns.size();) {
        std::size_t j = i;
        while (j < ns.size() && ns[j] == ns[i]) ++j;
        if (i > 0) os << "*";
        os << "Lambda[" << ns[i] << "]";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

namespace {

// Partitions of d, each part list ascending.
void partitions_rec(long d, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(d, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(d - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long d) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(d, d, cur, out);
    for (auto& p : out) std::sort(p.begin(), p.end());
    return out;
}

const FockElement& cached_generator(unsigned n) {
    static std::vector<FockElement> cache;
    while (cache.size() <= n) cache.push_back(lambda_generator(static_cast<unsigned>(cache.size()), 1));
    return cache[n];
}

// Expansion of the generator monomial with parts mu (Lambda indices mu_i - 1).
FockElement generator_monomial(const std::vector<long>& mu) {
    FockElement acc = FockElement::vacuum();
    for (long part : mu) acc = acc * cached_generator(static_cast<unsigned>(part - 1));
    return acc;
}

}  // namespace

LambdaExpansion to_lambda_basis(const FockElement& e) {
    LambdaExpansion out;
    // Degree-0 part: coordinate on the empty monomial.
    auto vac = e.terms().find(BosonMonomial::vacuum());
    if (vac != e.terms().end() && vac->second != 0) out.coords[LambdaMonomial{}] = vac->second;

    std::map<long, FockElement> graded;
    for (const auto& [m, c] : e.terms())
        if (!m.modes.empty()) graded[m.degree()].add_term(m, c);

    for (const auto& [d, comp] : graded) {
        auto parts = partitions(d);
        const std::size_t n = parts.size();
        // Columns: generator monomials; rows: boson monomials of degree d.
        std::map<BosonMonomial, std::size_t, BosonLess> row_index;
        for (const auto& mu : parts) {
            std::size_t idx = row_index.size();
            row_index.emplace(BosonMonomial::of(std::vector<long>(mu)), idx);
        }
        std::vector<std::vector<Rat>> M(row_index.size(), std::vector<Rat>(n, Rat(0)));
        for (std::size_t col = 0; col < n; ++col) {
            FockElement g = generator_monomial(parts[col]);
            for (const auto& [m, c] : g.terms()) {
                auto it = row_index.find(m);
                if (it == row_index.end())
                    throw std::logic_error("to_lambda_basis: generator escapes its degree block");
                M[it->second][col] = c;
            }
        }
        std::vector<Rat> rhs(row_index.size(), Rat(0));
        for (const auto& [m, c] : comp.terms()) rhs[row_index.at(m)] = c;

        // Exact Gaussian elimination.
        const std::size_t rows = M.size();
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < rows; ++c) {
            std::size_t sel = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (M[i][c] != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows) continue;
            std::swap(M[sel], M[r]);
            std::swap(rhs[sel], rhs[r]);
            Rat inv = Rat(1) / M[r][c];
            for (std::size_t j = c; j < n; ++j) M[r][j] *= inv;
            rhs[r] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || M[i][c] == 0) continue;
                Rat f = M[i][c];
                for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
                rhs[i] -= f * rhs[r];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows; ++i)
            if (rhs[i] != 0)
                throw std::domain_error("to_lambda_basis: element outside the lattice span "
                                        "in degree " + std::to_string(d));
        std::vector<Rat> x(n, Rat(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
        for (std::size_t col = 0; col < n; ++col) {
            if (x[col] == 0) continue;
            LambdaMonomial lm;
            for (long part : parts[col]) lm.ns.push_back(static_cast<unsigned>(part - 1));
            std::sort(lm.ns.begin(), lm.ns.end());
            out.coords[lm] = x[col];
        }
    }

    for (const auto& [lm, c] : out.coords) {
        if (!is_integer(c)) {
            out.integral = false;
            out.witness = format_term(c, lm.to_string(), true);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Module actions

FockElement mode_action(long n, const FockElement& e) {
    if (n == 0) return FockElement::zero();
    FockElement out;
    if (n < 0) {
        long m = -n;
        for (const auto& [mono, c] : e.terms()) {
            std::vector<long> modes = mono.modes;
            modes.push_back(m);
            std::sort(modes.begin(), modes.end());
            out.add_term({std::move(modes)}, c);
        }
        return out;
    }
    // Raising mode: n * d/d b_{-n}.
    for (const auto& [mono, c] : e.terms()) {
        long count = static_cast<long>(std::count(mono.modes.begin(), mono.modes.end(), n));
        if (count == 0) continue;
        std::vector<long> modes = mono.modes;
        modes.erase(std::find(modes.begin(), modes.end(), n));
        out.add_term({std::move(modes)}, c * Rat(n) * Rat(count));
    }
    return out;
}

FockElement l_action(long m, const FockElement& e) {
    if (m < -1)
        throw std::invalid_argument("l_action: only m >= -1 preserves the integral form");
    FockElement out;
    for (const auto& [mono, c] : e.terms()) {
        // L_m replaces one b_{-j} factor by j b_{-(j-m)}, for each j > max(0, m).
        std::vector<long> distinct = mono.modes;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (long j : distinct) {
            if (j <= m) continue;  // needs j > m so the new mode j - m is >= 1; n = m - j < 0
            long count = static_cast<long>(std::count(mono.modes.begin(), mono.modes.end(), j));
            std::vector<long> modes = mono.modes;
            modes.erase(std::find(modes.begin(), modes.end(), j));
            if (j - m >= 1) modes.push_back(j - m);
            std::sort(modes.begin(), modes.end());
            out.add_term({std::move(modes)}, c * Rat(j) * Rat(count));
        }
    }
    return out;
}

Rat cocycle(const std::map<long, Rat>& f, const std::map<long, Rat>& g) {
    // -Res f dg = -sum_m m f_{-m} g_m
    Rat acc(0);
    for (const auto& [m, gm] : g) {
        auto it = f.find(-m);
        if (it == f.end()) continue;
        acc -= Rat(m) * it->second * gm;
    }
    return acc;
}

FockElement frobenius_pi(const FockElement& e, long prime) {
    require_prime(prime, "frobenius_pi");
    LambdaExpansion exp = to_lambda_basis(e);
    if (!exp.integral)
        throw NonIntegralError("frobenius_pi: element is not integral in the Lambda basis",
                               exp.witness);
    FockElement out;
    for (const auto& [lm, c] : exp.coords) {
        Rat cred = rat_mod_p(c, prime);
        if (cred == 0) continue;
        bool killed = false;
        std::vector<unsigned> image;
        for (unsigned n : lm.ns) {
            if ((n + 1) % prime != 0) {
                killed = true;
                break;
            }
            image.push_back((n + 1) / static_cast<unsigned>(prime) - 1);
        }
        if (killed) continue;
        FockElement mono = FockElement::vacuum(cred);
        for (unsigned n : image) mono = mono * lambda_generator(n, 1);
        out = out + mono;
    }
    return out;
}

}  // namespace ellop
