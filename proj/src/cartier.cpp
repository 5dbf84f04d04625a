#include "ellop/cartier.hpp"

#include <sstream>
#include <vector>

namespace ellop {

CurveElement cartier_numerator(const WeierstrassCurve& curve, const CurveElement& h, long prime) {
    require_prime(prime, "cartier_numerator");
    if (!curve.is_integral())
        throw std::domain_error("cartier_numerator: curve coefficients must be integral");
    CurvePoly f = weierstrass_f(curve);
    CurvePoly u = f.pow(static_cast<unsigned>(prime - 1)) * h.poly();
    CurvePoly d = u.partial_x(static_cast<unsigned>(prime - 1))
                      .partial_y(static_cast<unsigned>(prime - 1))
                      .reduce_mod_p(prime);
    return reduce(d, curve).reduce_mod_p(prime);
}

namespace {

long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

long to_fp(const ParamPoly& c, long p, const char* what) {
    if (!c.is_constant())
        throw std::domain_error(std::string(what) +
                                ": coefficient is not an integer constant: " + c.to_string() +
                                " (specialize parameters first)");
    Rat v = c.constant_value();
    if (!is_integer(v))
        throw std::domain_error(std::string(what) + ": non-integral coefficient " + v.get_str());
    return mod_nonneg(v.get_num(), Int(p)).get_si();
}

}  // namespace

PthRootResult pth_root(const CurveElement& u, const WeierstrassCurve& curve, long prime) {
    require_prime(prime, "pth_root");
    PthRootResult result(curve.syms);
    const long p = prime;

    // Candidate basis x^i, x^i y for i <= bound; their p-th powers span the
    // image of the (F_p-linear) p-power map in the degrees that matter.
    long du = u.poly().x_degree();
    long bound = du / p + 3;

    std::vector<CurveElement> basis;
    for (long i = 0; i <= bound; ++i)
        for (bool with_y : {false, true})
            basis.push_back(CurveElement::x_power(curve.syms, static_cast<unsigned>(i), with_y));

    std::vector<CurveElement> powers;
    powers.reserve(basis.size());
    for (const auto& b : basis) {
        CurveElement acc = b;
        for (long k = 1; k < p; ++k) acc = multiply_on_curve(acc, b, curve).reduce_mod_p(p);
        powers.push_back(acc.reduce_mod_p(p));
    }

    // Row space: every monomial appearing in any power or in u.
    std::map<CurvePoly::Key, std::size_t> rows;
    auto note_rows = [&](const CurvePoly& q) {
        for (const auto& [k, c] : q.terms())
            if (!rows.count(k)) rows.emplace(k, rows.size());
    };
    for (const auto& q : powers) note_rows(q.poly());
    note_rows(u.poly());

    const std::size_t nr = rows.size(), nc = powers.size();
    std::vector<std::vector<long>> M(nr, std::vector<long>(nc, 0));
    std::vector<long> rhs(nr, 0);
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& [k, v] : powers[c].poly().terms())
            M[rows.at(k)][c] = to_fp(v, p, "pth_root");
    for (const auto& [k, v] : u.poly().terms()) rhs[rows.at(k)] = to_fp(v, p, "pth_root");

    // Gaussian elimination over F_p.
    std::vector<long> pivot_of_col(nc, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (M[i][c] % p != 0) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        std::swap(M[sel], M[r]);
        std::swap(rhs[sel], rhs[r]);
        long inv = mod_inverse(M[r][c], p);
        for (std::size_t j = 0; j < nc; ++j) M[r][j] = (M[r][j] * inv) % p;
        rhs[r] = (rhs[r] * inv) % p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            long f = ((M[i][c] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < nc; ++j) M[i][j] = (((M[i][j] - f * M[r][j]) % p) + p) % p;
            rhs[i] = (((rhs[i] - f * rhs[r]) % p) + p) % p;
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }

    // Candidate from the pivot values; verified by re-powering, so the failure
    // witness is the concrete non-p-power residual u - g^p.
    CurvePoly root(curve.syms);
    for (std::size_t c = 0; c < nc; ++c) {
        if (pivot_of_col[c] < 0) continue;
        long v = ((rhs[static_cast<std::size_t>(pivot_of_col[c])] % p) + p) % p;
        if (v == 0) continue;
        root = root + basis[c].poly().scaled(Rat(v));
    }
    CurveElement g = CurveElement::from_reduced(std::move(root));
    CurveElement gp = g;
    for (long k = 1; k < p; ++k) gp = multiply_on_curve(gp, g, curve).reduce_mod_p(p);
    CurveElement res = (u.reduce_mod_p(p) - gp.reduce_mod_p(p)).reduce_mod_p(p);
    if (res.is_zero()) {
        result.ok = true;
        result.root = std::move(g);
    } else {
        result.ok = false;
        result.obstruction = "not a p-th power mod (f, " + std::to_string(p) +
                             "); non-p-power residual: " + res.to_string();
    }
    return result;
}

PthRootResult cartier_apply(const WeierstrassCurve& curve, const CurveElement& h, long prime) {
    return pth_root(cartier_numerator(curve, h, prime), curve, prime);
}

VerificationReport operator_identity_check(const WeierstrassCurve& curve, long prime,
                                           const DividedOp& candidate, long degree_bound) {
    VerificationReport rep;
    rep.subject = "cartier numerator vs " + candidate.to_string();
    rep.curve = curve.name.empty() ? curve.to_string() : curve.name + ": " + curve.to_string();
    rep.conventions = standard_conventions();
    rep.conventions["prime"] = std::to_string(prime);

    bool ok = true;
    std::string witness;
    for (long i = 0; i <= degree_bound && ok; ++i) {
        for (bool with_y : {false, true}) {
            CurveElement h = CurveElement::x_power(curve.syms, static_cast<unsigned>(i), with_y);
            CurveElement lhs = cartier_numerator(curve, h, prime);
            CurveElement rhs(curve.syms);
            try {
                rhs = candidate.apply(h).reduce_mod_p(prime);
            } catch (const NonIntegralError& err) {
                ok = false;
                witness = "candidate applied to " + h.to_string() +
                          " has non-integral value: " + err.witness;
                break;
            }
            if (!(lhs == rhs)) {
                ok = false;
                witness = "on " + h.to_string() + ": numerator gives " + lhs.to_string() +
                          ", candidate gives " + rhs.to_string();
                break;
            }
        }
    }
    rep.add("operator_identity", ok, witness,
            ok ? "agree on x^i, x^i y for i <= " + std::to_string(degree_bound) : "");
    return rep;
}

}  // namespace ellop
