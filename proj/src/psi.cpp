#include "ellop/psi.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ellop {

std::map<std::string, std::string> standard_conventions() {
    return {
        {"tangent_field", "P = f_y dx - f_x dy"},
        {"lambda_indexing", "Lambda_n = [t^(n+1)] exp(sum X_j t^j / j)"},
        {"i_map_sign", "I_n = -alpha_n"},
        {"frobenius_drop_rule",
         "descent keeps p | j and p | l and p | parameter exponents; other terms dropped and "
         "counted"},
        {"psi_univ_rule", "b_{-i} -> d_i + sum_m X_m d_{m+i} (invariant form)"},
    };
}

std::vector<std::pair<ParamPoly, int>> psi_p_polynomial(const FockElement& e,
                                                        const WeierstrassCurve& curve, long N) {
    long need = e.max_mode();
    if (need > N)
        throw std::out_of_range("psi_p_polynomial: mode b(-" + std::to_string(need) +
                                ") exceeds series precision " + std::to_string(N));
    std::vector<ParamPoly> alpha = invariant_differential(curve, std::max<long>(N, 4));
    std::map<int, ParamPoly> by_degree;
    for (const auto& [mono, c] : e.terms()) {
        ParamPoly coeff = ParamPoly::constant(curve.syms, c);
        for (long m : mono.modes) coeff *= alpha[static_cast<std::size_t>(m - 1)];
        if (coeff.is_zero()) continue;
        int deg = static_cast<int>(mono.modes.size());
        auto it = by_degree.find(deg);
        if (it == by_degree.end())
            by_degree.emplace(deg, coeff);
        else
            it->second += coeff;
    }
    std::vector<std::pair<ParamPoly, int>> out;
    for (auto& [deg, coeff] : by_degree)
        if (!coeff.is_zero()) out.emplace_back(coeff, deg);
    return out;
}

DividedOp psi_image(const FockElement& e, const WeierstrassCurve& curve, long N) {
    auto poly = psi_p_polynomial(e, curve, N);
    DividedOp p = tangent_derivation(curve);
    DividedOp acc = DividedOp::zero(curve);
    std::map<int, DividedOp> powers;
    powers.emplace(0, DividedOp::identity(curve));
    auto power = [&](int k) -> const DividedOp& {
        int have = powers.rbegin()->first;
        while (have < k) {
            DividedOp next = powers.at(have).compose(p);
            ++have;
            powers.emplace(have, std::move(next));
        }
        return powers.at(k);
    };
    for (const auto& [c, k] : poly) acc = acc + power(k).scaled(c);
    return acc;
}

namespace {

long psi_precision(const FockElement& e) { return std::max<long>(e.max_mode() + 2, 6); }

std::string describe_curve(const WeierstrassCurve& curve) {
    return curve.name.empty() ? curve.to_string() : curve.name + ": " + curve.to_string();
}

}  // namespace

VerificationReport verify_integral(const FockElement& e, const WeierstrassCurve& curve) {
    VerificationReport rep;
    rep.subject = e.to_string();
    rep.curve = describe_curve(curve);
    rep.conventions = standard_conventions();

    DividedOp image = psi_image(e, curve, psi_precision(e));
    IntegralityResult coeff = image.is_integral();
    rep.add("coefficient_integrality", coeff.ok, coeff.witness,
            coeff.ok ? image.to_string() : "");

    // Action-integrality cross-check: the image must send every basis
    // monomial up to order + 2 to an integral residue.
    bool action_ok = true;
    std::string action_witness;
    long bound = image.order() + 2;
    for (long i = 0; i <= bound && action_ok; ++i) {
        for (bool with_y : {false, true}) {
            CurveElement m = CurveElement::x_power(curve.syms, static_cast<unsigned>(i), with_y);
            CurveElement v = image.apply(m);
            if (!v.is_integral()) {
                action_ok = false;
                action_witness = "on " + m.to_string() + ": " + v.integrality_witness();
                break;
            }
        }
    }
    rep.add("action_integrality", action_ok, action_witness,
            action_ok ? "integral values on x^i, x^i y for i <= " + std::to_string(bound) : "");
    return rep;
}

VerificationReport verify_global(const FockElement& e, const WeierstrassCurve& curve, long N) {
    VerificationReport rep;
    rep.subject = e.to_string();
    rep.curve = describe_curve(curve);
    rep.conventions = standard_conventions();
    if (N < 4) {
        rep.add("local_regular_integral", false,
                "precision " + std::to_string(N) + " insufficient (need N >= 4)");
        return rep;
    }
    LocalOp local = from_p_polynomial(psi_p_polynomial(e, curve, std::max(N, psi_precision(e))),
                                      curve, N);
    if (local.precision() < N) {
        rep.add("local_regular_integral", false,
                "requested precision " + std::to_string(N) + " but only " +
                    std::to_string(local.precision()) + " is available");
        return rep;
    }
    LocalOp::RegularIntegralResult res = local.regular_and_integral();
    rep.add("local_regular_integral", res.ok, res.witness, res.ok ? local.to_string() : "");
    return rep;
}

VerificationReport verify_frobenius(const FockElement& e, const WeierstrassCurve& curve,
                                    long prime, long N) {
    VerificationReport rep;
    rep.subject = e.to_string();
    rep.curve = describe_curve(curve);
    rep.conventions = standard_conventions();
    rep.conventions["prime"] = std::to_string(prime);
    require_prime(prime, "verify_frobenius");

    long limit = N / prime;
    try {
        long prec = std::max(N, psi_precision(e));
        LocalOp local = from_p_polynomial(psi_p_polynomial(e, curve, prec), curve, N);
        DescentResult descended = frobenius_descent(local.reduce_mod_p(prime), prime);

        FockElement image = frobenius_pi(e, prime);
        LocalOp other = image.is_zero()
                            ? LocalOp::zero(curve.syms, N)
                            : from_p_polynomial(psi_p_polynomial(image, curve, prec), curve, N);
        LocalOp other_red = other.reduce_mod_p(prime);

        if (descended.op.precision() < limit || other_red.precision() < limit) {
            rep.add("frobenius_compatibility", false,
                    "precision insufficient: comparison needs O(z^" + std::to_string(limit) +
                        ") but only O(z^" +
                        std::to_string(std::min(descended.op.precision(), other_red.precision())) +
                        ") is available");
            return rep;
        }
        bool ok = descended.op.agrees_with(other_red, limit);
        std::string witness;
        if (!ok) {
            long hi = std::max(descended.op.max_order(), other_red.max_order());
            for (long j = 0; j <= hi && witness.empty(); ++j)
                for (long k = 0; k < limit; ++k) {
                    if (descended.op.coeff(j).coeff(k) != other_red.coeff(j).coeff(k)) {
                        witness = "dz^[" + std::to_string(j) + "], z^" + std::to_string(k) +
                                  ": descent gives " + descended.op.coeff(j).coeff(k).to_string() +
                                  ", pi-side gives " + other_red.coeff(j).coeff(k).to_string();
                        break;
                    }
                }
        }
        std::string artifact = "compared to O(z^" + std::to_string(limit) + "); dropped " +
                               std::to_string(descended.dropped_order_or_exponent) +
                               " non-divisible order/exponent terms, " +
                               std::to_string(descended.dropped_parameter) +
                               " non-divisible parameter terms";
        rep.add("frobenius_compatibility", ok, witness, artifact);
    } catch (const NonIntegralError& err) {
        rep.add("frobenius_compatibility", false,
                std::string("non-integral input: ") + err.what() + " [" + err.witness + "]");
    }
    return rep;
}

std::vector<BatchSubject> batch_subjects(int max_degree) {
    std::vector<BatchSubject> subjects;
    // Single generators Lambda[n, r], n <= max_degree, r in {1, 2}.
    for (int n = 0; n <= max_degree; ++n) {
        for (unsigned r = 1; r <= 2; ++r) {
            std::ostringstream name;
            name << "Lambda[n=" << n << ",r=" << r << "]";
            subjects.push_back({name.str(), lambda_generator(static_cast<unsigned>(n), r)});
        }
    }
    // Monomials in the r = 1 generators with sum (n_i + 1) <= max_degree + 1,
    // at least two factors.
    std::vector<std::vector<int>> stack;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int budget, int max_part) {
        if (cur.size() >= 2) stack.push_back(cur);
        for (int part = 1; part <= std::min(budget, max_part); ++part) {
            cur.push_back(part);
            rec(budget - part, part);
            cur.pop_back();
        }
    };
    rec(max_degree + 1, max_degree + 1);
    std::sort(stack.begin(), stack.end());
    for (const auto& parts : stack) {
        FockElement prod = FockElement::vacuum();
        std::ostringstream name;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            prod = prod * lambda_generator(static_cast<unsigned>(parts[i] - 1), 1);
            if (i) name << "*";
            name << "Lambda[n=" << parts[i] - 1 << ",r=1]";
        }
        subjects.push_back({name.str(), prod});
    }
    return subjects;
}

std::vector<VerificationReport> batch_verify(const WeierstrassCurve& curve, int max_degree,
                                             const std::vector<long>& primes, long N) {
    std::vector<VerificationReport> out;
    for (const auto& subject : batch_subjects(max_degree)) {
        VerificationReport rep;
        rep.subject = subject.name;
        rep.curve = describe_curve(curve);
        rep.conventions = standard_conventions();

        VerificationReport integral = verify_integral(subject.element, curve);
        for (const auto& c : integral.checks) rep.checks.push_back(c);
        VerificationReport global = verify_global(subject.element, curve, N);
        for (const auto& c : global.checks) rep.checks.push_back(c);
        for (long p : primes) {
            VerificationReport frob = verify_frobenius(subject.element, curve, p, N);
            for (auto c : frob.checks) {
                c.name += "_p" + std::to_string(p);
                rep.checks.push_back(std::move(c));
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace ellop
