#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ellop/cartier.hpp"
#include "ellop/curve_file.hpp"
#include "ellop/divided_op.hpp"
#include "ellop/heisenberg.hpp"
#include "ellop/local_op.hpp"
#include "ellop/psi.hpp"
#include "ellop/report.hpp"
#include "ellop/witt.hpp"

namespace {

struct OutputOptions {
    std::string format = "text";
    std::string out;
    bool timings = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--format", opt.format, "stdout format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out, "basename for report files (.json and .txt are written)");
    cmd->add_flag("--timings", opt.timings, "include timings in the JSON report");
}

int emit(const std::vector<ellop::VerificationReport>& reports, const OutputOptions& opt,
         double seconds) {
    std::map<std::string, double> times{{"total_seconds", seconds}};
    std::string text = ellop::render_text(reports);
    std::string json = ellop::render_json(reports, opt.timings, times);
    if (opt.format == "json")
        std::cout << json;
    else
        std::cout << text;
    if (!opt.out.empty()) {
        std::ofstream jf(opt.out + ".json");
        jf << json;
        std::ofstream tf(opt.out + ".txt");
        tf << text;
        if (!jf || !tf) {
            std::cerr << "error: cannot write reports to " << opt.out << ".{json,txt}\n";
            return 2;
        }
    }
    for (const auto& r : reports)
        if (!r.all_ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ellop: exact divided-power differential operators on elliptic curves,\n"
        "with the Heisenberg-lattice morphism, Cartier identities and the Witt\n"
        "operator laboratory"};
    app.require_subcommand(1);

    // lambda
    long lambda_n = 0;
    auto* cmd_lambda = app.add_subcommand("lambda", "print the Lambda_n polynomial");
    cmd_lambda->add_option("n", lambda_n, "index n >= 0")->required();

    // curve-series
    std::string cs_curve = "general";
    long cs_prec = 12;
    std::string cs_isign = "minus";
    auto* cmd_series =
        app.add_subcommand("curve-series", "expansions at the origin: w, x, y, alpha, I");
    cmd_series->add_option("--curve", cs_curve, "preset name or curve file");
    cmd_series->add_option("--prec", cs_prec, "series precision")->check(CLI::Range(4l, 200l));
    cmd_series->add_option("--i-sign", cs_isign, "convention override: I_n = -alpha_n or +alpha_n")
        ->check(CLI::IsMember({"minus", "plus"}));

    // verify
    std::string v_curve = "legendre";
    int v_degree = 2;
    long v_prec = 24;
    std::vector<long> v_primes{2, 3};
    bool v_no_frobenius = false;
    OutputOptions v_out;
    auto* cmd_verify = app.add_subcommand(
        "verify", "batch integrality / globality / frobenius verification of lattice images");
    cmd_verify->add_option("--curve", v_curve, "preset name or curve file");
    cmd_verify->add_option("--degree", v_degree, "Lambda index bound")->check(CLI::Range(0, 6));
    cmd_verify->add_option("--prec", v_prec, "local precision N")->check(CLI::Range(4l, 200l));
    cmd_verify->add_option("--primes", v_primes, "primes for the frobenius checks")
        ->delimiter(',')
        ->check(CLI::Range(2l, 13l));
    cmd_verify->add_flag("--no-frobenius", v_no_frobenius,
                         "run integrality and globality only (empty prime list)");
    add_output_flags(cmd_verify, v_out);

    // cartier
    std::string c_curve = "general";
    std::vector<long> c_primes{2};
    long c_bound = 10;
    OutputOptions c_out;
    auto* cmd_cartier = app.add_subcommand(
        "cartier", "check the Cartier numerator against its operator candidate");
    cmd_cartier->add_option("--curve", c_curve, "preset name or curve file");
    cmd_cartier->add_option("--primes", c_primes, "primes (2 on any curve; 3 needs legendre)")
        ->delimiter(',');
    cmd_cartier->add_option("--degree", c_bound, "basis degree bound")->check(CLI::Range(1l, 40l));
    add_output_flags(cmd_cartier, c_out);

    // frobenius
    std::string f_curve = "legendre";
    long f_prime = 2;
    long f_n = 3;
    long f_r = 1;
    long f_prec = 24;
    OutputOptions f_out;
    auto* cmd_frob =
        app.add_subcommand("frobenius", "frobenius compatibility for one lattice generator");
    cmd_frob->add_option("--curve", f_curve, "preset name or curve file");
    cmd_frob->add_option("--prime", f_prime, "prime p")->check(CLI::Range(2l, 13l));
    cmd_frob->add_option("--lambda-n", f_n, "Lambda index n")->check(CLI::Range(0l, 12l));
    cmd_frob->add_option("--r", f_r, "substitution multiplier r >= 1")->check(CLI::Range(1l, 6l));
    cmd_frob->add_option("--prec", f_prec, "local precision N")->check(CLI::Range(4l, 200l));
    add_output_flags(cmd_frob, f_out);

    // witt
    unsigned w_n = 6;
    OutputOptions w_out;
    auto* cmd_witt =
        app.add_subcommand("witt", "commutation and invariance of the Witt operators");
    cmd_witt->add_option("--n", w_n, "truncation level N")->check(CLI::Range(2u, 12u));
    add_output_flags(cmd_witt, w_out);

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        };

        if (cmd_lambda->parsed()) {
            if (lambda_n < 0) {
                std::cerr << "error: n must be >= 0\n";
                return 2;
            }
            std::cout << ellop::lambda_poly(static_cast<unsigned>(lambda_n)).to_string() << "\n";
            return 0;
        }

        if (cmd_series->parsed()) {
            ellop::WeierstrassCurve curve = ellop::resolve_curve(cs_curve);
            auto w = ellop::chart_series_w(curve, cs_prec);
            auto [x, y] = ellop::local_xy(curve, cs_prec);
            auto alpha = ellop::invariant_differential(curve, cs_prec);
            auto icoef = ellop::i_coefficients(curve, cs_prec);
            std::cout << "curve: " << curve.to_string() << "\n";
            std::cout << "w(z) = " << w.to_string() << "\n";
            std::cout << "x(z) = " << x.to_string() << "\n";
            std::cout << "y(z) = " << y.to_string() << "\n";
            for (std::size_t i = 0; i < alpha.size(); ++i)
                std::cout << "alpha_" << i + 1 << " = " << alpha[i].to_string() << "\n";
            for (std::size_t i = 0; i < icoef.size(); ++i) {
                ellop::ParamPoly v = cs_isign == "plus" ? -icoef[i] : icoef[i];
                std::cout << "I_" << i + 1 << " = " << v.to_string() << "\n";
            }
            std::cout << "convention: I_n = " << (cs_isign == "plus" ? "+" : "-")
                      << "alpha_n; omega = dx/(2y + a1 x + a3)\n";
            if (curve.a1.is_zero() && curve.a3.is_zero())
                std::cout << "note: a1 = a3 = 0 forces alpha_n = 0 for all even n; the "
                             "nonzero coefficients sit at even powers of z\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            ellop::WeierstrassCurve curve = ellop::resolve_curve(v_curve);
            if (v_no_frobenius) v_primes.clear();
            auto reports = ellop::batch_verify(curve, v_degree, v_primes, v_prec);
            return emit(reports, v_out, elapsed());
        }

        if (cmd_cartier->parsed()) {
            ellop::WeierstrassCurve curve = ellop::resolve_curve(c_curve);
            std::vector<ellop::VerificationReport> reports;
            for (long p : c_primes) {
                if (p == 2) {
                    ellop::DividedOp cand = ellop::tangent_derivation(curve) +
                                            ellop::DividedOp::identity(curve).scaled(curve.a1);
                    reports.push_back(ellop::operator_identity_check(curve, 2, cand, c_bound));
                } else if (p == 3) {
                    if (!(curve == ellop::WeierstrassCurve::legendre())) {
                        std::cerr << "error: the p = 3 candidate operator is stated for the "
                                     "legendre family only\n";
                        return 2;
                    }
                    ellop::DividedOp P = ellop::tangent_derivation(curve);
                    ellop::ParamPoly lam = ellop::ParamPoly::variable(curve.syms, 0);
                    ellop::ParamPoly one = ellop::ParamPoly::constant(curve.syms, 1);
                    ellop::DividedOp cand =
                        P.compose(P).scaled(ellop::Rat(1, 2)) +
                        ellop::DividedOp::identity(curve).scaled((one + lam).scaled(ellop::Rat(2)));
                    reports.push_back(ellop::operator_identity_check(curve, 3, cand, c_bound));
                    // The two stated constants: +2(1+lambda) here, 2(-1-lambda) on the
                    // lattice side; their mod-3 relation is reported, not reconciled.
                    reports.back().conventions["constant_note"] =
                        "candidate constant 2(1+lambda); psi-side correction 2(-1-lambda) = "
                        "-2(1+lambda); mod 3 these differ by the factor -1 = 2";
                } else {
                    std::cerr << "error: no stated candidate operator for p = " << p << "\n";
                    return 2;
                }
            }
            return emit(reports, c_out, elapsed());
        }

        if (cmd_frob->parsed()) {
            ellop::WeierstrassCurve curve = ellop::resolve_curve(f_curve);
            ellop::FockElement gen = ellop::lambda_generator(static_cast<unsigned>(f_n),
                                                             static_cast<unsigned>(f_r));
            std::vector<ellop::VerificationReport> reports{
                ellop::verify_frobenius(gen, curve, f_prime, f_prec)};
            return emit(reports, f_out, elapsed());
        }

        if (cmd_witt->parsed()) {
            std::vector<ellop::VerificationReport> reports{ellop::witt_report(w_n)};
            return emit(reports, w_out, elapsed());
        }
    } catch (const ellop::CurveFileError& err) {
        std::cerr << "curve file error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
