#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "oddortho/cli.hpp"

namespace cli = oddortho::cli;

namespace {

void add_rank(CLI::App* sub, int& n, int& k) {
    sub->add_option("--n", n, "rank of SO(2n+1)")->required();
    sub->add_option("--k", k, "GL_k block of the maximal parabolic P_k")->required();
}

/// --name / --no-name pair; returns nullopt when neither is given.
std::optional<bool> polar(const CLI::Option* opt, bool value) {
    if (opt->count() == 0) return std::nullopt;
    return value;
}

int write(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return std::cout.good() ? cli::kOk : cli::kUsage;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return cli::kUsage;
    }
    f << text;
    return cli::kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostant representatives, evaluation points and Eisenstein cohomology windows for SO(2n+1)"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to FILE instead of stdout");
    bool show_version = false;
    app.add_flag("--version", show_version, "print version and exit");

    int n = 0, k = 0;
    std::string lambda;

    auto* table = app.add_subcommand("table", "all Kostant representatives with t, mu, self-duality");
    add_rank(table, n, k);
    table->add_option("--lambda", lambda, "dominant highest weight, comma separated")->required();

    auto* classify = app.add_subcommand("classify", "self-dual representatives at a given t");
    std::string t_text;
    add_rank(classify, n, k);
    classify->add_option("--lambda", lambda, "dominant highest weight, comma separated")->required();
    classify->add_option("--t", t_text, "evaluation point (rational, e.g. 1/2)")->required();

    auto* verdict = app.add_subcommand("verdict", "residual / regular verdict for a class of type (pi, w)");
    cli::VerdictArgs va;
    bool L_half = false, rs_pole = false;
    add_rank(verdict, va.n, va.k);
    verdict->add_option("--lambda", va.lambda, "dominant highest weight, comma separated")->required();
    verdict->add_option("--I", va.I, "index set I, comma separated (default empty)");
    verdict->add_option("--J", va.J, "index set J, comma separated (default empty)");
    auto* sd = verdict->add_flag("--sigma-self-dual,!--no-sigma-self-dual", va.sigma_self_dual,
                                 "sigma is self-dual");
    auto* om = verdict->add_flag("--omega-trivial,!--no-omega-trivial", va.omega_trivial,
                                 "central character of sigma is trivial");
    auto* lh = verdict->add_flag("--L-half-nonzero,!--no-L-half-nonzero", L_half, "L(1/2, sigma x tau) != 0 (k < n)");
    auto* rp = verdict->add_flag("--rs-pole-at-one,!--no-rs-pole-at-one", rs_pole,
                                 "L(s, sigma x tau) has a pole at s=1 (k < n)");
    verdict->add_flag("--lift-from-so-k,!--no-lift-from-so-k", va.lift_from_so_k, "sigma lifts from SO_k");
    verdict->add_flag("--local-kernel,!--no-local-kernel", va.local_kernel,
                      "a local component lies in the kernel of the intertwining operator");

    auto* degrees = app.add_subcommand("degrees", "degree ranges and windows for P_k");
    cli::DegreeArgs da;
    std::string deg_t;
    std::int64_t deg_lw = 0, deg_q = 0;
    add_rank(degrees, da.n, da.k);
    auto* dt = degrees->add_option("--t", deg_t, "residual window at this t (k/2, or k for even k < n)");
    auto* dl = degrees->add_option("--lw", deg_lw, "length l(w): adds the regular window");
    auto* dq = degrees->add_option("--q", deg_q, "degree q: adds q' = q + dim N - 2 l(w) (needs --lw)");

    auto* verify = app.add_subcommand("verify", "run the brute-force oracle suite");
    int n_max = 3, k_max = -1, lambda_cap = 1;
    verify->add_option("--n-max", n_max, "largest rank")->capture_default_str();
    verify->add_option("--k-max", k_max, "largest k (default n-max)");
    verify->add_option("--lambda-cap", lambda_cap, "largest entry of lambda")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kOk : cli::kUsage;
    }

    if (show_version) {
        std::cout << "oddortho " << cli::kVersion << "\n";
        return cli::kOk;
    }

    try {
        const auto fmt = oddortho::parse_format(format);
        if (*table) return write(cli::cmd_table(n, k, lambda, fmt), out_path);
        if (*classify) return write(cli::cmd_classify(n, k, lambda, t_text, fmt), out_path);
        if (*verdict) {
            if (sd->count() == 0) throw oddortho::ConstraintError("--sigma-self-dual or --no-sigma-self-dual is required");
            if (om->count() == 0) throw oddortho::ConstraintError("--omega-trivial or --no-omega-trivial is required");
            va.L_half_nonzero = polar(lh, L_half);
            va.rs_pole_at_one = polar(rp, rs_pole);
            return write(cli::cmd_verdict(va, fmt), out_path);
        }
        if (*degrees) {
            if (dt->count()) da.t = deg_t;
            if (dl->count()) da.lw = deg_lw;
            if (dq->count()) da.q = deg_q;
            return write(cli::cmd_degrees(da, fmt), out_path);
        }
        if (*verify) {
            auto result = cli::cmd_verify(n_max, k_max < 0 ? n_max : k_max, lambda_cap, fmt);
            const int rc = write(result.text, out_path);
            if (rc != cli::kOk) return rc;
            return result.pass ? cli::kOk : cli::kVerificationFailed;
        }
        std::cerr << app.help();
        return cli::kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return cli::kUsage;
}
