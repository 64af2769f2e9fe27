// Command-line front end. Every subcommand prints JSON (plain text for the
// partition operations) and exits with
//   0 all requested checks pass, 1 a check failed, 2 usage error, 3 ring or internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toda/toda.hpp"

using namespace toda;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int L = 5;
    std::string window = "-3,3";
    int cap = 4;
    std::string json_path;
    unsigned jobs = 1;
    int raise_bound = -1;
    bool keep_passes = false;

    std::string lambda, mu, alpha, beta;
    int i = 1, j = 1, n = 0, m = 0, k = 0, r = 1, g = 0;
    std::string family = "phi";
    std::string oracle = "exp";
    std::string defects;
    std::string X;
    std::string perp_family = "p";
    bool adjoint = false;
    bool trace = false;
    bool compute = false;
    bool verify = false;
    int u_vars = 2;
};

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    std::string s = text;
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
        s = s.substr(1, s.size() - 2);
    if (s.empty())
        return out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw UsageError("malformed integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("malformed integer list '" + text + "'");
        }
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    try {
        return Partition::parse(text);
    } catch (const PartitionError& e) {
        throw UsageError(e.what());
    }
}

std::pair<int, int> parse_window(const std::string& text)
{
    auto v = parse_ints(text);
    if (v.size() != 2 || v[0] > v[1])
        throw UsageError("window must be 'lo,hi' with lo <= hi");
    return {v[0], v[1]};
}

std::set<int> parse_set(const std::string& text)
{
    auto v = parse_ints(text);
    return std::set<int>(v.begin(), v.end());
}

int emit(const Json& out, const Options& opt, bool ok = true)
{
    std::cout << out.dump(2) << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream file(opt.json_path);
        if (!file)
            throw std::runtime_error("cannot write " + opt.json_path);
        file << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int emit_report(const ConstraintReport& report, const Options& opt)
{
    return emit(report.to_json(), opt, report.ok());
}

SweepBounds bounds_of(const Options& opt)
{
    SweepBounds b;
    b.max_size = opt.L;
    std::tie(b.level_lo, b.level_hi) = parse_window(opt.window);
    b.raise_bound = opt.raise_bound;
    b.jobs = opt.jobs;
    b.keep_passes = opt.keep_passes;
    return b;
}

DiagonalFamily<YMonomial> phi_family()
{
    return {[](int n, const Partition& lambda) { return phi_coeff(n, lambda); }, "phi"};
}

/// Runs `body` on the diagonal family named by opt.family.
template <class Body>
int with_family(const Options& opt, Body&& body)
{
    const std::string& name = opt.family;
    if (name == "phi")
        return body(phi_family());
    if (name == "phi-perturbed") {
        return body(DiagonalFamily<YMonomial>{[](int n, const Partition& lambda) {
                                                  YMonomial v = phi_coeff(n, lambda);
                                                  if (n == 0 && lambda == Partition{1})
                                                      v = v * Rational(2);
                                                  return v;
                                              },
                                              "phi-perturbed"});
    }
    if (name == "reconstructed")
        return body(Reconstruction<YMonomial>(boundary_of(phi_family())).family("reconstructed"));
    if (name == "p1q1") {
        return body(DiagonalFamily<Rational>{[](int n, const Partition& lambda) {
                                                 return Rational(n == 0 && lambda == Partition{1} ? 1 : 0);
                                             },
                                             "p1q1"});
    }
    if (name == "zero")
        return body(DiagonalFamily<Rational>{[](int, const Partition&) { return Rational(0); }, "zero"});
    if (name == "hciz")
        return body(hciz_family());
    if (name == "schur-measure")
        return body(schur_measure_family(parse_set(opt.X)));
    if (name == "hurwitz")
        return body(hurwitz_family(opt.cap));
    if (name == "constellations")
        return body(constellation_family(opt.u_vars, opt.cap));
    throw UsageError("unknown family '" + name + "'");
}

CoeffOracle<Rational> kp_oracle(const std::string& name)
{
    if (name == "exp")
        return [](const Partition& lambda) {
            return schur_power_sum_coeff(lambda, Partition(std::vector<int>(lambda.size(), 1)));
        };
    if (name == "exp-perturbed")
        return [](const Partition& lambda) {
            Rational v = schur_power_sum_coeff(lambda, Partition(std::vector<int>(lambda.size(), 1)));
            return lambda == Partition{2, 1} ? Rational(2 * v) : v;
        };
    if (name.rfind("schur:", 0) == 0) {
        const Partition nu = parse_partition(name.substr(6));
        return [nu](const Partition& lambda) { return Rational(lambda == nu ? 1 : 0); };
    }
    if (name == "zero")
        return [](const Partition&) { return Rational(0); };
    throw UsageError("unknown KP oracle '" + name + "'");
}

int run_bernstein(const Options& opt)
{
    const Partition lambda = parse_partition(opt.lambda);
    const int cap = std::max(opt.cap, lambda.size());
    const SpacePtr space = power_sum_space(cap);
    const PSeries f = schur_poly(lambda, space);
    const auto series = opt.adjoint ? bernstein_adjoint_direct(f) : bernstein_direct(f);
    Json coeffs = Json::array();
    for (const auto& [e, poly] : series.coefficients())
        coeffs.push_back(Json{{"t", e}, {"schur", schur_table_json(to_schur_basis(poly))}});
    return emit(Json{{"input", to_json(lambda)},
                     {"operator", opt.adjoint ? "adjoint" : "direct"},
                     {"cap", cap},
                     {"window", series.window()},
                     {"coefficients", coeffs}},
                opt);
}

int run_check_toda_eq(const Options& opt)
{
    return with_family(opt, [&](const auto& g) {
        const auto residual = toda_equation_check(g.as_family(), opt.m, opt.cap);
        return emit(Json{{"identity", "toda-equation"},
                         {"params", {{"family", g.description}, {"m", opt.m}, {"cap", opt.cap}}},
                         {"residual", to_json(residual)},
                         {"zero", residual.is_zero()}},
                    opt, residual.is_zero());
    });
}

int run_check_sub(const Options& opt)
{
    const Partition lambda = parse_partition(opt.lambda);
    const Partition alpha = parse_partition(opt.alpha);
    return with_family(opt, [&](const auto& g) {
        const auto residual = subhierarchy_check(g.as_family(), opt.m, opt.r, lambda, alpha, opt.cap, opt.perp_family);
        return emit(Json{{"identity", "sub-hierarchy"},
                         {"params",
                          {{"family", g.description},
                           {"m", opt.m},
                           {"r", opt.r},
                           {"lambda", to_json(lambda)},
                           {"alpha", to_json(alpha)},
                           {"cap", opt.cap}}},
                         {"residual", to_json(residual)},
                         {"zero", residual.is_zero()}},
                    opt, residual.is_zero());
    });
}

int run_reconstruct(const Options& opt)
{
    const Partition lambda = parse_partition(opt.lambda);
    Reconstruction<YMonomial> rec(boundary_of(phi_family()), opt.trace);
    const YMonomial value = rec(opt.n, lambda);
    const YMonomial closed = phi_coeff(opt.n, lambda);
    Json trace = Json::array();
    for (const auto& step : rec.trace())
        trace.push_back(Json{{"rule", step.rule}, {"relation", step.to_string()}});
    Json out{{"n", opt.n},
             {"lambda", to_json(lambda)},
             {"value", to_json(value)},
             {"closed_form", to_json(closed)},
             {"agrees", value == closed}};
    if (opt.trace)
        out["trace"] = trace;
    return emit(out, opt, value == closed);
}

int run_constellations(const Options& opt)
{
    if (opt.verify) {
        ApplicationOptions app;
        app.cap = opt.cap;
        app.u_vars = opt.u_vars;
        return emit_report(verify_application(Application::constellations, bounds_of(opt), app), opt);
    }
    const Partition alpha = parse_partition(opt.alpha);
    const Partition beta = parse_partition(opt.beta);
    const auto defects = parse_ints(opt.defects);
    const Integer count = constellation_count(alpha, beta, defects);
    const Rational series = b_series_coeff(alpha, beta, defects);
    const Rational scaled = series * factorial(alpha.size());
    return emit(Json{{"alpha", to_json(alpha)},
                     {"beta", to_json(beta)},
                     {"defects", defects},
                     {"count", count.get_str()},
                     {"series_coeff", to_json(series)},
                     {"agrees", scaled == Rational(count)}},
                opt, scaled == Rational(count));
}

int run_hurwitz(const Options& opt)
{
    if (opt.verify) {
        ApplicationOptions app;
        app.cap = opt.cap;
        return emit_report(verify_application(Application::hurwitz, bounds_of(opt), app), opt);
    }
    const Partition alpha = parse_partition(opt.alpha);
    const Partition beta = parse_partition(opt.beta);
    const int r = hurwitz_branch_points(alpha, beta, opt.g);
    const Rational series = hurwitz_number(alpha, beta, opt.g);
    const Rational oracle = hurwitz_number_oracle(alpha, beta, opt.g);
    return emit(Json{{"alpha", to_json(alpha)},
                     {"beta", to_json(beta)},
                     {"g", opt.g},
                     {"r", r},
                     {"admissible", r >= 0},
                     {"series", to_json(series)},
                     {"factorizations", to_json(oracle)},
                     {"agrees", series == oracle}},
                opt, series == oracle);
}

int run_schur_measure(const Options& opt)
{
    ApplicationOptions app;
    app.X = parse_set(opt.X);
    if (opt.verify)
        return emit_report(verify_application(Application::schur_measure, bounds_of(opt), app), opt);
    const Partition lambda = parse_partition(opt.lambda);
    return emit(Json{{"X", std::vector<int>(app.X.begin(), app.X.end())},
                     {"n", opt.n},
                     {"lambda", to_json(lambda)},
                     {"value", to_json(schur_measure_g(app.X, opt.n, lambda))}},
                opt);
}

int run_hciz(const Options& opt)
{
    if (opt.verify)
        return emit_report(verify_application(Application::hciz, bounds_of(opt)), opt);
    const Partition lambda = parse_partition(opt.lambda);
    const Rational direct = hciz_g(opt.n, lambda);
    const Rational via_phi = hciz_from_phi(opt.n, lambda);
    return emit(Json{{"n", opt.n},
                     {"lambda", to_json(lambda)},
                     {"coeff", to_json(hciz_coeff(opt.n, lambda))},
                     {"theta", to_json(hciz_theta(opt.n))},
                     {"g", to_json(direct)},
                     {"from_phi", to_json(via_phi)},
                     {"agrees", direct == via_phi}},
                opt, direct == via_phi);
}

}  // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"KP / 2-Toda coefficient checks for content-type series"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--L", opt.L, "size bound for sweeps")->check(CLI::NonNegativeNumber);
    app.add_option("--window", opt.window, "level window lo,hi")->allow_extra_args(false);
    app.add_option("--cap", opt.cap, "degree cap")->check(CLI::NonNegativeNumber);
    app.add_option("--json", opt.json_path, "also write the JSON output to this path");
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    auto add_lambda = [&](CLI::App* sub, const std::string& flag, std::string& target, bool required) {
        auto* o = sub->add_option(flag, target, "partition as comma-separated parts; \"\" is empty");
        if (required)
            o->required();
    };

    auto* raise_cmd = app.add_subcommand("raise", "lambda raised at i");
    add_lambda(raise_cmd, "--lambda", opt.lambda, true);
    raise_cmd->add_option("--i", opt.i)->required()->check(CLI::PositiveNumber);

    auto* lower_cmd = app.add_subcommand("lower", "lambda lowered at j");
    add_lambda(lower_cmd, "--lambda", opt.lambda, true);
    lower_cmd->add_option("--j", opt.j)->required()->check(CLI::PositiveNumber);

    auto* conj_cmd = app.add_subcommand("conjugate", "transpose of lambda");
    add_lambda(conj_cmd, "--lambda", opt.lambda, true);

    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomials");
    schur_cmd->require_subcommand(1);
    auto* expand_cmd = schur_cmd->add_subcommand("expand", "s_lambda in power sums");
    add_lambda(expand_cmd, "--lambda", opt.lambda, true);

    auto* bern_cmd = app.add_subcommand("bernstein", "Bernstein operator applied to s_lambda");
    add_lambda(bern_cmd, "--lambda", opt.lambda, true);
    bern_cmd->add_flag("--adjoint", opt.adjoint);

    auto* check_cmd = app.add_subcommand("check", "hierarchy constraint checks");
    check_cmd->require_subcommand(1);
    auto* kp_cmd = check_cmd->add_subcommand("kp", "KP constraints of a single Schur expansion");
    kp_cmd->add_option("--oracle", opt.oracle, "exp | exp-perturbed | zero | schur:<parts>");
    auto* toda_cmd = check_cmd->add_subcommand("toda", "general 2-Toda constraints");
    auto* diag_cmd = check_cmd->add_subcommand("diagonal", "diagonal 2-Toda criterion");
    diag_cmd->add_option("--raise-bound", opt.raise_bound);
    diag_cmd->add_flag("--keep-passes", opt.keep_passes);
    auto* eq_cmd = check_cmd->add_subcommand("toda-eq", "2-Toda equation residual");
    eq_cmd->add_option("--m", opt.m);
    auto* sub_cmd = check_cmd->add_subcommand("sub", "sub-hierarchy residual");
    sub_cmd->add_option("--m", opt.m);
    sub_cmd->add_option("--r", opt.r)->check(CLI::PositiveNumber);
    add_lambda(sub_cmd, "--lambda", opt.lambda, false);
    add_lambda(sub_cmd, "--alpha", opt.alpha, false);
    sub_cmd->add_option("--perp", opt.perp_family, "p or q")->check(CLI::IsMember({"p", "q"}));
    for (auto* c : {toda_cmd, diag_cmd, eq_cmd, sub_cmd}) {
        c->add_option("--family", opt.family,
                      "phi | phi-perturbed | reconstructed | p1q1 | zero | hciz | schur-measure | hurwitz | "
                      "constellations");
        c->add_option("--X", opt.X, "Schur measure set, comma-separated");
    }

    auto* phi_cmd = app.add_subcommand("phi", "coefficient g_lambda(n) of Phi_n");
    phi_cmd->add_option("--n", opt.n)->required();
    add_lambda(phi_cmd, "--lambda", opt.lambda, true);

    auto* rec_cmd = app.add_subcommand("reconstruct", "rebuild g_lambda(n) from the boundary data of Phi");
    rec_cmd->add_option("--n", opt.n)->required();
    add_lambda(rec_cmd, "--lambda", opt.lambda, true);
    rec_cmd->add_flag("--trace", opt.trace);

    auto* con_cmd = app.add_subcommand("constellations", "constellation counts against the B series");
    auto* hur_cmd = app.add_subcommand("hurwitz", "double Hurwitz numbers");
    auto* sm_cmd = app.add_subcommand("schur-measure", "Schur measure correlator coefficients");
    auto* hciz_cmd = app.add_subcommand("hciz", "HCIZ character expansion");
    for (auto* c : {con_cmd, hur_cmd, sm_cmd, hciz_cmd}) {
        auto* compute = c->add_flag("--compute", opt.compute, "print values (default)");
        auto* verify = c->add_flag("--verify", opt.verify, "run the diagonal sweep");
        compute->excludes(verify);
    }
    for (auto* c : {con_cmd, hur_cmd}) {
        add_lambda(c, "--alpha", opt.alpha, false);
        add_lambda(c, "--beta", opt.beta, false);
    }
    con_cmd->add_option("--defects", opt.defects, "comma-separated defects");
    con_cmd->add_option("--u-vars", opt.u_vars, "u variables for --verify")->check(CLI::NonNegativeNumber);
    hur_cmd->add_option("--g", opt.g)->check(CLI::NonNegativeNumber);
    sm_cmd->add_option("--X", opt.X, "comma-separated integers");
    sm_cmd->add_option("--n", opt.n);
    add_lambda(sm_cmd, "--lambda", opt.lambda, false);
    hciz_cmd->add_option("--n", opt.n);
    add_lambda(hciz_cmd, "--lambda", opt.lambda, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*raise_cmd) {
            std::cout << raise(parse_partition(opt.lambda), opt.i).to_string() << "\n";
            return 0;
        }
        if (*lower_cmd) {
            std::cout << lower(parse_partition(opt.lambda), opt.j).to_string() << "\n";
            return 0;
        }
        if (*conj_cmd) {
            std::cout << conjugate(parse_partition(opt.lambda)).to_string() << "\n";
            return 0;
        }
        if (*expand_cmd) {
            const Partition lambda = parse_partition(opt.lambda);
            const SpacePtr space = power_sum_space(std::max(opt.cap, lambda.size()));
            return emit(Json{{"lambda", to_json(lambda)}, {"series", to_json(schur_poly(lambda, space))}}, opt);
        }
        if (*bern_cmd)
            return run_bernstein(opt);
        if (*kp_cmd) {
            auto report = kp_sweep(kp_oracle(opt.oracle), opt.L, opt.jobs);
            report.params["oracle"] = opt.oracle;
            return emit_report(report, opt);
        }
        if (*toda_cmd) {
            const auto [lo, hi] = parse_window(opt.window);
            return with_family(opt, [&](const auto& g) {
                return emit_report(toda_sweep(g.as_family(), opt.L, lo, hi, opt.jobs), opt);
            });
        }
        if (*diag_cmd)
            return with_family(opt, [&](const auto& g) { return emit_report(diagonal_sweep(g, bounds_of(opt)), opt); });
        if (*eq_cmd)
            return run_check_toda_eq(opt);
        if (*sub_cmd)
            return run_check_sub(opt);
        if (*phi_cmd)
            return emit(to_json(phi_coeff(opt.n, parse_partition(opt.lambda))), opt);
        if (*rec_cmd)
            return run_reconstruct(opt);
        if (*con_cmd)
            return run_constellations(opt);
        if (*hur_cmd)
            return run_hurwitz(opt);
        if (*sm_cmd)
            return run_schur_measure(opt);
        if (*hciz_cmd)
            return run_hciz(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
