// lrckit: bounds, curves, constructions, verification, ensemble sampling and
// exact small-scale searches for locally recoverable codes.
//
// Exit codes: 0 success, 2 validation error, 3 budget exceeded,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/artifact_io.hpp"
#include "lrc/bounds_asymptotic.hpp"
#include "lrc/bounds_finite.hpp"
#include "lrc/constructions.hpp"
#include "lrc/oracle.hpp"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_budget = 3;
constexpr int exit_verification = 4;

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

json read_json_input(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

lrc::KOptProvider make_provider(const std::string& name, int n, int d, int q, int r) {
    using Kind = lrc::KOptProvider::Kind;
    switch (lrc::KOptProvider::parse_kind(name)) {
        case Kind::singleton:
            return lrc::KOptProvider::singleton(q);
        case Kind::plotkin:
            return lrc::KOptProvider::plotkin(q);
        case Kind::exact_table:
            return lrc::make_exact_table(q, lrc::residual_entries(n, d, r));
        case Kind::custom:
            break;
    }
    throw std::invalid_argument("provider must be one of singleton, plotkin, exact");
}

json verify_to_json(const lrc::CodeArtifact& artifact, const lrc::VerifyReport& report) {
    return json{
        {"measured",
         {{"d", report.measured_d}, {"r", report.measured_r}, {"k", report.measured_k}}},
        {"claims",
         {{"n", artifact.claims.n},
          {"k", artifact.claims.k},
          {"d", artifact.claims.d},
          {"r", artifact.claims.r},
          {"q", artifact.claims.q}}},
        {"distance_ok", report.distance_ok},
        {"locality_ok", report.locality_ok},
        {"verified", report.verified},
    };
}

int run(int argc, char** argv) {
    CLI::App app{"locally recoverable code workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after subcommand arguments

    std::string out_path;
    app.add_option("--out", out_path, "output path (default: standard output)");

    // ---- bound ----
    auto* bound_cmd = app.add_subcommand("bound", "dimension bound under a locality constraint");
    bound_cmd->fallthrough();
    int b_n = 0, b_d = 0, b_q = 2, b_r = 1;
    std::string b_provider = "singleton";
    bound_cmd->add_option("--n", b_n, "code length")->required();
    bound_cmd->add_option("--d", b_d, "minimum distance")->required();
    bound_cmd->add_option("--q", b_q, "alphabet size")->required();
    bound_cmd->add_option("--r", b_r, "locality")->required();
    bound_cmd->add_option("--provider", b_provider, "singleton | plotkin | exact");

    // ---- curve ----
    auto* curve_cmd = app.add_subcommand("curve", "rate/relative-distance curve samples as CSV");
    curve_cmd->fallthrough();
    std::vector<std::string> c_series;
    int c_r = 2, c_q = 2;
    double c_lo = 0.0, c_hi = 0.5, c_step = 0.01;
    curve_cmd->add_option("--series", c_series, "series labels")->required()->delimiter(',');
    curve_cmd->add_option("--r", c_r, "locality");
    curve_cmd->add_option("--q", c_q, "alphabet size");
    curve_cmd->add_option("--delta-min", c_lo, "grid start");
    curve_cmd->add_option("--delta-max", c_hi, "grid end");
    curve_cmd->add_option("--step", c_step, "grid step");

    // ---- construct ----
    auto* construct_cmd = app.add_subcommand("construct", "build a code artifact");
    construct_cmd->fallthrough();
    construct_cmd->require_subcommand(1);
    auto* simplex_cmd = construct_cmd->add_subcommand("simplex", "[2^m-1, m, 2^(m-1)] code");
    simplex_cmd->fallthrough();
    int s_m = 3;
    simplex_cmd->add_option("--m", s_m, "log2 of (length+1)")->required();
    auto* concat_cmd =
        construct_cmd->add_subcommand("concat", "outer MDS over GF(q^r), inner parity blocks");
    concat_cmd->fallthrough();
    int cc_q = 2, cc_r = 2, cc_ko = 2;
    concat_cmd->add_option("--q", cc_q, "alphabet size")->required();
    concat_cmd->add_option("--r", cc_r, "locality")->required();
    concat_cmd->add_option("--ko", cc_ko, "outer dimension")->required();
    auto* gv_cmd =
        construct_cmd->add_subcommand("gv-augment", "append disjoint local parities to a base code");
    gv_cmd->fallthrough();
    std::string gv_base;
    int gv_r = 2;
    gv_cmd->add_option("--base", gv_base, "base artifact JSON path or -")->required();
    gv_cmd->add_option("--r", gv_r, "locality")->required();

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "measure an artifact against its claims");
    verify_cmd->fallthrough();
    std::string v_path;
    verify_cmd->add_option("artifact", v_path, "artifact JSON path or -")->required();

    // ---- sample ----
    auto* sample_cmd = app.add_subcommand("sample", "draw from the random ensembles");
    sample_cmd->fallthrough();
    sample_cmd->require_subcommand(1);
    auto* thm2_cmd = sample_cmd->add_subcommand("thm2", "block-parity codeword ensemble");
    thm2_cmd->fallthrough();
    int t2_q = 2, t2_r = 2, t2_n = 12, t2_d = 0;
    long long t2_M = 4;
    std::uint64_t t2_seed = 0;
    int t2_trials = 100000;
    thm2_cmd->add_option("--q", t2_q)->required();
    thm2_cmd->add_option("--r", t2_r)->required();
    thm2_cmd->add_option("--n", t2_n)->required();
    thm2_cmd->add_option("--M", t2_M, "ensemble size")->required();
    thm2_cmd->add_option("--d", t2_d, "target distance (redraw until reached)")->required();
    thm2_cmd->add_option("--seed", t2_seed)->required();
    thm2_cmd->add_option("--trials", t2_trials, "redraw cap");
    auto* thm3_cmd = sample_cmd->add_subcommand("thm3", "random-outer concatenated ensemble");
    thm3_cmd->fallthrough();
    int t3_q = 2, t3_r = 2, t3_n = 12, t3_k = 4, t3_d = 0, t3_trials = 0;
    std::uint64_t t3_seed = 0;
    thm3_cmd->add_option("--q", t3_q)->required();
    thm3_cmd->add_option("--r", t3_r)->required();
    thm3_cmd->add_option("--n", t3_n)->required();
    thm3_cmd->add_option("--k", t3_k)->required();
    thm3_cmd->add_option("--d", t3_d, "distance for the certificate report")->required();
    thm3_cmd->add_option("--seed", t3_seed)->required();
    thm3_cmd->add_option("--trials", t3_trials, "Monte Carlo trials (0: skip)");

    // ---- search ----
    auto* search_cmd = app.add_subcommand("search", "exact exhaustive searches at tiny scale");
    search_cmd->fallthrough();
    search_cmd->require_subcommand(1);
    auto* kopt_cmd = search_cmd->add_subcommand("kopt", "largest dimension for (n, d, q)");
    kopt_cmd->fallthrough();
    int sk_n = 0, sk_d = 0, sk_q = 2;
    std::string sk_restriction = "unrestricted";
    kopt_cmd->add_option("--n", sk_n)->required();
    kopt_cmd->add_option("--d", sk_d)->required();
    kopt_cmd->add_option("--q", sk_q)->required();
    kopt_cmd->add_option("--restriction", sk_restriction, "unrestricted | linear");
    auto* lrc_cmd = search_cmd->add_subcommand("lrc", "largest dimension with distance and locality");
    lrc_cmd->fallthrough();
    int sl_n = 0, sl_d = 0, sl_q = 2, sl_r = 1;
    lrc_cmd->add_option("--n", sl_n)->required();
    lrc_cmd->add_option("--d", sl_d)->required();
    lrc_cmd->add_option("--q", sl_q)->required();
    lrc_cmd->add_option("--r", sl_r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints the usage message
        return code == 0 ? exit_ok : exit_validation;
    }

    if (bound_cmd->parsed()) {
        lrc::KOptProvider provider = make_provider(b_provider, b_n, b_d, b_q, b_r);
        lrc::BoundResult result = lrc::locality_dimension_bound({b_n, b_d, b_q, b_r}, provider);
        json j{{"n", b_n},        {"d", b_d},
               {"q", b_q},        {"r", b_r},
               {"provider", b_provider}, {"bound", result.k_bound},
               {"argmin_t", result.argmin_t}};
        emit(out_path, j.dump(2) + "\n");
    } else if (curve_cmd->parsed()) {
        std::vector<lrc::CurvePoint> points =
            lrc::sample_curves(c_series, c_r, c_q, lrc::make_delta_grid(c_lo, c_hi, c_step));
        std::ostringstream csv;
        lrc::write_curve_csv(csv, points);
        emit(out_path, csv.str());
    } else if (construct_cmd->parsed()) {
        lrc::CodeArtifact artifact = [&]() {
            if (simplex_cmd->parsed()) return lrc::build_simplex(s_m);
            if (concat_cmd->parsed()) return lrc::build_concat_rs_spc(cc_q, cc_r, cc_ko);
            lrc::CodeArtifact base = lrc::artifact_from_json(read_json_input(gv_base));
            const lrc::LinearCode* code = std::get_if<lrc::LinearCode>(&base.code);
            if (!code) throw std::invalid_argument("gv-augment needs a linear base artifact");
            lrc::Matrix parity =
                code->parity ? *code->parity : lrc::null_space(code->field, code->gen);
            return lrc::gv_augment(code->field, parity, gv_r);
        }();
        emit(out_path, lrc::artifact_to_json(artifact).dump(2) + "\n");
    } else if (verify_cmd->parsed()) {
        lrc::CodeArtifact artifact = lrc::artifact_from_json(read_json_input(v_path));
        lrc::VerifyReport report = lrc::verify_artifact(artifact);
        emit(out_path, verify_to_json(artifact, report).dump(2) + "\n");
        if (!report.verified) throw VerificationFailed("artifact claims not met by measurement");
    } else if (thm2_cmd->parsed()) {
        lrc::EnsembleSample sample = lrc::sample_parity_ensemble_with_distance(
            t2_q, t2_r, t2_n, t2_M, t2_d, t2_seed, t2_trials);
        lrc::Rational tail = lrc::exact_block_tail(t2_q, t2_r, t2_n / (t2_r + 1), t2_d);
        json j{{"artifact", lrc::artifact_to_json(sample.artifact)},
               {"certificate",
                {{"exact_tail_num", tail.num},
                 {"exact_tail_den", tail.den},
                 {"exact_tail", tail.value()},
                 {"lll_certified", lrc::lll_existence_check(t2_q, t2_r, t2_n, t2_M, t2_d)},
                 {"attempts", sample.attempts}}}};
        emit(out_path, j.dump(2) + "\n");
    } else if (thm3_cmd->parsed()) {
        lrc::CodeArtifact artifact = lrc::sample_concat_ensemble(t3_q, t3_r, t3_n, t3_k, t3_seed);
        lrc::DistanceCertificate cert =
            lrc::ensemble_distance_certificate(t3_q, t3_r, t3_n, (double)t3_k, t3_d);
        json j{{"artifact", lrc::artifact_to_json(artifact)},
               {"certificate",
                {{"chernoff_tail", cert.chernoff_tail},
                 {"argmin_x", cert.argmin_x},
                 {"expected_bad", cert.expected_bad},
                 {"certified", cert.certified}}}};
        if (t3_trials > 0) {
            double fraction =
                lrc::concat_ensemble_bad_fraction(t3_q, t3_r, t3_n, t3_k, t3_d, t3_seed, t3_trials);
            j["monte_carlo"] = {{"trials", t3_trials}, {"bad_fraction", fraction}};
        }
        emit(out_path, j.dump(2) + "\n");
    } else if (kopt_cmd->parsed()) {
        lrc::Restriction restriction;
        if (sk_restriction == "linear")
            restriction = lrc::Restriction::linear;
        else if (sk_restriction == "unrestricted")
            restriction = lrc::Restriction::unrestricted;
        else
            throw std::invalid_argument("restriction must be linear or unrestricted");
        lrc::KOptProvider table = lrc::make_exact_table(sk_q, {{sk_n, sk_d}}, {}, restriction);
        std::ostringstream csv;
        lrc::save_kopt_table(csv, table, restriction);
        emit(out_path, csv.str());
    } else if (lrc_cmd->parsed()) {
        int best = lrc::best_lrc_dimension(sl_n, sl_d, sl_q, sl_r);
        std::ostringstream csv;
        csv << "q,n,d,r,k\n"
            << sl_q << "," << sl_n << "," << sl_d << "," << sl_r << "," << best << "\n";
        emit(out_path, csv.str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const VerificationFailed& e) {
        std::cerr << "error: verification: " << e.what() << "\n";
        return exit_verification;
    } catch (const lrc::BudgetExceeded& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return exit_validation;
    }
}
