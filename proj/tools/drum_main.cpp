// drum: construct the connection, Dirac and Hodge operators of finite
// simplicial complexes, compute exact Green functions, and recover topology
// from spectra.
//
// Exit codes: 0 success and all verifications passed, 1 a verification
// failed (witness on stdout), 2 usage or input errors.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drum/drum.hpp"

using namespace drum;
using io::json;

namespace {

struct InputOptions {
    std::string path;
    std::string input_format;  // "", "json", "edges"
    int refine = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool required = true) {
    auto* arg = cmd->add_option("input", in.path,
                                "complex file (JSON generating sets or .edges), - for stdin");
    if (required) arg->required();
    cmd->add_option("--input-format", in.input_format, "override detection: json or edges")
        ->check(CLI::IsMember({"json", "edges"}));
    cmd->add_option("-k,--refine", in.refine, "apply N Barycentric refinements first")
        ->check(CLI::NonNegativeNumber);
}

Complex load_input(const InputOptions& in) {
    Complex K = [&] {
        if (in.path == "-") {
            std::string text((std::istreambuf_iterator<char>(std::cin)),
                             std::istreambuf_iterator<char>());
            if (in.input_format == "edges") return io::read_complex_edges(text);
            return io::read_complex_json(text);
        }
        return io::load_complex(in.path, in.input_format);
    }();
    for (int i = 0; i < in.refine; ++i) K = barycentric_refine(K);
    return K;
}

uint64_t effective_seed(uint64_t seed) {
    if (const char* env = std::getenv("SIMSPEC_SEED"))
        return std::strtoull(env, nullptr, 10);
    return seed;
}

IntegerMatrix select_matrix(const Complex& K, const std::string& kind) {
    if (kind == "L") return connection_matrix(K);
    if (kind == "g") return green_star_matrix(K);
    if (kind == "D") return dirac_and_hodge(K).dirac;
    if (kind == "H") return dirac_and_hodge(K).hodge;
    if (kind == "LmG") return hydrogen_matrix(K);
    if (kind == "M") return wu_matrix(K).M;
    if (kind == "h") return wu_matrix(K).h;
    if (kind == "Y") return y_operator(K);
    if (kind == "R") return hydrogen_conjugator(K);
    if (kind.size() >= 2 && kind[0] == 'H') {
        int k = std::stoi(kind.substr(1));
        auto dh = dirac_and_hodge(K);
        if (k < 0 || k >= static_cast<int>(dh.blocks.size()))
            throw error(errc::bad_parameter, "no Hodge block " + kind);
        return dh.blocks[k];
    }
    throw error(errc::bad_parameter, "unknown operator kind: " + kind);
}

// every check the verify verb knows, in its fixed output order
const std::vector<std::string> kAllChecks = {
    "bounds",      "chi-inertia", "energy",  "functional-eq",    "gauss-bonnet",
    "green-star",  "hydrogen",    "isospectral-demo", "support", "unimodularity"};

bool check_applies(const std::string& check, const Complex& K) {
    bool refinement = K.is_refinement() && K.dim() <= 1;
    if (check == "hydrogen" || check == "bounds" || check == "support")
        return refinement;
    if (check == "functional-eq") return K.dim() <= 1;
    if (check == "isospectral-demo") return true;
    return true;
}

VerificationReport run_check(const std::string& check, const Complex& K) {
    if (check == "hydrogen") return verify_hydrogen(K);
    if (check == "green-star") return green_star_check(K);
    if (check == "unimodularity") return unimodularity_check(K);
    if (check == "energy") return energy_check(K);
    if (check == "chi-inertia") return chi_from_inertia(K);
    if (check == "gauss-bonnet") return gauss_bonnet_check(K);
    if (check == "functional-eq") return functional_equation_check(K);
    if (check == "bounds") return spectral_bounds_check(K);
    if (check == "support") return eigenvector_support_check(K);
    if (check == "isospectral-demo") return isospectral_pair_demo();
    throw error(errc::bad_parameter, "unknown check: " + check);
}

/// Fixture set exercised by `verify` without an input file.
std::vector<std::pair<std::string, Complex>> bundled_fixtures() {
    std::vector<std::pair<std::string, Complex>> f;
    f.emplace_back("path-refined", barycentric_refine(fixtures::path_complex()));
    f.emplace_back("c6", barycentric_refine(fixtures::cycle_complex(3)));
    f.emplace_back("c8", barycentric_refine(fixtures::cycle_complex(4)));
    f.emplace_back("figure8-refined", barycentric_refine(fixtures::figure_eight()));
    f.emplace_back("triangle", Complex::generate({{1, 2, 3}}));
    f.emplace_back("k5-refined", barycentric_refine(random_graph_complex(5, 10, 1)));
    for (uint64_t s = 1; s <= 3; ++s)
        f.emplace_back("random-7-15-" + std::to_string(s), random_complex(7, 15, s));
    return f;
}

int emit_reports(std::vector<std::pair<std::string, VerificationReport>> reports,
                 const std::string& format) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.second.check != b.second.check) return a.second.check < b.second.check;
        return a.first < b.first;
    });
    bool all_passed = true;
    double total_ms = 0;
    for (const auto& [fixture, rep] : reports) {
        all_passed = all_passed && rep.passed;
        total_ms += rep.elapsed_ms;
    }
    if (format == "text") {
        for (const auto& [fixture, rep] : reports) {
            std::cout << io::report_to_text(rep);
            if (!fixture.empty()) std::cout << " (" << fixture << ")";
            std::cout << "\n";
        }
    } else {
        json out = json::array();
        for (const auto& [fixture, rep] : reports) {
            json j = io::report_to_json(rep);
            if (!fixture.empty()) j["fixture"] = fixture;
            out.push_back(std::move(j));
        }
        json top;
        top["checks"] = std::move(out);
        top["passed"] = all_passed;
        std::cout << top.dump(2) << "\n";
    }
    std::cerr << "verify: " << reports.size() << " checks in " << io::format_sig6(total_ms)
              << " ms\n";
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connection Laplacians, Green functions and spectral topology "
                 "of simplicial complexes"};
    app.require_subcommand(1);

    // ---- info ----
    InputOptions info_in;
    auto* cmd_info = app.add_subcommand("info", "f-vector, characteristics and Betti data");
    add_input_options(cmd_info, info_in);

    // ---- refine ----
    InputOptions refine_in;
    auto* cmd_refine = app.add_subcommand("refine", "emit the Barycentric refinement");
    add_input_options(cmd_refine, refine_in);

    // ---- matrix ----
    InputOptions matrix_in;
    std::string matrix_kind = "L";
    std::string matrix_format = "json";
    auto* cmd_matrix = app.add_subcommand("matrix", "emit an operator matrix");
    add_input_options(cmd_matrix, matrix_in);
    cmd_matrix->add_option("--kind", matrix_kind,
                           "L, g, D, H, H0..Hr, LmG, M, Y, h or R")->required();
    cmd_matrix->add_option("--format", matrix_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- spectrum ----
    InputOptions spectrum_in;
    std::string spectrum_operator = "L";
    std::string spectrum_format = "json";
    std::string spectrum_probes = "-1,0,1";
    double spectrum_tol = 1e-12;
    auto* cmd_spectrum = app.add_subcommand("spectrum",
                                            "numeric eigenvalues with exact counts");
    add_input_options(cmd_spectrum, spectrum_in);
    cmd_spectrum->add_option("--operator", spectrum_operator, "L, H, H0 or H1")
        ->check(CLI::IsMember({"L", "H", "H0", "H1"}));
    cmd_spectrum->add_option("--exact", spectrum_probes,
                             "comma-separated rational points probed for exact "
                             "multiplicity");
    cmd_spectrum->add_option("--tolerance", spectrum_tol, "Jacobi off-diagonal tolerance");
    cmd_spectrum->add_option("--format", spectrum_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- betti ----
    InputOptions betti_in;
    std::string betti_method = "all";
    std::string betti_format = "json";
    auto* cmd_betti = app.add_subcommand("betti", "Betti vector by the chosen route");
    add_input_options(cmd_betti, betti_in);
    cmd_betti->add_option("--method", betti_method,
                          "hodge, kirchhoff, hodge-spectrum, connection, combinatorial or all")
        ->check(CLI::IsMember({"hodge", "kirchhoff", "hodge-spectrum", "connection",
                               "combinatorial", "all"}));
    cmd_betti->add_option("--format", betti_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- verify ----
    InputOptions verify_in;
    std::string verify_check = "all";
    std::string verify_format = "json";
    auto* cmd_verify = app.add_subcommand("verify", "run identity checks");
    add_input_options(cmd_verify, verify_in, /*required=*/false);
    cmd_verify->add_option("--check", verify_check, "check name or all")
        ->check(CLI::IsMember({"hydrogen", "green-star", "unimodularity", "energy",
                               "chi-inertia", "gauss-bonnet", "functional-eq", "bounds",
                               "support", "isospectral-demo", "all"}));
    cmd_verify->add_option("--format", verify_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- random ----
    int random_n = 7, random_m = 15;
    uint64_t random_seed = 0;
    auto* cmd_random = app.add_subcommand("random", "emit a random complex");
    cmd_random->add_option("--n", random_n, "vertex count")->required();
    cmd_random->add_option("--m", random_m, "number of generating draws")->required();
    cmd_random->add_option("--seed", random_seed, "PRNG seed");

    // ---- experiment ----
    auto* cmd_experiment = app.add_subcommand("experiment", "exploratory spectral data");
    cmd_experiment->require_subcommand(1);
    int b2_trials = 50, b2_n = 7, b2_m = 15;
    uint64_t b2_seed = 0;
    auto* cmd_b2 = cmd_experiment->add_subcommand("b2", "b2 vs spectral statistics, CSV");
    cmd_b2->add_option("--trials", b2_trials, "number of random complexes")->required();
    cmd_b2->add_option("--n", b2_n, "vertex count");
    cmd_b2->add_option("--m", b2_m, "number of generating draws");
    cmd_b2->add_option("--seed", b2_seed, "PRNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_info) {
            Complex K = load_input(info_in);
            json j;
            j["simplices"] = K.size();
            j["dimension"] = K.dim();
            j["f_vector"] = K.f_vector();
            j["euler_characteristic"] = euler_characteristic(K);
            j["wu_characteristic"] = wu_characteristic(K);
            j["is_refinement"] = K.is_refinement();
            json betti;
            betti["hodge"] = betti_hodge(K).b;
            if (K.dim() <= 1) betti["combinatorial"] = betti_combinatorial(K).b;
            j["betti"] = std::move(betti);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cmd_refine) {
            InputOptions in = refine_in;
            if (in.refine == 0) in.refine = 1;  // bare `refine` refines once
            Complex K = load_input(in);
            std::cout << io::write_complex_json(K) << "\n";
            return 0;
        }

        if (*cmd_matrix) {
            Complex K = load_input(matrix_in);
            IntegerMatrix m = select_matrix(K, matrix_kind);
            std::cout << (matrix_format == "csv" ? io::write_matrix_csv(m)
                                                 : io::write_matrix_json(m) + "\n");
            return 0;
        }

        if (*cmd_spectrum) {
            Complex K = load_input(spectrum_in);
            IntegerMatrix m = select_matrix(K, spectrum_operator);
            std::vector<Rat> probes;
            std::istringstream ps(spectrum_probes);
            std::string tok;
            while (std::getline(ps, tok, ','))
                if (!tok.empty()) probes.push_back(io::parse_rational(tok));
            auto summary = exact::eig_symmetric(m, spectrum_tol, probes);
            if (spectrum_format == "csv") {
                for (double v : summary.eigenvalues)
                    std::cout << io::format_sig6(v) << "\n";
            } else {
                json j = io::spectral_summary_to_json(summary);
                j["operator"] = spectrum_operator;
                j["order"] = m.rows();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_betti) {
            Complex K = load_input(betti_in);
            std::vector<BettiVector> results;
            auto run_method = [&](const std::string& name) -> BettiVector {
                if (name == "hodge") return betti_hodge(K);
                if (name == "kirchhoff") {
                    if (K.dim() > 1)
                        throw error(errc::not_one_dimensional,
                                    "kirchhoff route needs a 1-dim complex");
                    return betti_from_kirchhoff(dirac_and_hodge(K).blocks[0]);
                }
                if (name == "hodge-spectrum") {
                    if (K.dim() > 1)
                        throw error(errc::not_one_dimensional,
                                    "hodge-spectrum route needs a 1-dim complex");
                    IntegerMatrix H = dirac_and_hodge(K).hodge;
                    return betti_from_hodge_spectrum(exact::eig_symmetric(H), H.rows(),
                                                     H.trace());
                }
                if (name == "connection") return betti_from_connection(K);
                return betti_combinatorial(K);
            };
            if (betti_method == "all") {
                results.push_back(run_method("hodge"));
                if (K.dim() <= 1) {
                    results.push_back(run_method("kirchhoff"));
                    results.push_back(run_method("hodge-spectrum"));
                    if (K.is_refinement()) results.push_back(run_method("connection"));
                    results.push_back(run_method("combinatorial"));
                }
            } else {
                results.push_back(run_method(betti_method));
            }
            if (betti_format == "csv") {
                for (const auto& b : results) {
                    std::cout << betti_method_name(b.method);
                    for (long long v : b.b) std::cout << "," << v;
                    std::cout << "\n";
                }
            } else {
                json j = json::array();
                for (const auto& b : results) j.push_back(io::betti_to_json(b));
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            std::vector<std::string> checks;
            if (verify_check == "all")
                checks = kAllChecks;
            else
                checks.push_back(verify_check);

            std::vector<std::pair<std::string, VerificationReport>> reports;
            if (verify_in.path.empty()) {
                // bundled fixture suite
                auto fixtures_set = bundled_fixtures();
                for (const auto& check : checks) {
                    if (check == "isospectral-demo") {
                        reports.emplace_back("", run_check(check, fixtures_set[0].second));
                        continue;
                    }
                    for (const auto& [name, K] : fixtures_set)
                        if (check_applies(check, K))
                            reports.emplace_back(name, run_check(check, K));
                }
            } else {
                Complex K = load_input(verify_in);
                for (const auto& check : checks) {
                    if (verify_check == "all" && !check_applies(check, K)) continue;
                    reports.emplace_back("", run_check(check, K));
                }
            }
            return emit_reports(std::move(reports), verify_format);
        }

        if (*cmd_random) {
            Complex K = random_complex(random_n, random_m, effective_seed(random_seed));
            std::cout << io::write_complex_json(K) << "\n";
            return 0;
        }

        if (*cmd_experiment) {
            auto table = b2_experiment(b2_trials, b2_n, b2_m, effective_seed(b2_seed));
            std::cout << table.to_string();
            return 0;
        }
    } catch (const drum::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
