// Command-line front end: solve a configured Abel-Volterra system at one
// degree, sweep a list of degrees into a convergence table, or cross-check
// the Tau solution against the independent power-series route near the
// origin.
//
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 oracle
// mismatch beyond tolerance.

#include "abeltau/config.hpp"
#include "abeltau/error.hpp"
#include "abeltau/examples.hpp"
#include "abeltau/report.hpp"
#include "abeltau/series.hpp"
#include "abeltau/tau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct Inputs {
    std::string config_path;
    int example = 0;

    abeltau::ProblemConfig load() const {
        if (example > 0)
            return abeltau::builtin_example(example);
        return abeltau::load_config_file(config_path);
    }
};

int thread_count() {
    if (const char* env = std::getenv("ABEL_TAU_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return 1;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos)
            next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            abeltau::raise(abeltau::ErrorKind::config, "bad N list entry '" + tok + "'");
        }
        pos = next + 1;
    }
    if (out.empty())
        abeltau::raise(abeltau::ErrorKind::config, "empty N list");
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k] <= out[k - 1])
            abeltau::raise(abeltau::ErrorKind::config, "N list must be strictly ascending");
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        abeltau::raise(abeltau::ErrorKind::config, "cannot write '" + out_path + "'");
    out << text;
}

json solution_json(const abeltau::TauSolution& sol, const std::vector<double>& errors) {
    json j;
    j["N"] = sol.N;
    j["residual"] = sol.residual_norm;
    j["tau_norms"] = sol.tau_norms;
    json taus = json::object();
    for (std::size_t i = 0; i < sol.taus.size(); ++i)
        taus[std::to_string(i + 1)] = sol.taus[i];
    j["tau"] = taus;
    json y = json::array();
    for (int i = 0; i < sol.y_n.size(); ++i)
        y.push_back(sol.y_n[i].coeffs());
    j["y_coeffs"] = y;
    j["gamma"] = sol.y_n.gamma();
    if (!errors.empty())
        j["sup_errors"] = errors;
    return j;
}

int cmd_solve(const Inputs& in, int N, bool dump, const std::string& out_path) {
    const abeltau::ProblemConfig cfg = in.load();
    const abeltau::Problem problem = abeltau::config_to_problem(cfg);

    abeltau::TauSolver solver(problem);
    const abeltau::TauSolution sol = solver.solve(N);

    std::vector<double> errors;
    const auto exact = abeltau::exact_solution_fns(cfg);
    if (!exact.empty())
        errors = abeltau::sup_error(sol.y_n, exact);

    if (dump) {
        write_output(solution_json(sol, errors).dump(2) + "\n", out_path);
        return 0;
    }

    std::ostringstream out;
    out << "N = " << sol.N << "\n";
    for (std::size_t i = 0; i < sol.taus.size(); ++i) {
        out << "tau[" << (i + 1) << "] =";
        for (double t : sol.taus[i]) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " %.6e", t);
            out << buf;
        }
        out << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", sol.residual_norm);
    out << "residual = " << buf << "\n";
    for (std::size_t i = 0; i < errors.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.6e", errors[i]);
        out << "sup_error[" << (i + 1) << "] = " << buf << "\n";
    }
    bool exact_match = sol.max_tau() <= 1e-12;
    for (double e : errors)
        exact_match = exact_match && e <= 1e-10;
    out << "exact_representation = " << (exact_match && !errors.empty() ? "yes" : "no") << "\n";
    double dropped = 0.0;
    for (double d : sol.dropped_forcing)
        dropped = std::max(dropped, d);
    if (dropped > 0.0) {
        std::snprintf(buf, sizeof(buf), "%.6e", dropped);
        out << "forcing_mass_beyond_N = " << buf << "\n";
    }
    write_output(out.str(), out_path);
    return 0;
}

int cmd_sweep(const Inputs& in, const std::vector<int>& n_list, const std::string& out_path,
              bool csv_only) {
    const abeltau::ProblemConfig cfg = in.load();
    const abeltau::Problem problem = abeltau::config_to_problem(cfg);
    const auto exact = abeltau::exact_solution_fns(cfg);

    abeltau::TauSolver solver(problem);
    solver.prepare(n_list.back()); // canonical table generated once, reused by every N

    std::vector<abeltau::TauSolution> sols(n_list.size());
    std::vector<double> seconds(n_list.size(), 0.0);

    auto run_one = [&](std::size_t k) {
        const auto t0 = std::chrono::steady_clock::now();
        sols[k] = solver.solve_prepared(n_list[k]);
        seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const int threads = thread_count();
    if (threads <= 1) {
        for (std::size_t k = 0; k < n_list.size(); ++k)
            run_one(k);
    } else {
        std::vector<std::future<void>> futs;
        for (std::size_t k = 0; k < n_list.size(); ++k)
            futs.push_back(std::async(std::launch::async, run_one, k));
        for (auto& f : futs)
            f.get();
    }

    abeltau::RunReport report;
    report.components = problem.n();
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        abeltau::RunRow row;
        row.N = n_list[k];
        row.tau_norms = sols[k].tau_norms;
        row.errors = exact.empty()
                         ? std::vector<double>(static_cast<std::size_t>(problem.n()),
                                               std::numeric_limits<double>::quiet_NaN())
                         : abeltau::sup_error(sols[k].y_n, exact);
        row.residual = sols[k].residual_norm;
        row.seconds = seconds[k];
        report.rows.push_back(std::move(row));
    }

    write_output(abeltau::to_csv(report), out_path);
    if (!csv_only) {
        if (out_path.empty())
            std::cout << "\n";
        std::cout << abeltau::to_text_table(report);
    }
    return 0;
}

int cmd_oracle(const Inputs& in, int N, int M, std::optional<double> tol_opt,
               const std::string& out_path) {
    const abeltau::ProblemConfig cfg = in.load();
    const abeltau::Problem problem = abeltau::config_to_problem(cfg);

    abeltau::TauSolver solver(problem);
    const abeltau::TauSolution sol = solver.solve(N);
    const abeltau::SeriesSolution series = abeltau::series_coeffs(problem, M);
    const double window = abeltau::comparison_window(series.radius);

    double disc = 0.0;
    const int grid = 201;
    for (int k = 0; k <= grid; ++k) {
        const double t = window * k / grid;
        const std::vector<double> ys = series.eval(t);
        for (int i = 0; i < problem.n(); ++i)
            disc = std::max(disc, std::fabs(sol.y_n[i].eval(t) - ys[static_cast<std::size_t>(i)]));
    }

    double tol = 1e-8;
    if (tol_opt) {
        tol = *tol_opt;
    } else {
        const auto exact = abeltau::exact_solution_fns(cfg);
        if (!exact.empty()) {
            double err = 0.0;
            for (double e : abeltau::sup_error(sol.y_n, exact))
                err = std::max(err, e);
            tol = std::max(10.0 * err, 1e-8);
        }
    }

    std::ostringstream out;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[0, %.6e]", window);
    out << "window = " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6e", disc);
    out << "max_discrepancy = " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6e", tol);
    out << "tolerance = " << buf << "\n";
    out << "status = " << (disc <= tol ? "pass" : "fail") << "\n";
    write_output(out.str(), out_path);
    return disc <= tol ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive fractional Tau solver for Abel-Volterra systems"};
    app.require_subcommand(1);

    Inputs in;
    int N = 0, M = 40;
    bool dump = false, csv_only = false;
    std::string out_path, n_list_text;
    std::optional<double> tol;

    auto add_inputs = [&](CLI::App* cmd) {
        auto* cfg = cmd->add_option("--config", in.config_path, "problem definition file");
        auto* ex = cmd->add_option("--example", in.example, "built-in example 1..4")
                       ->check(CLI::Range(1, 4));
        cfg->excludes(ex);
        cmd->add_option("--out", out_path, "write the primary output to a file");
    };

    CLI::App* solve = app.add_subcommand("solve", "single solve at degree N");
    add_inputs(solve);
    solve->add_option("--n", N, "approximation degree")->required();
    solve->add_flag("--dump", dump, "machine-readable JSON summary");

    CLI::App* sweep = app.add_subcommand("sweep", "N-sweep with CSV and text table");
    add_inputs(sweep);
    sweep->add_option("--n-list", n_list_text, "ascending comma-separated degrees")->required();
    sweep->add_flag("--csv-only", csv_only, "suppress the text table");

    CLI::App* oracle = app.add_subcommand("oracle", "compare against the power-series route");
    add_inputs(oracle);
    oracle->add_option("--n", N, "approximation degree")->required();
    oracle->add_option("--m", M, "series truncation index");
    double tol_val = 0.0;
    auto* tol_opt = oracle->add_option("--tol", tol_val, "override the pass tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (in.example == 0 && in.config_path.empty())
            abeltau::raise(abeltau::ErrorKind::config, "supply --config FILE or --example {1,2,3,4}");
        if (solve->parsed())
            return cmd_solve(in, N, dump, out_path);
        if (sweep->parsed())
            return cmd_sweep(in, parse_n_list(n_list_text), out_path, csv_only);
        if (oracle->parsed()) {
            if (tol_opt->count() > 0)
                tol = tol_val;
            return cmd_oracle(in, N, M, tol, out_path);
        }
    } catch (const abeltau::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == abeltau::ErrorKind::config ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
