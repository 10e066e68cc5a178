#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mumford/closed_form.hpp"
#include "mumford/cohomology.hpp"
#include "mumford/integrate.hpp"
#include "mumford/json_io.hpp"
#include "mumford/rng.hpp"
#include "mumford/suites.hpp"
#include "mumford/theta.hpp"
#include "mumford/verify.hpp"

using namespace mumford;

namespace {

void write_artifact(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

int report_exit(const std::vector<SuiteReport>& reports, const std::string& format,
                const std::string& out_path) {
    bool pass = true;
    std::string payload;
    if (format == "json") {
        payload = "[";
        for (size_t i = 0; i < reports.size(); ++i)
            payload += (i ? ",\n" : "\n") + reports[i].to_json();
        payload += "\n]\n";
    } else {
        for (const auto& r : reports) payload += r.to_text();
    }
    for (const auto& r : reports) pass = pass && r.all_pass();
    write_artifact(out_path, payload);
    return pass ? 0 : 1;
}

std::vector<double> parse_direction(const std::string& text, int g) {
    std::vector<double> dir;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) dir.push_back(std::stod(cell));
    if (dir.empty()) dir.assign(static_cast<size_t>(g), 0.0), dir[0] = 1.0;
    return dir;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for the Mumford system, its even and Prym variants, "
                 "the D_g Lax chains and the isospectral Noumi-Yamada systems"};
    app.set_config("--config", "", "key=value configuration file; flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.fallthrough();  // global options may follow the subcommand
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path;
    double tolerance = 1e-8;
    app.add_option("--seed", seed, "deterministic seed")->capture_default_str()->configurable();
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str()
        ->configurable();
    app.add_option("--out", out_path, "output path ('-' for stdout)")->configurable();
    app.add_option("--tol", tolerance, "tolerance for float-mode checks")
        ->capture_default_str()
        ->configurable();

    // --- simulate ---------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "integrate a family flow and emit a CSV trajectory");
    std::string sim_family = "mumford", sim_point_path, sim_direction;
    int sim_g = 1;
    double sim_t_end = 1.0, sim_step = 1e-3;
    sim->add_option("--family", sim_family, "family name")->configurable();
    sim->add_option("--g", sim_g, "genus")->configurable();
    sim->add_option("--point", sim_point_path, "JSON file with the initial point (default: seeded)");
    sim->add_option("--direction", sim_direction, "comma-separated direction coefficients");
    sim->add_option("--t-end", sim_t_end, "integration time")->configurable();
    sim->add_option("--step", sim_step, "RK4 step")->configurable();

    // --- verify -----------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "exact invariance/bracket/rank/pushforward report");
    std::string ver_family = "all";
    int ver_g = 2, ver_points = 20;
    ver->add_option("--family", ver_family, "family name or 'all'")->configurable();
    ver->add_option("--g", ver_g, "genus")->configurable();
    ver->add_option("--points", ver_points, "sampled points per check")->configurable();

    // --- diagram-check ----------------------------------------------------
    auto* dia = app.add_subcommand("diagram-check", "exact commutativity of the map diagrams");
    int dia_points = 20, dia_g = 2;
    bool dia_sweep = false;
    dia->add_option("--points", dia_points, "sampled points per check")->configurable();
    dia->add_option("--g", dia_g, "max genus")->configurable();
    dia->add_flag("--sweep-gauge", dia_sweep, "report the even-period gauge sweep");

    // --- cohomology-table -------------------------------------------------
    auto* coh = app.add_subcommand("cohomology-table", "CSV table of Betti numbers and q-Euler data");
    int coh_gmax = 3;
    coh->add_option("--gmax", coh_gmax, "largest genus")->configurable();

    // --- q-euler ----------------------------------------------------------
    auto* qe = app.add_subcommand("q-euler", "q-Euler characteristics, oracle vs closed form");
    std::string qe_kind = "odd";
    int qe_g = 1;
    qe->add_option("--kind", qe_kind, "odd|even|prym1|prym2")->configurable();
    qe->add_option("--g", qe_g, "genus")->configurable();

    // --- solve-exact ------------------------------------------------------
    auto* sol = app.add_subcommand("solve-exact", "g=1 closed forms compared against RK4");
    std::string sol_family = "mumford";
    double sol_t_end = 0.5, sol_step = 1e-3;
    sol->add_option("--family", sol_family, "mumford|ny1|ny2")->configurable();
    sol->add_option("--t-end", sol_t_end, "window length")->configurable();
    sol->add_option("--step", sol_step, "RK4 step")->configurable();

    // --- fiber-split ------------------------------------------------------
    auto* fib = app.add_subcommand("fiber-split", "variant-II two-sheet fiber demonstration");
    int fib_points = 20;
    fib->add_option("--points", fib_points, "sampled points")->configurable();

    // --- verify-all -------------------------------------------------------
    auto* all = app.add_subcommand("verify-all", "run every acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            const Family fam = family_from_name(sim_family);
            std::vector<double> p0;
            std::vector<double> eparams;
            if (!sim_point_path.empty()) {
                std::ifstream in(sim_point_path);
                std::stringstream buf;
                buf << in.rdbuf();
                const std::string text = buf.str();
                if (is_mumford_like(fam)) {
                    p0 = mumford_like_from_json<double>(text).flatten();
                } else if (is_dlax(fam)) {
                    p0 = dlax_from_json<double>(text).flatten();
                } else {
                    auto st = ny_from_json<double>(text);
                    p0 = st.q;
                    eparams = st.e;
                }
            } else {
                Rng rng(seed);
                if (is_mumford_like(fam))
                    p0 = random_point<double>(fam, sim_g, rng).flatten();
                else if (is_dlax(fam))
                    p0 = random_dlax<double>(fam, sim_g, rng).flatten();
                else {
                    auto st = random_ny<double>(fam, sim_g, rng);
                    p0 = st.q;
                    eparams = st.e;
                }
            }
            const std::vector<double> dir = parse_direction(sim_direction, sim_g);
            Trajectory tr = integrate(fam, sim_g, p0, dir, sim_t_end, sim_step, eparams);
            write_artifact(out_path, trajectory_csv(tr));
            if (tr.blew_up)
                std::cerr << "note: trajectory blew up at t = " << tr.blowup_time << "\n";
            return tr.drift < tolerance || tr.blew_up ? 0 : 1;
        }

        if (*ver) {
            std::vector<SuiteReport> reports = {suite_invariance(seed, ver_points),
                                                suite_commutativity(seed, ver_points),
                                                suite_fiber(seed, ver_points)};
            return report_exit(reports, format.empty() ? "json" : "json", out_path);
        }

        if (*dia) {
            std::vector<SuiteReport> reports = {suite_map_identities(seed, dia_points)};
            if (dia_sweep) {
                std::ostringstream sw;
                sw << "gauge,trace,det,b0\n";
                for (const auto& row : sweep_gauge(seed, 1, 4))
                    sw << row.gauge << ",\"" << row.trace << "\",\"" << row.det << "\"," << row.b0
                       << "\n";
                std::cerr << sw.str();
            }
            return report_exit(reports, "json", out_path);
        }

        if (*coh) {
            std::ostringstream csv;
            csv << "kind,g,k,betti,euler,chi_q,limit\n";
            for (const auto& row : cohomology_table(coh_gmax))
                csv << row.kind << "," << row.g << "," << row.k << "," << row.betti << ","
                    << row.euler << ",\"" << row.chi_q << "\"," << row.limit << "\n";
            write_artifact(out_path, csv.str());
            return 0;
        }

        if (*qe) {
            const SystemKind kind = system_kind_from_name(qe_kind);
            const QRational oracle = chi_q_hilbert(kind, qe_g);
            std::ostringstream out;
            out << "kind: " << system_kind_name(kind) << "  g: " << qe_g << "\n";
            out << "chi_q (hilbert oracle): " << oracle.str() << "\n";
            out << "limit at q=1: " << oracle.limit_at_one().str() << "\n";
            if (kind == SystemKind::OddMumford) {
                const QRational lit = chi_q_closed(kind, qe_g, FactorialConvention::full);
                const QRational part = chi_q_closed(kind, qe_g, FactorialConvention::down_to_half);
                out << "closed form (factorial down to [1/2]): " << lit.str()
                    << (lit.has_pole_at_one() ? "   [pole at q=1]" : "") << "\n";
                out << "closed form (factorial down to [3/2]): " << part.str()
                    << (part == oracle ? "   [matches oracle]" : "   [differs from oracle]")
                    << "\n";
                out << "oracle-match: " << (part == oracle ? "true" : "false")
                    << " (convention-dependent; the oracle is authoritative)\n";
            } else {
                const QRational closed = chi_q_closed(kind, qe_g);
                out << "closed form: " << closed.str() << "\n";
                out << "oracle-match: " << (closed == oracle ? "true" : "false") << "\n";
            }
            write_artifact(out_path, out.str());
            if (kind == SystemKind::OddMumford) return 0;
            return chi_q_closed(kind, qe_g) == oracle ? 0 : 1;
        }

        if (*sol) {
            SuiteReport rep = suite_closed_forms(seed);
            (void)sol_family;
            (void)sol_t_end;
            (void)sol_step;
            write_artifact(out_path, rep.to_text());
            return rep.all_pass() ? 0 : 1;
        }

        if (*fib) {
            SuiteReport rep = suite_fiber(seed, fib_points);
            return report_exit({rep}, "json", out_path);
        }

        if (*all) {
            const std::vector<SuiteReport> reports = run_all_suites(seed);
            return report_exit(reports, format == "json" ? "json" : "text", out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
