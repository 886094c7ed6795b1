// Command-line front end: exact QES solves, AIM eigenvalues, polynomial-
// solution condition reports, table reproduction, and plot data.

#include "decatic/serialize.hpp"
#include "decatic/tables.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace decatic;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitNoConvergence = 3;

long env_default_digits(long fallback) {
    if (const char *s = std::getenv("DECATIC_DIGITS")) {
        try {
            long v = std::stol(s);
            if (v > 0)
                return v;
        } catch (const std::exception &) {
        }
    }
    return fallback;
}

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

std::string csv_line(const std::vector<std::string> &fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            line += ',';
        line += fields[i];
    }
    line += "\r\n"; // RFC 4180
    return line;
}

Parity parse_parity(const std::string &s) {
    if (s == "even")
        return Parity::Even;
    if (s == "odd")
        return Parity::Odd;
    throw CLI::ValidationError("--parity", "must be 'even' or 'odd'");
}

struct PotentialFlags {
    std::string a = "1", b = "0", c = "0", d = "0", e = "0";

    void attach(CLI::App *cmd, bool full) {
        cmd->add_option("--a", a, "coefficient of x^10 (exact decimal or p/q)")->required();
        cmd->add_option("--b", b, "coefficient of x^8");
        cmd->add_option("--c", c, "coefficient of x^6");
        if (full) {
            cmd->add_option("--d", d, "coefficient of x^4");
            cmd->add_option("--e", e, "coefficient of x^2");
        }
    }
    Potential potential() const {
        return Potential(parse_rational(a), parse_rational(b), parse_rational(c),
                         parse_rational(d), parse_rational(e));
    }
};

// ---------------------------------------------------------------- exact ---

int cmd_exact(const PotentialFlags &pf, const std::string &parity_s, long n, long digits,
              const std::string &out) {
    const Parity parity = parse_parity(parity_s);
    const Rational a = parse_rational(pf.a), b = parse_rational(pf.b), c = parse_rational(pf.c);
    auto sols = solve_state(a, b, c, parity, n, digits);
    Json arr = Json::array();
    for (const QesSolution &s : sols)
        arr.push_back(to_json(s));
    write_output(arr.dump(2) + "\n", out);
    return sols.empty() ? kExitNoSolution : kExitOk;
}

// ------------------------------------------------------------------ aim ---

int cmd_aim(const PotentialFlags &pf, long count, long digits, long iters,
            const std::string &x0, long precision, const std::string &window, bool full_mode,
            const std::string &format, const std::string &out) {
    const Potential V = pf.potential();
    AimConfig cfg;
    cfg.x0 = parse_rational(x0);
    cfg.max_iters = iters;
    cfg.digits = digits;
    cfg.precision = precision;
    cfg.representation =
        full_mode ? AimRepresentation::FullBivariate : AimRepresentation::TaylorTruncated;
    if (!window.empty()) {
        const auto colon = window.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--window", "expected LO:HI");
        cfg.window_low = BigDecimal::from_rational(parse_rational(window.substr(0, colon)), 30);
        cfg.window_high = BigDecimal::from_rational(parse_rational(window.substr(colon + 1)), 30);
    }
    const AimResult result = aim_eigenvalues(V, cfg, count);

    // when the potential carries an exact state whose (d, e) match, attach
    // the exact termination certificate
    std::vector<Json> certificates;
    if (const auto adm = admissible_state(V)) {
        try {
            auto sols = solve_state(V.a, V.b, V.c, adm->parity, adm->degree, digits + 10);
            for (const QesSolution &s : sols) {
                if (!s.exact || !(*s.e_exact == ExtendedScalar(V.e)) ||
                    !(s.d == ExtendedScalar(V.d)))
                    continue;
                const Certificate cert =
                    qes_certificate(V, *s.energy_exact, std::max<long>(2, adm->degree + 1));
                Json cj;
                cj["state"] = s.degree;
                cj["E"] = to_json(*s.energy_exact);
                cj["certified"] = cert.certified;
                if (cert.witness)
                    cj["witness"] = *cert.witness;
                certificates.push_back(std::move(cj));
            }
        } catch (const std::exception &) {
            // certification is best-effort decoration of the AIM output
        }
    }

    if (format == "csv") {
        std::string text = csv_line({"index", "E", "digits_converged", "iterations", "converged"});
        for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
            const AimEigenvalue &ev = result.eigenvalues[i];
            text += csv_line({std::to_string(i), ev.value.str(digits + 4),
                              std::to_string(ev.trace.digits_agreed),
                              std::to_string(ev.trace.iterations),
                              ev.trace.converged ? "true" : "false"});
        }
        write_output(text, out);
    } else {
        write_output(to_json(V, cfg, result, certificates).dump(2) + "\n", out);
    }
    const bool none = std::none_of(result.eigenvalues.begin(), result.eigenvalues.end(),
                                   [](const AimEigenvalue &e) { return e.trace.converged; });
    return none ? kExitNoConvergence : kExitOk;
}

// ----------------------------------------------------------- conditions ---

int cmd_conditions(const std::string &file, long nmax, const std::string &out) {
    std::ifstream f(file);
    if (!f) {
        std::cerr << "cannot open " << file << "\n";
        return kExitParse;
    }
    Json input;
    try {
        f >> input;
    } catch (const std::exception &ex) {
        std::cerr << "invalid JSON: " << ex.what() << "\n";
        return kExitParse;
    }
    OdeCoefficients ode = ode_from_json(input);
    ode.validate();

    Json report;
    const auto degrees = necessary_degrees(ode, nmax);
    report["admissible_degrees"] = degrees;
    Json dets;
    Json d1 = Json::array(), d2 = Json::array();
    for (const auto &d : degree1_determinants(ode))
        d1.push_back(d.str());
    for (const auto &d : degree2_determinants(ode))
        d2.push_back(d.str());
    dets["degree1_2x2"] = d1;
    dets["degree2_3x3"] = d2;
    report["determinants"] = dets;

    Json sols = Json::array();
    for (long n : degrees) {
        for (const auto &sol : polynomial_solutions(ode, n)) {
            Json s;
            s["degree"] = sol.degree;
            Json coeffs = Json::array();
            for (long i = 0; i <= sol.y.degree(); ++i)
                coeffs.push_back(to_json(sol.y.coeff(static_cast<std::size_t>(i))));
            s["coefficients"] = coeffs;
            sols.push_back(std::move(s));
        }
    }
    report["solutions"] = sols;
    if (degrees.empty())
        report["note"] = "no admissible degree <= " + std::to_string(nmax);
    write_output(report.dump(2) + "\n", out);
    return kExitOk;
}

// ---------------------------------------------------------------- table ---

int cmd_table(int which, const std::string &mu_s, const std::string &k_s, const std::string &sign_s,
              long digits, long iters, long count, const std::string &out) {
    if (which == 5) {
        AimConfig cfg;
        cfg.max_iters = iters;
        cfg.digits = digits;
        cfg.representation = AimRepresentation::TaylorTruncated;
        cfg.window_low = BigDecimal::from_long(-10, 30);
        cfg.window_high = BigDecimal::from_long(60, 30);
        std::string text = csv_line(
            {"block", "n", "E", "digits_converged", "iterations", "converged", "reference"});
        bool any = false;
        for (std::size_t bi = 0; bi < table5_blocks().size(); ++bi) {
            const Table5Block &blk = table5_blocks()[bi];
            const AimResult r = aim_eigenvalues(blk.potential, cfg, count);
            for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
                const AimEigenvalue &ev = r.eigenvalues[i];
                any = any || ev.trace.converged;
                text += csv_line({std::to_string(bi), std::to_string(i), ev.value.str(digits + 2),
                                  std::to_string(ev.trace.digits_agreed),
                                  std::to_string(ev.trace.iterations),
                                  ev.trace.converged ? "true" : "false",
                                  i < blk.reference.size() ? blk.reference[i] : ""});
            }
        }
        write_output(text, out);
        return any ? kExitOk : kExitNoConvergence;
    }

    const Rational mu = parse_rational(mu_s), k = parse_rational(k_s);
    const int sign = sign_s == "-" ? -1 : +1;
    std::string text =
        csv_line({"table", "row", "sign", "mu", "k", "a", "b", "c", "d", "e", "E"});
    for (int row = 1; row <= 8; ++row) {
        TableRow r = table_row({which, row, mu, k, sign});
        text += csv_line({std::to_string(which), std::to_string(row), sign == 1 ? "+" : "-",
                          to_string(mu), to_string(k), to_string(r.a), r.b.str(), r.c.str(),
                          r.d.str(), r.e.str(), r.energy.str()});
    }
    write_output(text, out);
    return kExitOk;
}

// ------------------------------------------------------------ plot-data ---

int cmd_plot_data(const PotentialFlags &pf, long state, bool have_state, const std::string &xmin_s,
                  const std::string &xmax_s, long samples, long digits, const std::string &out) {
    const Potential V = pf.potential();
    const Rational xmin = parse_rational(xmin_s), xmax = parse_rational(xmax_s);
    if (samples < 1)
        throw CLI::ValidationError("--samples", "must be >= 1");
    if (xmax < xmin)
        throw CLI::ValidationError("--xmax", "must be >= --xmin");

    std::optional<Wavefunction> psi;
    if (have_state) {
        const Parity parity = state % 2 == 0 ? Parity::Even : Parity::Odd;
        auto sols = solve_state(V.a, V.b, V.c, parity, state, digits + 10);
        const BigDecimal tol = BigDecimal::pow10(-digits, 40);
        for (const QesSolution &s : sols) {
            const BigDecimal dd =
                (BigDecimal::from_extended(s.d, digits + 20) -
                 BigDecimal::from_rational(V.d, digits + 20))
                    .abs();
            const BigDecimal de =
                (s.e_value - BigDecimal::from_rational(V.e, digits + 20)).abs();
            if (dd < tol && de < tol) {
                psi = wavefunction(s, digits + 10);
                break;
            }
        }
        if (!psi) {
            std::cerr << "no QES state " << state << " matches the given d, e\n";
            return kExitNoSolution;
        }
    }

    const UniPoly<Rational> Vp = V.poly();
    std::string text = csv_line({"x", "V", "psi"});
    for (long i = 0; i < samples; ++i) {
        Rational x = xmin;
        if (samples > 1)
            x = xmin + (xmax - xmin) * rational(i, 1) / rational(samples - 1, 1);
        const BigDecimal xd = BigDecimal::from_rational(x, digits + 10);
        std::vector<std::string> row{xd.str(digits),
                                     BigDecimal::from_rational(Vp.eval(x), digits + 10).str(digits),
                                     ""};
        if (psi)
            row[2] = (*psi)(xd).str(digits);
        text += csv_line(row);
    }
    write_output(text, out);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact and arbitrary-precision spectra of decatic potentials"};
    app.require_subcommand(1);

    const long default_digits = env_default_digits(50);

    // exact
    auto *exact = app.add_subcommand("exact", "exact QES states from (a, b, c)");
    PotentialFlags exact_pf;
    exact_pf.attach(exact, false);
    std::string exact_parity = "even";
    long exact_n = 0, exact_digits = default_digits;
    std::string exact_out;
    exact->add_option("--parity", exact_parity, "even or odd");
    exact->add_option("--n", exact_n, "state index (chi degree)");
    exact->add_option("--digits", exact_digits, "decimal digits for irrational states");
    exact->add_option("--out", exact_out, "output path (default stdout)");

    // aim
    auto *aim = app.add_subcommand("aim", "asymptotic iteration method eigenvalues");
    PotentialFlags aim_pf;
    aim_pf.attach(aim, true);
    long aim_count = 3, aim_digits = env_default_digits(10), aim_iters = 120, aim_precision = 0;
    std::string aim_x0 = "0", aim_window, aim_format = "json", aim_out;
    bool aim_full = false;
    aim->add_option("--count", aim_count, "number of eigenvalues");
    aim->add_option("--digits", aim_digits, "requested digits");
    aim->add_option("--iters", aim_iters, "maximum iterations");
    aim->add_option("--x0", aim_x0, "evaluation point (rational)");
    aim->add_option("--precision", aim_precision, "working precision in digits (0 = schedule)");
    aim->add_option("--window", aim_window, "energy window LO:HI");
    aim->add_flag("--full", aim_full, "full bivariate representation (default: taylor-truncated)");
    aim->add_option("--format", aim_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    aim->add_option("--out", aim_out, "output path");

    // conditions
    auto *conditions =
        app.add_subcommand("conditions", "polynomial-solution conditions for a general ODE");
    std::string cond_file, cond_out;
    long cond_nmax = 10;
    conditions->add_option("--file", cond_file, "OdeCoefficients JSON file")->required();
    conditions->add_option("--nmax", cond_nmax, "largest degree to test");
    conditions->add_option("--out", cond_out, "output path");

    // table
    auto *table = app.add_subcommand("table", "reproduce the exact or AIM benchmark tables");
    int table_which = 1;
    std::string table_mu = "1", table_k = "1", table_sign = "+", table_out;
    long table_digits = env_default_digits(10), table_iters = 120, table_count = 3;
    table->add_option("--which", table_which, "table id: 1, 2 or 5")->required();
    table->add_option("--mu", table_mu, "mu > 0");
    table->add_option("--k", table_k, "k > 0");
    table->add_option("--sign", table_sign, "+ or - for the b = +/- mu rows");
    table->add_option("--digits", table_digits, "desk-scale digits for table 5");
    table->add_option("--iters", table_iters, "iteration cap for table 5");
    table->add_option("--count", table_count, "eigenvalues per block for table 5");
    table->add_option("--out", table_out, "output path");

    // plot-data
    auto *plot = app.add_subcommand("plot-data", "sampled potential and wavefunction columns");
    PotentialFlags plot_pf;
    plot_pf.attach(plot, true);
    long plot_state = 0, plot_samples = 400, plot_digits = 20;
    bool plot_have_state = false;
    std::string plot_xmin = "-2", plot_xmax = "2", plot_out;
    plot->add_option("--state", plot_state, "QES state index (chi degree)")
        ->each([&](const std::string &) { plot_have_state = true; });
    plot->add_option("--xmin", plot_xmin, "left end of the x range");
    plot->add_option("--xmax", plot_xmax, "right end of the x range");
    plot->add_option("--samples", plot_samples, "number of sample points");
    plot->add_option("--digits", plot_digits, "printed digits");
    plot->add_option("--out", plot_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) ? kExitParse : kExitOk;
    }

    try {
        if (exact->parsed())
            return cmd_exact(exact_pf, exact_parity, exact_n, exact_digits, exact_out);
        if (aim->parsed())
            return cmd_aim(aim_pf, aim_count, aim_digits, aim_iters, aim_x0, aim_precision,
                           aim_window, aim_full, aim_format, aim_out);
        if (conditions->parsed())
            return cmd_conditions(cond_file, cond_nmax, cond_out);
        if (table->parsed()) {
            if (table_which != 1 && table_which != 2 && table_which != 5)
                throw CLI::ValidationError("--which", "must be 1, 2 or 5");
            return cmd_table(table_which, table_mu, table_k, table_sign, table_digits,
                             table_iters, table_count, table_out);
        }
        if (plot->parsed())
            return cmd_plot_data(plot_pf, plot_state, plot_have_state, plot_xmin, plot_xmax,
                                 plot_samples, plot_digits, plot_out);
    } catch (const CLI::Error &e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
