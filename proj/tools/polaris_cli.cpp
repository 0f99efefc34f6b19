// polaris command-line front end: single-point evaluation, frequency scans,
// verification against the embedded reference tables, resonance listing and
// scattering cross sections.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error, 3 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polaris/polaris.hpp"

namespace {

using namespace polaris;

std::string num17(double v) { return fmt_detail::num17(v); }

struct CommonFlags {
    std::string format = "csv";
    std::string output;
    std::string config;
    double tol = 0.0;            // 0 = default
    double guard = 1e-10;        // delta_pole
    double warn_band = 1e-4;
    double threshold_band = 1e-6;
    bool tol_set = false, guard_set = false, warn_set = false, thr_set = false;
};

void add_common(CLI::App* cmd, CommonFlags& cf) {
    cmd->add_option("--format", cf.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", cf.output, "Write output to a file instead of stdout");
    cmd->add_option("--config", cf.config, "key=value config file (flags win)");
    cmd->add_option("--tol", cf.tol,
                    "Quadrature tolerance (eval/scan/xsection) or last-digit "
                    "tolerance multiplier (verify)");
    cmd->add_option("--guard", cf.guard, "Pole rejection band on recurrence denominators");
    cmd->add_option("--warn-band", cf.warn_band, "near_resonance reporting band");
    cmd->add_option("--threshold-band", cf.threshold_band,
                    "Guard band around the ionization threshold omega = 1/2");
}

// Config file keys mirror the flags; explicit command-line flags win.
void apply_config(const CLI::App* cmd, CommonFlags& cf) {
    cf.tol_set = cmd->count("--tol") > 0;
    cf.guard_set = cmd->count("--guard") > 0;
    cf.warn_set = cmd->count("--warn-band") > 0;
    cf.thr_set = cmd->count("--threshold-band") > 0;
    if (cf.config.empty()) return;
    std::ifstream in(cf.config);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + cf.config);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        const double x = std::stod(val);
        if (key == "tol" && !cf.tol_set) cf.tol = x;
        else if (key == "guard" && !cf.guard_set) cf.guard = x;
        else if (key == "warn_band" && !cf.warn_set) cf.warn_band = x;
        else if (key == "threshold_band" && !cf.thr_set) cf.threshold_band = x;
    }
}

EvalOptions eval_options(const CommonFlags& cf) {
    EvalOptions opt;
    opt.threshold_band = cf.threshold_band;
    opt.continuation.delta_pole = cf.guard;
    opt.continuation.warn_band = cf.warn_band;
    if (cf.tol > 0.0) {
        opt.continuation.quad.rel_tol = cf.tol;
        opt.continuation.quad.abs_tol = std::min(1e-15, cf.tol);
    }
    return opt;
}

void emit(const CommonFlags& cf, const std::string& text) {
    if (cf.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cf.output);
        out << text;
    }
}

std::string records_out(const CommonFlags& cf, const std::vector<ScanRecord>& recs) {
    return cf.format == "json" ? to_json(recs) : to_csv(recs);
}

int run_eval(const CommonFlags& cf, double omega, const std::string& obs) {
    const EvalOptions opt = eval_options(cf);
    if (obs == "p") {
        const ComplexResponse p = p_term(omega, opt);
        std::ostringstream os;
        if (cf.format == "json") {
            os << "{\"omega\":" << num17(omega) << ",\"p_re\":"
               << num17(p.value.real()) << ",\"p_im\":" << num17(p.value.imag())
               << "}\n";
        } else {
            os << "omega,p_re,p_im\n"
               << num17(omega) << ',' << num17(p.value.real()) << ','
               << num17(p.value.imag()) << '\n';
        }
        emit(cf, os.str());
        return 0;
    }
    ScanRecord rec = evaluate_point(omega, opt);
    if (!rec.error.empty()) {
        std::cerr << "error: " << rec.error << '\n';
        return 2;
    }
    emit(cf, records_out(cf, {rec}));
    return 0;
}

int run_scan(const CommonFlags& cf, double start, double end, int steps,
             bool skip_res, unsigned threads) {
    ScanOptions sopt;
    sopt.eval = eval_options(cf);
    sopt.skip_resonances = skip_res;
    sopt.threads = threads;
    emit(cf, records_out(cf, scan(start, end, steps, sopt)));
    return 0;
}

int run_verify(const CommonFlags& cf, const std::string& table) {
    TableId id = TableId::TableI;
    if (table == "II" || table == "TableII") id = TableId::TableII;
    else if (table == "III" || table == "TableIII") id = TableId::TableIII;
    else if (!(table == "I" || table == "TableI"))
        throw CLI::ValidationError("--table", "expected I, II or III");
    const double mult = cf.tol > 0.0 ? cf.tol : 1.5;
    const VerifyReport rep = verify_table(id, mult, eval_options(cf));
    std::ostringstream os;
    int npass = 0, nfail = 0, nskip = 0;
    for (const auto& c : rep.rows) {
        if (c.skipped) {
            os << "SKIP  omega=" << c.omega << "  (duplicate row)\n";
            ++nskip;
            continue;
        }
        if (!c.error.empty()) {
            os << "FAIL  omega=" << c.omega << "  " << c.error << '\n';
            ++nfail;
            continue;
        }
        os << (c.pass ? "pass" : "FAIL") << "  omega=" << c.omega
           << "  expected=" << c.expected_re << "  got=" << num17(c.got_re)
           << "  delta=" << num17(c.got_re - c.expected_re)
           << "  tol=" << c.tol_re;
        if (c.has_im)
            os << "  expected_im=" << c.expected_im
               << "  got_im=" << num17(c.got_im)
               << "  delta_im=" << num17(c.got_im - c.expected_im)
               << "  tol_im=" << c.tol_im;
        os << '\n';
        (c.pass ? npass : nfail)++;
    }
    os << table_name(id) << ": " << npass << " passed, " << nfail
       << " failed, " << nskip << " skipped\n";
    emit(cf, os.str());
    return rep.all_pass ? 0 : 1;
}

int run_resonances(const CommonFlags& cf, int nmax) {
    const auto res = resonance_locator(nmax);
    std::ostringstream os;
    if (cf.format == "json") {
        os << "[";
        for (size_t i = 0; i < res.size(); ++i)
            os << (i ? "," : "") << "{\"n\":" << (i + 2)
               << ",\"omega\":" << num17(res[i]) << "}";
        os << "]\n";
    } else {
        os << "n,omega\n";
        for (size_t i = 0; i < res.size(); ++i)
            os << (i + 2) << ',' << num17(res[i]) << '\n';
    }
    emit(cf, os.str());
    return 0;
}

int run_xsection(const CommonFlags& cf, double omega, double theta,
                 double epsdot, bool have_theta) {
    const EvalOptions opt = eval_options(cf);
    const PhotonFrequency f(omega);
    std::ostringstream os;
    if (have_theta) {
        const CrossSection cs = cross_section_unpolarized(f, theta, opt);
        if (cf.format == "json")
            os << "{\"omega\":" << num17(omega) << ",\"theta\":" << num17(theta)
               << ",\"dsigma_r0sq\":" << num17(cs.value)
               << ",\"m_abs2\":" << num17(cs.msquared) << "}\n";
        else
            os << "omega,theta,dsigma_r0sq,m_abs2\n"
               << num17(omega) << ',' << num17(theta) << ',' << num17(cs.value)
               << ',' << num17(cs.msquared) << '\n';
    } else {
        const double v = cross_section_polarized(f, epsdot, opt);
        if (cf.format == "json")
            os << "{\"omega\":" << num17(omega) << ",\"eps_dot\":" << num17(epsdot)
               << ",\"dsigma_a0sq\":" << num17(v) << "}\n";
        else
            os << "omega,eps_dot,dsigma_a0sq\n"
               << num17(omega) << ',' << num17(epsdot) << ',' << num17(v) << '\n';
    }
    emit(cf, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hydrogen 1s dynamic polarizability, Kramers-Heisenberg "
                 "matrix element and elastic photon scattering"};
    app.require_subcommand(1);

    CommonFlags cf_eval, cf_scan, cf_verify, cf_res, cf_xs;

    double omega = 0.0;
    std::string obs = "all";
    auto* cmd_eval = app.add_subcommand("eval", "Evaluate observables at one frequency");
    cmd_eval->add_option("--omega", omega, "Photon frequency, atomic units")->required();
    cmd_eval->add_option("--obs", obs, "Observable")
        ->check(CLI::IsMember({"tau2", "kh", "p", "all"}));
    add_common(cmd_eval, cf_eval);

    double start = 0.0, end = 0.0;
    int steps = 0;
    bool skip_res = false;
    unsigned threads = 0;
    auto* cmd_scan = app.add_subcommand("scan", "Scan a frequency interval");
    cmd_scan->add_option("--start", start, "First frequency")->required();
    cmd_scan->add_option("--end", end, "Last frequency")->required();
    cmd_scan->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
    cmd_scan->add_flag("--skip-resonances", skip_res,
                       "Drop grid points inside resonance guard bands");
    cmd_scan->add_option("--threads", threads, "Worker threads (0 = auto)");
    add_common(cmd_scan, cf_scan);

    std::string table;
    auto* cmd_verify = app.add_subcommand("verify", "Verify against an embedded reference table");
    cmd_verify->add_option("--table", table, "I, II or III")->required();
    add_common(cmd_verify, cf_verify);

    int nmax = 10;
    auto* cmd_res = app.add_subcommand("resonances", "List intermediate resonance frequencies");
    cmd_res->add_option("--nmax", nmax, "Largest principal quantum number");
    add_common(cmd_res, cf_res);

    double theta = 0.0, epsdot = 1.0;
    auto* cmd_xs = app.add_subcommand("xsection", "Elastic scattering cross section");
    cmd_xs->add_option("--omega", omega, "Photon frequency, atomic units")->required();
    auto* topt = cmd_xs->add_option("--theta", theta,
                                    "Scattering angle (radians): unpolarized dsigma/dOmega");
    cmd_xs->add_option("--epsdot", epsdot, "eps.eps' for the polarized cross section");
    add_common(cmd_xs, cf_xs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*cmd_eval) {
            apply_config(cmd_eval, cf_eval);
            return run_eval(cf_eval, omega, obs);
        }
        if (*cmd_scan) {
            apply_config(cmd_scan, cf_scan);
            return run_scan(cf_scan, start, end, steps, skip_res, threads);
        }
        if (*cmd_verify) {
            apply_config(cmd_verify, cf_verify);
            return run_verify(cf_verify, table);
        }
        if (*cmd_res) {
            apply_config(cmd_res, cf_res);
            return run_resonances(cf_res, nmax);
        }
        if (*cmd_xs) {
            apply_config(cmd_xs, cf_xs);
            return run_xsection(cf_xs, omega, theta, epsdot, topt->count() > 0);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const polaris::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 3;
}
