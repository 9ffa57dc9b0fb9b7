#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taumix/counting.hpp"
#include "taumix/verify.hpp"

using namespace taumix;
using nlohmann::json;

namespace {

struct Global {
    bool json_out = false;
    std::string csv_path;
    int threads = 0;
    u64 seed = 12345;
    u64 budget_mb = 2048;

    SieveConfig sieve() const {
        SieveConfig cfg;
        cfg.threads = threads;
        cfg.budget_mb = budget_mb;
        return cfg;
    }
};

void emit(const Global& g, const json& j, const std::string& text) {
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open csv output: " + path);
    return os;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int run_tau(const Global& g, int k, u64 lo, u64 hi, const std::string& dump,
            const std::string& load, u64 point) {
    if (point) {
        u128 v = tau_k_point(k, point);
        json j{{"k", k}, {"n", point}, {"tau", to_string(v)}};
        emit(g, j, "tau_" + std::to_string(k) + "(" + std::to_string(point) + ") = " + to_string(v) + "\n");
        return 0;
    }
    DivisorTable t;
    if (!load.empty()) {
        std::ifstream is(load, std::ios::binary);
        if (!is) throw std::invalid_argument("cannot open table: " + load);
        t = read_table(is);
        if (t.k != k) throw std::invalid_argument("table holds k=" + std::to_string(t.k));
    } else {
        t = sieve_tau_k(k, lo, hi, g.sieve());
    }
    if (!dump.empty()) {
        std::ofstream os(dump, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open dump output: " + dump);
        write_table(t, os);
    }
    json j{{"k", t.k}, {"lo", t.lo}, {"hi", t.hi},
           {"sum", to_string(t.sum1)}, {"sum_sq", to_string(t.sum2)}};
    std::string txt = "tau_" + std::to_string(t.k) + " on [" + std::to_string(t.lo) + ", " +
                      std::to_string(t.hi) + "]: sum = " + to_string(t.sum1) +
                      ", sum of squares = " + to_string(t.sum2) + "\n";
    if (!g.csv_path.empty()) {
        auto os = open_csv(g.csv_path);
        os << "n,tau\n";
        for (u64 n = t.lo; n <= t.hi; ++n) os << n << "," << t.at(n) << "\n";
    }
    emit(g, j, txt);
    return 0;
}

int run_gauss(const Global& g, int r, i64 q, i64 a, i64 b, bool sweep) {
    json rows = json::array();
    std::string txt;
    std::ofstream csv;
    bool with_csv = !g.csv_path.empty();
    if (with_csv) {
        csv = open_csv(g.csv_path);
        csv << "q,a,beta,re,im,abs,bound_ratio\n";
    }
    auto one = [&](i64 aa, std::complex<double> v) {
        double ratio = std::abs(v) * std::pow(double(q), 1.0 / r - 1.0);
        rows.push_back({{"q", q}, {"a", aa}, {"re", v.real()}, {"im", v.imag()},
                        {"abs", std::abs(v)}, {"bound_ratio", ratio}});
        txt += "G_" + std::to_string(r) + "(" + std::to_string(aa) + "," + std::to_string(b) +
               ";" + std::to_string(q) + ") = (" + fmt(v.real()) + ", " + fmt(v.imag()) +
               ")  |G| q^{1/r-1} = " + fmt(ratio) + "\n";
        if (with_csv)
            csv << q << "," << aa << ",0," << fmt(v.real()) << "," << fmt(v.imag()) << ","
                << fmt(std::abs(v)) << "," << fmt(ratio) << "\n";
    };
    if (sweep) {
        auto all = gauss_sum_all_a(r, q);
        for (i64 aa = 1; aa <= q; ++aa)
            if (std::gcd(aa, q) == 1) one(aa, all[std::size_t(aa == q ? q : aa)]);
    } else {
        one(a, gauss_sum(r, a, b, q));
    }
    emit(g, json{{"r", r}, {"q", q}, {"b", b}, {"sums", rows}}, txt);
    return 0;
}

int run_arcs(const Global& g, double X, double theta, int r) {
    auto part = dissect(X, theta);
    json arcs = json::array();
    std::string txt = "X = " + fmt(X) + ", theta = " + fmt(theta) + ": P = " + fmt(part.P) +
                      ", Q = " + fmt(part.Q) + ", " + std::to_string(part.arcs.size()) +
                      " major arcs, measure " + fmt(part.major_measure) +
                      (part.disjoint ? " (disjoint)" : " (OVERLAP)") + "\n";
    std::ofstream csv;
    bool with_csv = !g.csv_path.empty();
    if (with_csv) {
        csv = open_csv(g.csv_path);
        csv << "q,a,beta,re,im,abs,bound_ratio\n";
    }
    for (const auto& arc : part.arcs) {
        auto tv = t_sum_arc(r, arc.a, arc.q, 0.0, X);
        double resid = major_arc_residual(r, arc.a, arc.q, 0.0, X);
        double ratio = resid / std::sqrt(double(arc.q));
        arcs.push_back({{"q", arc.q}, {"a", arc.a}, {"center", arc.center},
                        {"halfwidth", arc.halfwidth}, {"residual", resid}});
        txt += "  a/q = " + std::to_string(arc.a) + "/" + std::to_string(arc.q) +
               " center " + fmt(arc.center) + " halfwidth " + fmt(arc.halfwidth) +
               " residual " + fmt(resid) + "\n";
        if (with_csv)
            csv << arc.q << "," << arc.a << "," << fmt(arc.center) << "," << fmt(tv.real()) << ","
                << fmt(tv.imag()) << "," << fmt(std::abs(tv)) << "," << fmt(ratio) << "\n";
    }
    json j{{"X", X}, {"theta", theta}, {"P", part.P}, {"Q", part.Q},
           {"major_measure", part.major_measure}, {"minor_measure", part.minor_measure},
           {"disjoint", part.disjoint}, {"arcs", arcs}};
    emit(g, j, txt);
    return 0;
}

int run_scan(const Global& g, int r, double X, double theta, int samples) {
    auto rows = weyl_scan(r, X, theta, samples, g.seed);
    json jr = json::array();
    double worst = 0.0;
    std::ofstream csv;
    bool with_csv = !g.csv_path.empty();
    if (with_csv) {
        csv = open_csv(g.csv_path);
        csv << "q,a,beta,re,im,abs,bound_ratio\n";
    }
    std::string txt;
    for (const auto& row : rows) {
        worst = std::max(worst, row.ratio);
        jr.push_back({{"alpha", row.alpha}, {"abs_t", row.abs_t},
                      {"envelope", row.envelope}, {"ratio", row.ratio}});
        if (with_csv)
            csv << "0,0," << fmt(row.alpha) << ",,," << fmt(row.abs_t) << "," << fmt(row.ratio) << "\n";
    }
    txt = "minor-arc scan r=" + std::to_string(r) + " X=" + fmt(X) + " theta=" + fmt(theta) + ": " +
          std::to_string(rows.size()) + " samples, worst |T|/envelope = " + fmt(worst) + "\n";
    emit(g, json{{"r", r}, {"X", X}, {"theta", theta}, {"worst_ratio", worst}, {"samples", jr}}, txt);
    return 0;
}

int run_coeff(const Global& g, int k, i64 q, i64 q_max, int ell) {
    ExtractConfig cfg;
    cfg.ell = ell;
    cfg.sieve = g.sieve();
    CoeffProvider prov(k, std::max(q, q_max), cfg);
    json jq = json::array();
    std::string txt;
    std::ofstream csv;
    bool with_csv = !g.csv_path.empty();
    if (with_csv) {
        csv = open_csv(g.csv_path);
        csv << "q,j,re,im,insignificant\n";
    }
    i64 q_lo = q_max ? 1 : q, q_hi = q_max ? q_max : q;
    for (i64 qq = q_lo; qq <= q_hi; ++qq) {
        const auto& est = prov.at(qq);
        json vals = json::array();
        txt += "q=" + std::to_string(qq) + ":";
        for (std::size_t j = 0; j < est.values.size(); ++j) {
            vals.push_back({{"j", j}, {"re", est.values[j].real()}, {"im", est.values[j].imag()},
                            {"insignificant", bool(est.insignificant[j])}});
            txt += "  A_" + std::to_string(j) + " = " + fmt(est.values[j].real()) +
                   (est.insignificant[j] ? "~" : "");
            if (with_csv)
                csv << qq << "," << j << "," << fmt(est.values[j].real()) << ","
                    << fmt(est.values[j].imag()) << "," << int(est.insignificant[j]) << "\n";
        }
        txt += "  (residual " + fmt(est.residual) + ", spread " + fmt(est.a_spread) + ")\n";
        jq.push_back({{"q", qq}, {"coefficients", vals},
                      {"residual", est.residual}, {"a_spread", est.a_spread}});
    }
    emit(g, json{{"k", k}, {"ell", ell}, {"table", jq}}, txt);
    return 0;
}

int run_sseries(const Global& g, int k, int r, int s, int ell, int j, i64 q_max) {
    ExtractConfig cfg;
    cfg.ell = ell;
    cfg.sieve = g.sieve();
    CoeffProvider prov(k, q_max, cfg);
    json out = json::array();
    std::string txt;
    int j_lo = j < 0 ? 0 : j, j_hi = j < 0 ? k - 1 : j;
    for (int jj = j_lo; jj <= j_hi; ++jj) {
        auto res = singular_series(k, r, s, ell, jj, prov, q_max);
        out.push_back({{"j", jj}, {"value", res.value}, {"tail_estimate", res.tail_estimate},
                       {"imag_leakage", res.imag_leakage}, {"q_max", q_max}});
        txt += "S_" + std::to_string(jj) + " = " + fmt(res.value) + "  (tail <= " +
               fmt(res.tail_estimate) + ", imag leakage " + fmt(res.imag_leakage) + ")\n";
    }
    emit(g, json{{"k", k}, {"r", r}, {"s", s}, {"l", ell}, {"series", out}}, txt);
    return 0;
}

int run_sintegral(const Global& g, int r, int s, int ell, int i, const std::string& method,
                  u64 samples, double beta_max) {
    json out = json::array();
    std::string txt;
    for (int ii = i < 0 ? 0 : i, hi = i < 0 ? 2 : i; ii <= hi; ++ii) {
        json row{{"i", ii}};
        txt += "J_" + std::to_string(ii) + ":";
        if (method != "cube") {
            auto res = singular_integral_fourier(r, s, ell, ii, beta_max);
            row["fourier"] = {{"value", res.value}, {"tail_estimate", res.tail_estimate},
                              {"quad_error", res.quad_error}, {"beta_max", res.cutoff}};
            txt += "  fourier " + fmt(res.value) + " (tail <= " + fmt(res.tail_estimate) + ")";
        }
        if (method != "fourier") {
            auto res = singular_integral_cube(r, s, ell, ii, samples, g.seed);
            row["cube"] = {{"value", res.value}, {"stderr", res.stderr_est},
                           {"samples", u64(res.cutoff)}};
            txt += "  cube " + fmt(res.value) + " +- " + fmt(res.stderr_est);
        }
        txt += "\n";
        out.push_back(row);
    }
    emit(g, json{{"r", r}, {"s", s}, {"l", ell}, {"integrals", out}}, txt);
    return 0;
}

json delta_to_json(const DeltaReport& rep) {
    return {{"k", rep.k}, {"r", rep.r}, {"s", rep.s}, {"l", rep.ell},
            {"regime", regime_name(rep.regime)},
            {"ell_class", ell_class_name(rep.ell_class)},
            {"low_ratio_pair", rep.low_ratio_pair},
            {"theta_candidate", rep.theta_candidate.str()},
            {"theta_cap", rep.theta_cap.str()},
            {"theta_used", rep.theta_used.str()},
            {"slope", rep.slope.str()},
            {"delta_rational", rep.delta.str()},
            {"delta_decimal", rep.delta.to_double()},
            {"active_constraint", rep.active_constraint}};
}

int run_delta(const Global& g, int k, int r, int s, int ell, bool candidates) {
    auto rep = delta_report(k, r, s, ell);
    std::string txt = "k=" + std::to_string(k) + " r=" + std::to_string(r) + " s=" +
                      std::to_string(s) + " l=" + std::to_string(ell) + "\n  regime " +
                      regime_name(rep.regime) + ", " + ell_class_name(rep.ell_class) +
                      (rep.low_ratio_pair ? " (low-ratio pair)" : "") + "\n  theta = " +
                      rep.theta_used.str() + " (candidate " + rep.theta_candidate.str() +
                      ", cap " + rep.theta_cap.str() + ")\n  slope = " + rep.slope.str() +
                      "\n  delta = " + rep.delta.str() + " = " + fmt(rep.delta.to_double()) +
                      "  [" + rep.active_constraint + "]\n";
    json j = delta_to_json(rep);
    if (candidates) {
        json jc = json::array();
        txt += "  candidates:";
        for (const auto& c : theta_candidates(k, r, s, ell)) {
            jc.push_back({{"label", c.label}, {"value", c.value.str()}});
            txt += " " + c.label + "=" + c.value.str();
        }
        txt += "\n";
        j["candidates"] = jc;
    }
    emit(g, j, txt);
    return 0;
}

int run_moment(const Global& g, int r, int j, u64 N, u64 M) {
    u128 exact = hua_moment_exact(r, j, N);
    if (M == 0) M = 2 * (u64(1) << (j - 1)) * ipow_checked(N, r) + 1;
    double quad = hua_moment_quadrature(r, j, N, M);
    double rel = std::abs(quad - static_cast<double>(exact)) / static_cast<double>(exact);
    json out{{"r", r}, {"j", j}, {"N", N}, {"M", M}, {"exact", to_string(exact)},
             {"quadrature", quad}, {"rel_gap", rel}};
    emit(g, out,
         "moment 2^" + std::to_string(j) + " of |T_" + std::to_string(r) + "| at N=" +
             std::to_string(N) + ": exact = " + to_string(exact) + ", quadrature(M=" +
             std::to_string(M) + ") = " + fmt(quad) + ", rel gap = " + fmt(rel) + "\n");
    return 0;
}

int run_parseval(const Global& g, int k, int ell, double X, u64 M) {
    u64 L = u64((ell + 1) * X);
    if (M == 0) M = 4 * L;
    auto table = sieve_tau_k(k, 1, std::max<u64>(L, 2), g.sieve());
    auto res = parseval_check(k, ell, X, M, table);
    json out{{"k", k}, {"l", ell}, {"X", X}, {"M", res.M}, {"lhs", res.lhs},
             {"rhs", res.rhs}, {"rel_gap", res.rel_gap}};
    emit(g, out,
         "parseval k=" + std::to_string(k) + " l=" + std::to_string(ell) + " X=" + fmt(X) +
             ": mean |F|^2 = " + fmt(res.lhs) + ", sum tau^2 = " + fmt(res.rhs) +
             ", rel gap = " + fmt(res.rel_gap) + "\n");
    return 0;
}

int run_verify(const Global& g, int k, int r, int s, int ell, std::vector<double> grid, i64 q_max) {
    VerifyConfig cfg;
    cfg.grid = std::move(grid);
    cfg.q_max = q_max;
    cfg.sieve = g.sieve();
    cfg.extract.sieve = g.sieve();
    cfg.extract.ell = ell;
    auto rep = verify_model(k, r, s, ell, cfg);
    json jgrid = json::array();
    std::string txt = "verify k=" + std::to_string(k) + " r=" + std::to_string(r) + " s=" +
                      std::to_string(s) + " l=" + std::to_string(ell) + "\n  delta = " +
                      rep.delta.delta.str() + " (theta " + rep.delta.theta_used.str() + ")\n";
    for (const auto& row : rep.grid) {
        jgrid.push_back({{"X", row.X}, {"S", row.lhs}, {"M", row.main}, {"ratio", row.ratio}});
        txt += "  X = " + fmt(row.X) + "  S = " + fmt(row.lhs) + "  M = " + fmt(row.main) +
               "  ratio = " + fmt(row.ratio) + "\n";
    }
    txt += "  fitted decay of |ratio-1|: X^" + fmt(rep.fitted_decay) +
           (rep.gap_monotone ? " (monotone)" : " (not monotone)") + "\n";
    json jhua = json::array();
    for (const auto& h : rep.hua) {
        jhua.push_back({{"r", h.r}, {"j", h.j}, {"N", h.N}, {"exact", h.exact},
                        {"quadrature", h.quadrature}, {"rel_gap", h.rel_gap}});
        txt += "  hua r=" + std::to_string(h.r) + " j=" + std::to_string(h.j) +
               " rel gap = " + fmt(h.rel_gap) + "\n";
    }
    txt += "  parseval rel gap = " + fmt(rep.parseval_gap) + "\n";
    json out{{"version", "1"},
             {"params", {{"k", k}, {"r", r}, {"s", s}, {"l", ell}}},
             {"delta", {{"regime", regime_name(rep.delta.regime)},
                        {"theta_used", rep.delta.theta_used.str()},
                        {"delta_rational", rep.delta.delta.str()},
                        {"delta_decimal", rep.delta.delta.to_double()}}},
             {"grid", jgrid},
             {"checks", {{"parseval_gap", rep.parseval_gap}, {"hua", jhua}}},
             {"fitted_decay", rep.fitted_decay},
             {"gap_monotone", rep.gap_monotone}};
    if (!g.csv_path.empty()) {
        auto os = open_csv(g.csv_path);
        os << "X,S,M,ratio\n";
        for (const auto& row : rep.grid)
            os << fmt(row.X) << "," << fmt(row.lhs) << "," << fmt(row.main) << ","
               << fmt(row.ratio) << "\n";
    }
    emit(g, out, txt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale checks for mixed-power divisor sums"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json_out, "emit a JSON report on stdout");
    app.add_option("--csv", g.csv_path, "write tabular rows to this path");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", g.seed, "seed for sampling subcommands");
    app.add_option("--budget-mb", g.budget_mb, "memory budget for sieve tables");

    int k = 2, r = 2, s = 2, ell = 2, j = -1, i = -1, samples = 64;
    i64 q = 1, a = 1, b = 0, q_max = 0, sser_q_max = 40, ver_q_max = 100;
    u64 lo = 1, hi = 1000, N = 8, M = 0, point = 0, mc_samples = 4000000;
    double X = 1e4, theta = 0.2, beta_max = 0.0;
    std::string dump, load, method = "both";
    std::vector<double> grid;
    bool sweep = false, candidates = false;

    auto* c_tau = app.add_subcommand("tau", "sieve tau_k and report partial sums");
    c_tau->add_option("-k", k, "divisor order")->required();
    c_tau->add_option("--lo", lo, "window start");
    c_tau->add_option("--hi", hi, "window end");
    c_tau->add_option("-n,--point", point, "single evaluation instead of a window");
    c_tau->add_option("--dump", dump, "write the table as a binary dump");
    c_tau->add_option("--load", load, "read a binary dump instead of sieving");

    auto* c_gauss = app.add_subcommand("gauss", "complete power Gauss sums");
    c_gauss->add_option("-r", r, "power")->required();
    c_gauss->add_option("-q", q, "modulus")->required();
    c_gauss->add_option("-a", a, "numerator");
    c_gauss->add_option("-b", b, "linear twist");
    c_gauss->add_flag("--all", sweep, "sweep all coprime a");

    auto* c_arcs = app.add_subcommand("arcs", "Farey dissection and major-arc residuals");
    c_arcs->add_option("-X", X, "scale")->required();
    c_arcs->add_option("--theta", theta, "P = X^theta");
    c_arcs->add_option("-r", r, "power for the residual column");

    auto* c_scan = app.add_subcommand("scan", "minor-arc Weyl envelope scan");
    c_scan->add_option("-r", r, "power")->required();
    c_scan->add_option("-X", X, "scale")->required();
    c_scan->add_option("--theta", theta, "P = X^theta");
    c_scan->add_option("--samples", samples, "sample count");

    auto* c_coeff = app.add_subcommand("coeff", "extract log-moment coefficients A_j(q)");
    c_coeff->add_option("-k", k, "divisor order")->required();
    c_coeff->add_option("-q", q, "single modulus");
    c_coeff->add_option("--q-max", q_max, "extract all q up to this");
    c_coeff->add_option("-l", ell, "window multiplier (ell)");

    auto* c_sser = app.add_subcommand("sseries", "truncated singular series");
    c_sser->add_option("-k", k)->required();
    c_sser->add_option("-r", r)->required();
    c_sser->add_option("-s", s)->required();
    c_sser->add_option("-l", ell)->required();
    c_sser->add_option("-j", j, "single log power (default: all 0..k-1)");
    c_sser->add_option("--q-max", sser_q_max, "truncation point");

    auto* c_sint = app.add_subcommand("sintegral", "singular integral, two evaluators");
    c_sint->add_option("-r", r)->required();
    c_sint->add_option("-s", s)->required();
    c_sint->add_option("-l", ell)->required();
    c_sint->add_option("-i", i, "single log power (default: 0..2)");
    c_sint->add_option("--method", method, "fourier | cube | both")
        ->check(CLI::IsMember({"fourier", "cube", "both"}));
    c_sint->add_option("--samples", mc_samples, "cube sample count");
    c_sint->add_option("--beta-max", beta_max, "fixed truncation instead of autostop");

    auto* c_delta = app.add_subcommand("delta", "exponent case analysis, exact rationals");
    c_delta->add_option("-k", k)->required();
    c_delta->add_option("-r", r)->required();
    c_delta->add_option("-s", s)->required();
    c_delta->add_option("-l", ell)->required();
    c_delta->add_flag("--candidates", candidates, "list every closed-form theta");

    auto* c_mom = app.add_subcommand("moment", "even moments of |T_r|: exact vs quadrature");
    c_mom->add_option("-r", r)->required();
    c_mom->add_option("-j", j, "moment 2^j")->required();
    c_mom->add_option("-N", N, "variable range")->required();
    c_mom->add_option("-M", M, "quadrature points (default: 2 deg + 1)");

    auto* c_par = app.add_subcommand("parseval", "mean square of F vs sum of tau^2");
    c_par->add_option("-k", k)->required();
    c_par->add_option("-l", ell)->required();
    c_par->add_option("-X", X)->required();
    c_par->add_option("-M", M, "quadrature points (default: 4 (l+1) X)");

    auto* c_ver = app.add_subcommand("verify", "end-to-end: lhs sums vs predicted main term");
    c_ver->add_option("-k", k)->required();
    c_ver->add_option("-r", r)->required();
    c_ver->add_option("-s", s)->required();
    c_ver->add_option("-l", ell)->required();
    c_ver->add_option("--grid", grid, "X values (default: 1e4..1e6)");
    c_ver->add_option("--q-max", ver_q_max, "series truncation");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_tau)) return run_tau(g, k, lo, hi, dump, load, point);
        if (app.got_subcommand(c_gauss)) return run_gauss(g, r, q, a, b, sweep);
        if (app.got_subcommand(c_arcs)) return run_arcs(g, X, theta, r);
        if (app.got_subcommand(c_scan)) return run_scan(g, r, X, theta, samples);
        if (app.got_subcommand(c_coeff)) return run_coeff(g, k, q, q_max, ell);
        if (app.got_subcommand(c_sser)) return run_sseries(g, k, r, s, ell, j, sser_q_max);
        if (app.got_subcommand(c_sint)) return run_sintegral(g, r, s, ell, i, method, mc_samples, beta_max);
        if (app.got_subcommand(c_delta)) return run_delta(g, k, r, s, ell, candidates);
        if (app.got_subcommand(c_mom)) return run_moment(g, r, j, N, M);
        if (app.got_subcommand(c_par)) return run_parseval(g, k, ell, X, M);
        if (app.got_subcommand(c_ver)) return run_verify(g, k, r, s, ell, grid, ver_q_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nonconvergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
