#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pratio/bounds.hpp"
#include "pratio/certifier.hpp"
#include "pratio/enumerate.hpp"
#include "pratio/graph6.hpp"
#include "pratio/json_report.hpp"
#include "pratio/kite.hpp"
#include "pratio/spectral.hpp"

namespace pratio::cli {

namespace {

constexpr int kVectorPrintMaxOrder = 200;
constexpr int kKiteCrossCheckMaxOrder = 3000;
constexpr double kKiteLambdaAgreement = 1e-9;
constexpr double kKiteLogGammaAgreement = 1e-8;

struct AnalyzeArgs {
    std::string graph6;
    std::string edges;
    int n = 0;
    double tol = kDefaultPerronTol;
    long max_iter = kDefaultPerronMaxIter;
};

struct KiteArgs {
    int r = 0;
    int s = 0;
    int best = 0;
    double tol = kDefaultKiteTol;
    int threads = 1;
};

struct VerifyArgs {
    int n = 0;
    std::string graph6_file;
    bool no_prune = false;
    int threads = 1;
    int top = 10;
    std::string csv;
};

struct CertifyArgs {
    std::string target;
    long long n = 0;
    std::string n_range;
    long long k = 0;
    long long j = 0;
    int threads = 1;
};

Graph parse_edge_list(const std::string& text, int n) {
    std::vector<Edge> edges;
    int max_vertex = -1;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge '" + item + "'");
        std::size_t used = 0;
        const std::string a = item.substr(0, dash);
        const std::string b = item.substr(dash + 1);
        const int u = std::stoi(a, &used);
        const int v = std::stoi(b);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (n <= 0) n = max_vertex + 1;
    return build_graph(std::max(n, 1), edges);
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    if (a.graph6.empty() == a.edges.empty())
        throw std::invalid_argument("analyze needs exactly one of --graph6 or --edges");
    const Graph g = a.graph6.empty() ? parse_edge_list(a.edges, a.n) : parse_graph6(a.graph6);
    if (!is_connected(g)) throw std::invalid_argument("input graph is disconnected");
    const PerronData pd = perron(g, a.tol, a.max_iter);

    Json j;
    Json input;
    input["n"] = g.order();
    input["m"] = g.size();
    input["graph6"] = g.order() <= kGraph6MaxOrder ? Json(encode_graph6(g)) : Json(nullptr);
    j["input"] = std::move(input);
    j["perron"] = to_json(pd, g.order() <= kVectorPrintMaxOrder);
    j["bounds"] = to_json(bound_report(g, pd));
    Json checks = Json::array();
    for (const auto& o : lemma_checks(g, pd)) checks.push_back(to_json(o));
    j["lemma_checks"] = std::move(checks);
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_kite(const KiteArgs& a, std::ostream& out) {
    const bool by_spec = a.r > 0 || a.s > 0;
    if (by_spec == (a.best > 0))
        throw std::invalid_argument("kite needs either --r/--s or --best");
    KiteSolution sol;
    if (by_spec) {
        if (a.r < 1 || a.s < 3) throw std::invalid_argument("kite needs r >= 1 and s >= 3");
        sol = solve_kite({a.r, a.s}, a.tol);
    } else {
        sol = best_kite(a.best, a.threads, a.tol);
    }

    Json j;
    j["solution"] = to_json(sol);
    const int n = sol.spec.order();
    bool agrees = true;
    if (n <= kKiteCrossCheckMaxOrder) {
        const PerronData pd = perron(kite(sol.spec));
        const double dl = std::abs(pd.lambda1 - sol.lambda1);
        const double dg = sol.log_gamma == 0.0
                              ? std::abs(pd.log_gamma)
                              : std::abs(pd.log_gamma - sol.log_gamma) / sol.log_gamma;
        agrees = dl <= kKiteLambdaAgreement && dg <= kKiteLogGammaAgreement;
        Json check;
        check["spectral_lambda1"] = pd.lambda1;
        check["spectral_log_gamma"] = pd.log_gamma;
        check["lambda1_abs_diff"] = dl;
        check["log_gamma_rel_diff"] = dg;
        check["agrees"] = agrees;
        j["spectral_check"] = std::move(check);
    } else {
        j["spectral_check"] = nullptr;
    }
    if (n >= kLemmaCheckMinOrder) {
        const auto [lo, hi] = k_window(n);
        Json w;
        w["lower"] = lo;
        w["upper"] = hi;
        w["k"] = sol.spec.r;
        w["inside"] = lo < sol.spec.r && sol.spec.r < hi;
        j["k_window"] = std::move(w);
    } else {
        j["k_window"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return agrees ? kExitOk : kExitVerdictFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.prune = !a.no_prune;
    opts.threads = a.threads;
    opts.top_k = a.top;
    const VerificationReport rep = a.graph6_file.empty()
                                       ? verify_conjecture(a.n, opts)
                                       : verify_conjecture_file(a.n, a.graph6_file, opts);
    out << to_json(rep, false).dump(2) << '\n';
    err << "wall time: " << rep.wall_time_seconds << " s\n";
    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) throw std::runtime_error("cannot write '" + a.csv + "'");
        csv << "graph6,log_gamma\n" << std::setprecision(17);
        for (const auto& t : rep.top) csv << t.graph6 << ',' << t.log_gamma << '\n';
    }
    return rep.is_kite ? kExitOk : kExitVerdictFailed;
}

std::vector<long long> parse_range(const std::string& text) {
    std::stringstream ss(text);
    std::string lo, hi, count;
    if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, count))
        throw std::invalid_argument("--n-range expects LO:HI:COUNT");
    return log_spaced(std::stoll(lo), std::stoll(hi), std::stoi(count));
}

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Certificate> certs;
    int holds = 0, fails = 0, indeterminate = 0;
    if (a.target == "inequality5") {
        if (a.n <= 0) throw std::invalid_argument("inequality5 needs --n, --k and --j");
        certs.push_back(check_inequality5(a.n, a.k, a.j));
    } else {
        const CertTarget t = parse_cert_target(a.target);
        std::vector<long long> ns;
        if (!a.n_range.empty())
            ns = parse_range(a.n_range);
        else if (a.n > 0)
            ns = {a.n};
        const SweepSummary s = sweep(t, ns, a.threads);
        certs = s.certificates;
    }
    for (const auto& c : certs) {
        out << to_json(c).dump() << '\n';
        holds += c.verdict == Verdict::holds;
        fails += c.verdict == Verdict::fails;
        indeterminate += c.verdict == Verdict::indeterminate;
    }
    err << "holds: " << holds << ", fails: " << fails << ", indeterminate: " << indeterminate
        << '\n';
    return (fails == 0 && indeterminate == 0) ? kExitOk : kExitVerdictFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Principal eigenvector ratios, kite graphs and the bounds around them"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* sub_analyze = app.add_subcommand("analyze", "Perron data, bounds and lemma checks for one graph");
    sub_analyze->add_option("--graph6", analyze.graph6, "graph6 string");
    sub_analyze->add_option("--edges", analyze.edges, "edge list like \"0-1,1-2\"");
    sub_analyze->add_option("--n", analyze.n, "vertex count for --edges (default: max label + 1)");
    sub_analyze->add_option("--tol", analyze.tol, "relative eigen-equation tolerance")->capture_default_str();
    sub_analyze->add_option("--max-iter", analyze.max_iter, "power iteration cap")->capture_default_str();

    KiteArgs kargs;
    auto* sub_kite = app.add_subcommand("kite", "Analytic solution of P_r.K_s, or the best kite of order n");
    sub_kite->add_option("--r", kargs.r, "path order");
    sub_kite->add_option("--s", kargs.s, "clique order");
    sub_kite->add_option("--best", kargs.best, "order n; sweep r = 2..n-2");
    sub_kite->add_option("--tol", kargs.tol, "bisection width")->capture_default_str();
    sub_kite->add_option("--threads", kargs.threads, "worker threads for --best")->capture_default_str();

    VerifyArgs vargs;
    auto* sub_verify = app.add_subcommand("verify", "Exhaustive search for the graph of largest principal ratio");
    sub_verify->add_option("--n", vargs.n, "order")->required();
    sub_verify->add_option("--graph6-file", vargs.graph6_file, "graph6 corpus (default: built-in enumeration, n <= 7)");
    sub_verify->add_flag("--no-prune", vargs.no_prune, "solve every graph");
    sub_verify->add_option("--threads", vargs.threads, "worker threads")->capture_default_str();
    sub_verify->add_option("--top", vargs.top, "distinct leading values to keep")->capture_default_str();
    sub_verify->add_option("--csv", vargs.csv, "write (graph6, log_gamma) of the leaders");

    CertifyArgs cargs;
    auto* sub_certify = app.add_subcommand("certify", "Dual-precision certificates for the auxiliary inequalities");
    sub_certify->add_option("--target", cargs.target, "lemma23 | appendixA | appendixB | appendixC | inequality5")->required();
    sub_certify->add_option("--n", cargs.n, "order");
    sub_certify->add_option("--n-range", cargs.n_range, "LO:HI:COUNT, log-spaced");
    sub_certify->add_option("--k", cargs.k, "k for inequality5");
    sub_certify->add_option("--j", cargs.j, "j for inequality5");
    sub_certify->add_option("--threads", cargs.threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*sub_analyze) return cmd_analyze(analyze, out);
        if (*sub_kite) return cmd_kite(kargs, out);
        if (*sub_verify) return cmd_verify(vargs, out, err);
        if (*sub_certify) return cmd_certify(cargs, out, err);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pratio::cli
