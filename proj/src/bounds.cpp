#include "pratio/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace pratio {

namespace {

void require_lambda_above_two(double lambda1) {
    if (!(lambda1 > 2.0)) throw std::domain_error("bound needs lambda1 > 2");
}

CheckStatus verdict(bool ok) { return ok ? CheckStatus::holds : CheckStatus::fails; }

LemmaCheckOutcome make_outcome(std::string lemma, Relation rel, double lhs, double rhs,
                               const LemmaContext& ctx, double rhs_upper = 0.0) {
    LemmaCheckOutcome out;
    out.lemma = std::move(lemma);
    out.relation = rel;
    out.lhs = lhs;
    out.rhs = rhs;
    out.rhs_upper = rhs_upper;
    out.context = ctx;
    switch (rel) {
        case Relation::less: out.status = verdict(lhs < rhs); break;
        case Relation::greater: out.status = verdict(lhs > rhs); break;
        case Relation::between: out.status = verdict(rhs < lhs && lhs < rhs_upper); break;
        case Relation::equal: out.status = verdict(lhs == rhs); break;
    }
    return out;
}

LemmaCheckOutcome not_applicable(std::string lemma, Relation rel, const LemmaContext& ctx) {
    LemmaCheckOutcome out;
    out.lemma = std::move(lemma);
    out.relation = rel;
    out.status = CheckStatus::not_applicable;
    out.context = ctx;
    return out;
}

}  // namespace

double schneider_bound(const PerronData& pd, int n) {
    if (!(pd.lambda1 > 1.0)) throw std::domain_error("lambda power bound needs lambda1 > 1");
    return (n - 1) * std::log(pd.lambda1);
}

double cg_distance_bound(const PerronData& pd) {
    require_lambda_above_two(pd.lambda1);
    return log_phi(pd.lambda1, pd.k_minus_1 + 1);
}

double lemma21_bound(const PerronData& pd, std::span<const int> path, int j) {
    require_lambda_above_two(pd.lambda1);
    if (j < 1 || j > static_cast<int>(path.size()))
        throw std::invalid_argument("lemma21_bound: j out of range");
    return log_phi(pd.lambda1, j) - pd.log_x[path[j - 1]];
}

std::pair<double, double> lemma22_sandwich(double lambda1, long j) {
    require_lambda_above_two(lambda1);
    if (j < 2) throw std::invalid_argument("lemma22_sandwich needs j >= 2");
    const double steps = static_cast<double>(j - 2);
    const double log_l = std::log(lambda1);
    return {steps * std::log(lambda1 - 1.0 / (lambda1 - 1.0)) + log_l,
            steps * std::log(lambda1 - 1.0 / lambda1) + log_l};
}

std::pair<double, double> k_window(long n) {
    if (n < kLemmaCheckMinOrder) throw std::invalid_argument("k_window needs n >= 5000");
    const double nn = static_cast<double>(n);
    const double L = std::log(nn);
    return {nn - nn / L * (1.0 + 1.1 / std::sqrt(L)), nn - nn / L * (1.0 - 1.0 / L)};
}

BoundReport bound_report(const Graph& g, const PerronData& pd) {
    BoundReport rep;
    rep.n = g.order();
    rep.log_gamma = pd.log_gamma;
    const int k = pd.k();
    if (pd.lambda1 > 1.0) {
        rep.schneider = schneider_bound(pd, rep.n);
        rep.slacks.push_back({"schneider", *rep.schneider - pd.log_gamma});
    }
    if (pd.lambda1 > 2.0) {
        rep.cg_distance = cg_distance_bound(pd);
        rep.slacks.push_back({"cg_distance", *rep.cg_distance - pd.log_gamma});
        const double at_k = lemma21_bound(pd, pd.min_max_path, k);
        rep.slacks.push_back({"lemma21_j_eq_k", at_k - pd.log_gamma});
        if (k <= kLemma21ReportMaxPath)
            for (int j = 1; j <= k; ++j) rep.lemma21.push_back(lemma21_bound(pd, pd.min_max_path, j));
        if (k >= 2) {
            rep.lemma22 = lemma22_sandwich(pd.lambda1, k);
            rep.slacks.push_back({"lemma22_upper", rep.lemma22->second - pd.log_gamma});
        }
    }
    if (rep.n >= kLemmaCheckMinOrder) rep.k_window = k_window(rep.n);
    return rep;
}

std::vector<LemmaCheckOutcome> lemma_checks(const Graph& g, const PerronData& pd) {
    const int n = g.order();
    const int k = pd.k();
    const auto& path = pd.min_max_path;

    LemmaContext ctx;
    ctx.n = n;
    ctx.k = k;
    ctx.lambda1 = pd.lambda1;
    ctx.norm2_squared = pd.norm2_squared();
    if (k >= 2) {
        ctx.x_k_minus_1 = pd.x[path[k - 2]];
        ctx.degree_k_minus_1 = g.degree(path[k - 2]);
    }

    std::vector<LemmaCheckOutcome> out;

    // v1..v_{k-1} pendant, v_k adjacent to everything off the path.
    int violations = 0;
    std::vector<char> on_path(n, 0);
    for (int v : path) on_path[v] = 1;
    for (int i = 0; i + 1 < k; ++i) {
        const int want = (i == 0) ? 1 : 2;
        if (g.degree(path[i]) != want) ++violations;
    }
    const int vk = path.back();
    for (int v = 0; v < n; ++v)
        if (!on_path[v] && !g.adjacent(vk, v)) ++violations;
    out.push_back(make_outcome("3.1", Relation::equal, violations, 0.0, ctx));

    out.push_back(make_outcome("3.1-remark", Relation::less, pd.lambda1, n - k + 1.0, ctx));
    out.push_back(make_outcome("3.2", Relation::greater, pd.lambda1, static_cast<double>(n - k), ctx));

    const bool large = n >= kLemmaCheckMinOrder;
    if (large) {
        const auto [lo, hi] = k_window(n);
        out.push_back(make_outcome("3.3", Relation::between, k, lo, ctx, hi));
        out.push_back(make_outcome("3.4", Relation::between, ctx.norm2_squared, pd.lambda1, ctx,
                                   pd.lambda1 + 10.0 / 9.0));
        out.push_back(make_outcome("3.5", Relation::less, pd.lambda1, n - k + 0.6, ctx));
    } else {
        out.push_back(not_applicable("3.3", Relation::between, ctx));
        out.push_back(not_applicable("3.4", Relation::between, ctx));
        out.push_back(not_applicable("3.5", Relation::less, ctx));
    }
    if (large && ctx.x_k_minus_1)
        out.push_back(make_outcome("3.6", Relation::less, *ctx.x_k_minus_1,
                                   std::pow(static_cast<double>(n), -0.24), ctx));
    else
        out.push_back(not_applicable("3.6", Relation::less, ctx));
    if (ctx.degree_k_minus_1)
        out.push_back(make_outcome("3.7", Relation::equal, *ctx.degree_k_minus_1, 2.0, ctx));
    else
        out.push_back(not_applicable("3.7", Relation::equal, ctx));
    return out;
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(Relation r) {
    switch (r) {
        case Relation::less: return "<";
        case Relation::greater: return ">";
        case Relation::between: return "between";
        case Relation::equal: return "==";
    }
    return "?";
}

}  // namespace pratio
