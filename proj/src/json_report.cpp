#include "pratio/json_report.hpp"

#include <cmath>

namespace pratio {

namespace {

Json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

template <class T>
Json optional(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_floating_point_v<T>)
        return number(*v);
    else
        return *v;
}

Json pair_json(const std::optional<std::pair<double, double>>& p) {
    if (!p) return nullptr;
    return Json::array({number(p->first), number(p->second)});
}

}  // namespace

Json to_json(const KiteSpec& spec) {
    Json j;
    j["r"] = spec.r;
    j["s"] = spec.s;
    j["n"] = spec.order();
    return j;
}

Json to_json(const PerronData& pd, bool include_vector) {
    Json j;
    j["lambda1"] = number(pd.lambda1);
    j["gamma"] = number(pd.gamma());
    j["log_gamma"] = number(pd.log_gamma);
    j["sigma"] = optional(pd.sigma);
    j["k_minus_1"] = pd.k_minus_1;
    j["argmin"] = pd.argmin;
    j["argmax"] = pd.argmax;
    j["min_max_path"] = pd.min_max_path;
    j["norm2_squared"] = number(pd.norm2_squared());
    j["relative_residual"] = number(pd.relative_residual);
    j["iterations"] = pd.iterations;
    if (include_vector) {
        Json x = Json::array();
        for (double v : pd.x) x.push_back(number(v));
        j["x"] = std::move(x);
        Json lx = Json::array();
        for (double v : pd.log_x) lx.push_back(number(v));
        j["log_x"] = std::move(lx);
    }
    return j;
}

Json to_json(const BoundReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["log_gamma"] = number(rep.log_gamma);
    j["schneider"] = optional(rep.schneider);
    j["cg_distance"] = optional(rep.cg_distance);
    Json l21 = Json::array();
    for (double v : rep.lemma21) l21.push_back(number(v));
    j["lemma21"] = std::move(l21);
    j["lemma22"] = pair_json(rep.lemma22);
    j["k_window"] = pair_json(rep.k_window);
    Json slacks;
    for (const auto& s : rep.slacks) slacks[s.name] = number(s.value);
    j["slacks"] = slacks.is_null() ? Json::object() : std::move(slacks);
    return j;
}

Json to_json(const LemmaCheckOutcome& o) {
    Json j;
    j["lemma"] = o.lemma;
    j["status"] = to_string(o.status);
    j["relation"] = to_string(o.relation);
    if (o.status != CheckStatus::not_applicable) {
        j["lhs"] = number(o.lhs);
        j["rhs"] = number(o.rhs);
        if (o.relation == Relation::between) j["rhs_upper"] = number(o.rhs_upper);
    }
    Json ctx;
    ctx["n"] = o.context.n;
    ctx["k"] = o.context.k;
    ctx["lambda1"] = number(o.context.lambda1);
    ctx["norm2_squared"] = number(o.context.norm2_squared);
    ctx["x_k_minus_1"] = optional(o.context.x_k_minus_1);
    ctx["degree_k_minus_1"] = optional(o.context.degree_k_minus_1);
    j["context"] = std::move(ctx);
    return j;
}

Json to_json(const KiteSolution& sol) {
    Json j;
    j["spec"] = to_json(sol.spec);
    j["lambda1"] = number(sol.lambda1);
    j["sigma"] = optional(sol.sigma);
    j["log_gamma"] = number(sol.log_gamma);
    j["gamma"] = optional(sol.gamma());
    Json profile = Json::array();
    for (double v : sol.path_profile) profile.push_back(number(v));
    j["path_profile"] = std::move(profile);
    return j;
}

Json to_json(const VerificationReport& rep, bool include_wall_time) {
    Json j;
    j["n"] = rep.n;
    j["graphs_scanned"] = rep.graphs_scanned;
    j["disconnected_skipped"] = rep.disconnected_skipped;
    j["max_log_gamma"] = number(rep.max_log_gamma);
    j["max_gamma"] = number(std::exp(rep.max_log_gamma));
    j["argmax_graph"] = rep.argmax_graph;
    j["is_kite"] = rep.is_kite;
    j["matched_spec"] = rep.matched_spec ? to_json(*rep.matched_spec) : Json(nullptr);
    j["runner_up_log_gamma"] = optional(rep.runner_up_log_gamma);
    j["best_kite_log_gamma"] = optional(rep.best_kite_log_gamma);
    Json top = Json::array();
    for (const auto& t : rep.top) {
        Json e;
        e["graph6"] = t.graph6;
        e["log_gamma"] = number(t.log_gamma);
        e["kite"] = t.kite ? to_json(*t.kite) : Json(nullptr);
        top.push_back(std::move(e));
    }
    j["top"] = std::move(top);
    if (include_wall_time) j["wall_time_seconds"] = rep.wall_time_seconds;
    return j;
}

Json to_json(const Certificate& c) {
    Json j;
    j["target"] = c.target;
    j["n"] = c.n;
    j["verdict"] = to_string(c.verdict);
    j["margin_lo"] = number(c.margin_lo);
    j["margin_hi"] = number(c.margin_hi);
    return j;
}

}  // namespace pratio
