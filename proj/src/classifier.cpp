#include "flipforge/classifier.hpp"

#include <algorithm>

#include "flipforge/util.hpp"

namespace flipforge {

std::string to_string(Feasibility f) {
    switch (f) {
        case Feasibility::feasible: return "feasible";
        case Feasibility::infeasible: return "infeasible";
        default: return "unknown";
    }
}

nlohmann::json SequenceVerdict::to_json() const {
    nlohmann::json rules_json = nlohmann::json::array();
    for (const auto& r : rules) rules_json.push_back({{"rule", r.rule}, {"detail", r.detail}});
    nlohmann::json doc{{"sequence", sequence},
                       {"status", flipforge::to_string(status)},
                       {"rules", rules_json}};
    if (recipe) {
        doc["recipe"] = {{"id", recipe->id}, {"params", recipe->params}};
        if (recipe->predicted_order) doc["recipe"]["predicted_order"] = *recipe->predicted_order;
    }
    if (infeasible_rule) doc["infeasible_rule"] = *infeasible_rule;
    if (order_bound) doc["order_bound"] = *order_bound;
    return doc;
}

long long h_upper_bound(int b, int r) {
    if (!(3 <= b && b < r && r <= binom2(b + 1) - 1))
        throw InputError("h_upper_bound: need 3 <= b < r <= C(b+1,2)-1");
    long long y = (5 + isqrt_floor(1 + 8ll * (r - b))) / 2;
    return 2 * (r + b + 1 - y) * y;
}

std::optional<long long> h_recorded_bound(int b, int r) {
    if (b == 3 && r == 4) return 16;  // known 16-vertex witness
    return std::nullopt;
}

Feasibility weak_feasibility(int b, int r) {
    if (b < 1 || b >= r) throw InputError("weak_feasibility: need 1 <= b < r");
    if (b == 1) return Feasibility::infeasible;
    if (b == 2 && r == 3) return Feasibility::feasible;
    return Feasibility::unknown;
}

long long cayley_b_of_t_bound(int t) {
    if (t < 2) throw InputError("cayley_b_of_t_bound: t must be >= 2");
    return (1ll << (t + 1)) - 1;
}

namespace {

struct Candidate {
    RecipeRef recipe;
    // candidates without a computable order sort last
    bool operator<(const Candidate& other) const {
        if (recipe.predicted_order && other.recipe.predicted_order)
            return *recipe.predicted_order < *other.recipe.predicted_order;
        return recipe.predicted_order.has_value() > other.recipe.predicted_order.has_value();
    }
};

long long interval_subsequence_order(long long b, const std::vector<long long>& seq) {
    long long side = 0;
    for (long long d : seq) side += 2 * (d - b);
    long long order = std::max(1ll, 2 * side);
    for (long long d : seq) order *= b + 1 - (d - b);
    return order;
}

// gap-recipe parameters (n, t) reproducing the sequence exactly, if any
std::optional<std::pair<long long, long long>> match_gap_pattern(
    const std::vector<long long>& seq) {
    const int k = static_cast<int>(seq.size());
    if (k < 4) return std::nullopt;
    long long n_min = 1;
    while (4 * (k - 3) * n_min <= static_cast<long long>(k) * (k - 1) * (k - 1)) ++n_min;
    long long twice_n = seq[0] + 1 + binom2(k - 1);
    if (twice_n % 2 != 0 || twice_n / 2 != n_min) return std::nullopt;
    long long n = n_min;
    long long numerator = seq[1] - (k - 2);
    if (numerator <= 0 || numerator % (2 * n) != 0) return std::nullopt;
    long long t = numerator / (2 * n);
    long long t_min = (4 * n + k - 2) / (k - 1);
    if (t < t_min) return std::nullopt;
    for (int i = 2; i <= k; ++i)
        if (seq[i - 1] != (k - i) + 2 * n * (t + i - 2)) return std::nullopt;
    return std::make_pair(n, t);
}

}  // namespace

SequenceVerdict classify(const std::vector<long long>& seq) {
    if (seq.size() < 2) throw InputError("classify: need at least 2 colours");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 1) throw InputError("classify: degrees must be positive");
        if (i > 0 && seq[i] <= seq[i - 1])
            throw InputError("classify: degrees must be strictly increasing");
    }
    SequenceVerdict verdict;
    verdict.sequence = seq;
    const int k = static_cast<int>(seq.size());
    const long long a1 = seq.front(), ak = seq.back();

    // hard refutations
    if (k == 2) {
        if (a1 < 3) {
            verdict.status = Feasibility::infeasible;
            verdict.infeasible_rule = "smallest-degree-too-small";
            verdict.rules.push_back({"smallest-degree-too-small",
                                     "(1,r)- and (2,r)-flip graphs do not exist"});
            return verdict;
        }
        if (ak > binom2(a1 + 1) - 1) {
            verdict.status = Feasibility::infeasible;
            verdict.infeasible_rule = "largest-degree-exceeds-triangle-bound";
            verdict.rules.push_back(
                {"largest-degree-exceeds-triangle-bound",
                 "r=" + std::to_string(ak) + " >= C(b+1,2) = " +
                     std::to_string(binom2(a1 + 1))});
            return verdict;
        }
    }
    if (k == 3 && seq[2] >= 2 * a1 * a1) {
        verdict.status = Feasibility::infeasible;
        verdict.infeasible_rule = "triple-quadratic-gap";
        verdict.rules.push_back({"triple-quadratic-gap",
                                 "a3=" + std::to_string(seq[2]) + " >= 2*a1^2 = " +
                                     std::to_string(2 * a1 * a1)});
        return verdict;
    }

    std::vector<Candidate> candidates;

    if (k == 2) {
        verdict.rules.push_back({"two-colour-range",
                                 "3 <= b < r <= C(b+1,2)-1 characterizes two-colour "
                                 "flip sequences"});
        verdict.order_bound = h_upper_bound(static_cast<int>(a1), static_cast<int>(ak));
        RecipeRef recipe{"rb-opt", {{"b", a1}, {"r", ak}}, *verdict.order_bound};
        candidates.push_back({recipe});
    }

    if (a1 >= 3 && ak <= 2 * a1 - 2) {
        verdict.rules.push_back({"short-interval",
                                 "a_k=" + std::to_string(ak) + " <= 2*a1-2 = " +
                                     std::to_string(2 * a1 - 2)});
        RecipeRef recipe{"interval-subsequence", {{"b", a1}, {"degrees", seq}},
                         interval_subsequence_order(a1, seq)};
        candidates.push_back({recipe});
    }

    if (a1 >= 3) {
        long long wide_top = a1 + floor_div(quadratic_margin_floor(a1), 4);
        if (ak <= wide_top) {
            verdict.rules.push_back({"wide-interval",
                                     "a_k=" + std::to_string(ak) +
                                         " <= a1 + floor((a1^2-10*a1^(3/2))/4) = " +
                                         std::to_string(wide_top)});
            long long m = floor_div(quadratic_margin_floor(a1), 2);
            RecipeRef recipe{"constant-chain", {{"degrees", seq}, {"M", m}}, std::nullopt};
            candidates.push_back({recipe});
        }
    }

    if (k == 3) {
        const long long a2 = seq[1], a3 = seq[2];
        if (a2 >= 3 && a3 <= binom2(a2 + 1) - 1) {
            for (long long x = a2; x >= 0; --x) {
                long long e2 = x + binom2(a2 + 1 - x);
                if (e2 > a3 && e2 < binom2(a1 + 1)) {
                    verdict.rules.push_back(
                        {"triple-bipartite-search",
                         "x=" + std::to_string(x) + " gives a3 < x+C(a2+1-x,2)=" +
                             std::to_string(e2) + " < C(a1+1,2)=" +
                             std::to_string(binom2(a1 + 1))});
                    RecipeRef recipe{"three",
                                     {{"a1", a1}, {"a2", a2}, {"a3", a3}},
                                     2 * (a3 + x) * (a2 + 1 - x) * (a1 + 1)};
                    candidates.push_back({recipe});
                    break;
                }
            }
        }
    }

    if (k >= 4) {
        if (auto nt = match_gap_pattern(seq)) {
            verdict.rules.push_back({"gap-pattern",
                                     "matches the unbounded-gap shape with n=" +
                                         std::to_string(nt->first) +
                                         ", t=" + std::to_string(nt->second)});
            long long rho = (k - 1) * (2 * nt->second + k - 2) / 2;
            RecipeRef recipe{"gap", {{"k", k}, {"t", nt->second}}, 4 * nt->first * rho};
            candidates.push_back({recipe});
        }
    }

    if (!candidates.empty()) {
        verdict.status = Feasibility::feasible;
        verdict.recipe = std::min_element(candidates.begin(), candidates.end())->recipe;
    } else {
        verdict.status = Feasibility::unknown;
    }
    return verdict;
}

Construction run_recipe(const SequenceVerdict& verdict) {
    if (verdict.status != Feasibility::feasible || !verdict.recipe)
        throw InputError("run_recipe: verdict carries no recipe");
    const RecipeRef& r = *verdict.recipe;
    const nlohmann::json& p = r.params;
    if (r.id == "rb-opt")
        return construct_rb_optimized(p["b"].get<int>(), p["r"].get<int>());
    if (r.id == "interval-subsequence")
        return construct_interval_subsequence(p["b"].get<int>(),
                                              p["degrees"].get<std::vector<long long>>());
    if (r.id == "three")
        return construct_3flip(p["a1"].get<int>(), p["a2"].get<int>(), p["a3"].get<int>());
    if (r.id == "gap") return construct_gap(p["k"].get<int>(), p["t"].get<long long>());
    if (r.id == "constant-chain")
        return construct_constant_chain(p["degrees"].get<std::vector<long long>>(),
                                        p["M"].get<long long>());
    throw InputError("run_recipe: unknown recipe id " + r.id);
}

}  // namespace flipforge
