#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flipforge/constructions.hpp"

namespace flipforge {

enum class Feasibility { feasible, infeasible, unknown };

std::string to_string(Feasibility f);

struct RuleFire {
    std::string rule;
    std::string detail;
};

struct RecipeRef {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    std::optional<long long> predicted_order;
};

// Classification of a candidate flip sequence: all firing rules are listed;
// when several feasible routes fire, the recipe with the smallest predicted
// order is selected.
struct SequenceVerdict {
    std::vector<long long> sequence;
    Feasibility status = Feasibility::unknown;
    std::vector<RuleFire> rules;
    std::optional<RecipeRef> recipe;          // when feasible
    std::optional<std::string> infeasible_rule;
    std::optional<long long> order_bound;     // constructive bound, two colours

    nlohmann::json to_json() const;
};

// Decides a strictly increasing positive sequence (k >= 2). Two colours are
// characterized exactly; three colours combine the quadratic necessary bound
// with two constructive routes; four or more colours combine the interval
// routes with the fixed-smallest-degree pattern.
SequenceVerdict classify(const std::vector<long long>& seq);

// Executes the recipe attached to a feasible verdict.
Construction run_recipe(const SequenceVerdict& verdict);

// Constructive order bound for two colours (minimum of 2(r+x)(b+1-x) over
// admissible x, in closed form).
long long h_upper_bound(int b, int r);

// Smaller orders recorded in the literature, distinct from the constructive
// bound; currently the 16-vertex (3,4) witness.
std::optional<long long> h_recorded_bound(int b, int r);

// Weak-flip feasibility as far as the proven results decide it: no
// (1,r)-weak-flip graph exists; (2,3) has an 18-vertex witness.
Feasibility weak_feasibility(int b, int r);

// Upper bound 2^(t+1)-1 on the least b with a ([t],(b,r))-flip graph, t >= 2.
long long cayley_b_of_t_bound(int t);

}  // namespace flipforge
