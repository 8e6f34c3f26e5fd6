#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/diffops.hpp"
#include "hooklab/stats.hpp"

namespace hooklab {

using json = nlohmann::json;

struct SuiteCase {
    json input;
    Rational lhs, rhs;
    bool equal = false;
};

struct SuiteReport {
    std::string suite;
    json params;
    std::vector<SuiteCase> cases;
    bool pass = true;
    long long ms = 0;

    json to_json() const;
    std::string summary() const;  // "petreolle-dd: PASS (8 cases, 12 ms)"
};

struct FitResult {
    PolynomialQ poly;
    // true when the forward differences vanished identically on at least one
    // full row before the data ran out
    bool certified = false;
};

// Exact Newton forward-difference interpolation through values at n = 0,1,...
FitResult fit_polynomial(const std::vector<Rational>& values);

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs a named suite on its default grid; params may override {"t": int,
// "nmax": int} where meaningful.  Throws std::invalid_argument for unknown
// suites.
SuiteReport run_suite(const std::string& name, const json& params = json::object());

// Fits P(mu, G*expr; n) for n = 0..nmax and asserts the fitted degree stays
// within the expression's bound, with vanishing differences beyond it.
SuiteReport degree_bound_scan(const StatisticExpr& expr, Family family, int t,
                              const Partition& mu, int nmax);

// Prints one line per suite (or the JSON reports) and returns the exit code:
// 0 all pass, 1 any failure.
int run_suites(const std::vector<std::string>& names, bool as_json, std::ostream& out);

// Test hook: shifts one hard-coded RHS (the quadratic hook-square family) so
// the harness can prove a single arithmetic fault flips the exit code.
void set_rhs_perturbation_for_testing(const Rational& offset);

}  // namespace hooklab
