#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "hooklab/corners.hpp"
#include "hooklab/diffops.hpp"
#include "hooklab/verify.hpp"

namespace {

using namespace hooklab;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string join_row(const std::vector<long long>& row) {
    std::string s;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(row[i]);
    }
    return s;
}

std::string join_rows(const std::vector<std::vector<long long>>& rows) {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += " / ";
        s += join_row(rows[i]);
    }
    return s;
}

Family parse_family(const std::string& name) {
    if (name == "dd") return Family::dd;
    if (name == "sc") return Family::sc;
    throw std::invalid_argument("unknown family '" + name + "' (expected strict, dd or sc)");
}

int cmd_stats(const std::string& literal, bool shifted, bool as_json) {
    std::vector<std::vector<long long>> hooks, contents;
    std::string canonical, kind, hook_prod;
    if (shifted) {
        StrictPartition s = StrictPartition::parse(literal);
        hooks = shifted_hook_rows(s);
        contents = shifted_content_rows(s);
        canonical = s.str();
        kind = "shifted";
        hook_prod = shifted_hook_product(s).get_str();
    } else {
        Partition p = Partition::parse(literal);
        hooks = hook_rows(p);
        contents = content_rows(p);
        canonical = p.str();
        kind = "usual";
        hook_prod = hook_product(p).get_str();
    }
    if (as_json) {
        json out{{"partition", canonical},
                 {"kind", kind},
                 {"hooks", hooks},
                 {"contents", contents},
                 {"hook_product", hook_prod}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "hooks: " << join_rows(hooks) << "\n";
        std::cout << "contents: " << join_rows(contents) << "\n";
        std::cout << "H = " << hook_prod << "\n";
    }
    return kExitPass;
}

int cmd_dd(const std::string& literal) {
    StrictPartition s = StrictPartition::parse(literal);
    std::cout << double_distinct(s).str() << "\n";
    return kExitPass;
}

int cmd_decompose(const std::string& literal, int t, const std::string& view) {
    Partition p = Partition::parse(literal);
    Decomposition d = littlewood_decompose(p, t);
    json out{{"partition", p.str()}, {"t", t}, {"core", d.core.str()}};
    json quotient = json::array();
    for (const Partition& q : d.quotient) quotient.push_back(q.str());
    out["quotient"] = quotient;
    out["b_offsets"] = d.b_offsets;

    std::string mode = view;
    if (mode == "auto") {
        if (t % 2 == 1 && is_doubled_distinct(p))
            mode = "dd";
        else if (t % 2 == 0 && is_self_conjugate(p))
            mode = "sc";
        else
            mode = "plain";
    }
    if (mode == "dd") {
        DDView v = dd_view(d);
        json quots = json::array();
        for (const Partition& q : v.quots) quots.push_back(q.str());
        out["view"] = {{"family", "dd"},
                       {"core_strict", v.core_strict.str()},
                       {"bar0", v.bar0.str()},
                       {"quots", quots}};
    } else if (mode == "sc") {
        SCView v = sc_view(d);
        json quots = json::array();
        for (const Partition& q : v.quots) quots.push_back(q.str());
        out["view"] = {{"family", "sc"}, {"core_sc", v.core_sc.str()}, {"quots", quots}};
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

Member member_of(const std::string& family, int t, const std::string& mu_literal) {
    FamilyTag tag(parse_family(family), t);  // throws on parity mismatch
    return Member::of(Partition::parse(mu_literal), tag);
}

int cmd_sum(const std::string& family, int t, const std::string& mu, int n,
            const std::string& expr_text) {
    StatisticExpr expr = StatisticExpr::parse(expr_text);
    if (family == "strict") {
        StrictPartition smu = StrictPartition::parse(mu);
        StrictFn g = [&expr](const StrictPartition& s) -> Rational {
            return expr.evaluate_shifted(s, 1) / Rational(shifted_hook_product(s));
        };
        std::cout << to_string(partition_sum_P_strict(smu, g, n)) << "\n";
        return kExitPass;
    }
    Member base = member_of(family, t, mu);
    Rational value = partition_sum_P(base, g_product(g_weight_G(), g_expr(expr)), n);
    std::cout << to_string(value) << "\n";
    return kExitPass;
}

int cmd_fit(const std::string& family, int t, const std::string& mu, int nmax,
            const std::string& expr_text) {
    StatisticExpr expr = StatisticExpr::parse(expr_text);
    std::vector<Rational> values;
    if (family == "strict") {
        StrictPartition smu = StrictPartition::parse(mu);
        StrictFn g = [&expr](const StrictPartition& s) -> Rational {
            return expr.evaluate_shifted(s, 1) / Rational(shifted_hook_product(s));
        };
        for (int n = 0; n <= nmax; ++n) values.push_back(partition_sum_P_strict(smu, g, n));
    } else {
        Member base = member_of(family, t, mu);
        MemberFn g = g_product(g_weight_G(), g_expr(expr));
        for (int n = 0; n <= nmax; ++n) values.push_back(partition_sum_P(base, g, n));
    }
    FitResult fit = fit_polynomial(values);
    std::cout << fit.poly.str() << "\n";
    if (!fit.certified)
        std::cerr << "warning: differences did not vanish on the sampled range; "
                     "the fit only interpolates\n";
    return kExitPass;
}

void print_csv(const SuiteReport& r) {
    std::cout << "suite,input,lhs,rhs,equal\n";
    for (const SuiteCase& c : r.cases)
        std::cout << r.suite << ",\"" << c.input.dump() << "\"," << to_string(c.lhs) << ","
                  << to_string(c.rhs) << "," << (c.equal ? "true" : "false") << "\n";
}

// A single named suite prints its full JSON report; `all` prints one summary
// line per suite unless --json/--format asks otherwise.
int cmd_verify(const std::string& suite, int t, int nmax, const std::string& format) {
    json params = json::object();
    if (t > 0) params["t"] = t;
    if (nmax >= 0) params["nmax"] = nmax;
    if (suite == "all") {
        if (!params.empty())
            std::cerr << "note: --t/--nmax apply to single suites; 'all' uses the default grids\n";
        if (format == "csv") {
            bool pass = true;
            std::cout << "suite,input,lhs,rhs,equal\n";
            for (const std::string& name : suite_names()) {
                SuiteReport r = run_suite(name);
                pass = pass && r.pass;
                for (const SuiteCase& c : r.cases)
                    std::cout << r.suite << ",\"" << c.input.dump() << "\"," << to_string(c.lhs)
                              << "," << to_string(c.rhs) << "," << (c.equal ? "true" : "false")
                              << "\n";
            }
            return pass ? kExitPass : kExitVerifyFail;
        }
        return run_suites(suite_names(), format == "json", std::cout);
    }
    if (!is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const std::string& n : suite_names()) std::cerr << " " << n;
        std::cerr << " all\n";
        return kExitUsage;
    }
    SuiteReport r = run_suite(suite, params);
    if (format == "csv")
        print_csv(r);
    else if (format == "plain")
        std::cout << r.summary() << "\n";
    else
        std::cout << r.to_json().dump(2) << "\n";
    if (!r.pass && format != "csv")
        std::cerr << r.suite << ": FAIL ("
                  << std::count_if(r.cases.begin(), r.cases.end(),
                                   [](const SuiteCase& c) { return !c.equal; })
                  << " failing cases)\n";
    return r.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition combinatorics: hooks, cores, quotients and "
                 "difference operators"};
    app.require_subcommand(1);

    std::string literal, family = "dd", mu = "-", expr, view = "auto", suite;
    int t = 0, n = 0, nmax = -1;
    bool shifted = false, as_json = false;

    CLI::App* stats = app.add_subcommand("stats", "hook and content tables of a diagram");
    stats->add_option("partition", literal, "partition literal, e.g. 6,3,3,1 or -")->required();
    stats->add_flag("--shifted", shifted, "treat the literal as a strict partition");
    stats->add_flag("--json", as_json, "JSON output");

    CLI::App* dd = app.add_subcommand("dd", "doubled distinct partition of a strict partition");
    dd->add_option("partition", literal, "strict partition literal")->required();

    CLI::App* dec = app.add_subcommand("decompose", "t-core/t-quotient decomposition");
    dec->add_option("partition", literal)->required();
    dec->add_option("--t", t, "modulus")->required()->check(CLI::PositiveNumber);
    dec->add_option("--view", view, "auto|dd|sc|plain")
        ->check(CLI::IsMember({"auto", "dd", "sc", "plain"}));

    CLI::App* sum = app.add_subcommand("sum", "weighted family sum P(mu, W*expr; n)");
    sum->add_option("--family", family, "strict|dd|sc")
        ->required()
        ->check(CLI::IsMember({"strict", "dd", "sc"}));
    sum->add_option("--t", t, "modulus (ignored for strict)");
    sum->add_option("--mu", mu, "base partition literal")->required();
    sum->add_option("--n", n, "added quotient mass")->required()->check(CLI::NonNegativeNumber);
    sum->add_option("--expr", expr, "statistic expression")->required();

    CLI::App* fit = app.add_subcommand("fit", "fit P(mu, W*expr; n) as a polynomial in n");
    fit->add_option("--family", family)->required()->check(CLI::IsMember({"strict", "dd", "sc"}));
    fit->add_option("--t", t, "modulus (ignored for strict)");
    fit->add_option("--mu", mu)->required();
    fit->add_option("--nmax", nmax, "largest n sampled")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fit->add_option("--expr", expr)->required();

    std::string format = "default";
    CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--t", t, "restrict to one modulus");
    verify->add_option("--nmax", nmax, "cap the n grid");
    verify->add_flag("--json", as_json, "force JSON output");
    verify->add_option("--format", format, "json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(literal, shifted, as_json);
        if (dd->parsed()) return cmd_dd(literal);
        if (dec->parsed()) return cmd_decompose(literal, t, view);
        if (sum->parsed()) {
            if (family != "strict" && t <= 0)
                throw std::invalid_argument("--t is required for dd/sc sums");
            return cmd_sum(family, t, mu, n, expr);
        }
        if (fit->parsed()) {
            if (family != "strict" && t <= 0)
                throw std::invalid_argument("--t is required for dd/sc fits");
            return cmd_fit(family, t, mu, nmax, expr);
        }
        if (verify->parsed()) {
            if (format == "default") format = as_json ? "json" : (suite == "all" ? "plain" : "json");
            return cmd_verify(suite, t, nmax, format);
        }
    } catch (const ExprParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
