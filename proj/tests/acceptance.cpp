// Acceptance gate: every numbered identity family on its full grid, exact
// rational equality throughout, one line per criterion.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "hooklab/verify.hpp"

using namespace hooklab;

namespace {

int failures = 0;

const SuiteCase* find_case(const SuiteReport& r, const json& key) {
    for (const SuiteCase& c : r.cases) {
        bool match = true;
        for (auto it = key.begin(); it != key.end(); ++it)
            if (!c.input.contains(it.key()) || c.input[it.key()] != it.value()) match = false;
        if (match) return &c;
    }
    return nullptr;
}

void report(int number, const std::string& description, bool pass, long long ms) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description
              << " (" << ms << " ms)\n";
    if (!pass) ++failures;
}

struct SpotValue {
    std::string suite;
    json key;
    Rational expected;
};

void run_criterion(int number, const std::string& description,
                   const std::vector<std::string>& suites,
                   const std::vector<SpotValue>& spots = {}) {
    auto begin = std::chrono::steady_clock::now();
    bool pass = true;
    std::vector<std::string> details;
    std::vector<SuiteReport> reports;
    for (const std::string& name : suites) {
        SuiteReport r = run_suite(name);
        if (!r.pass) {
            pass = false;
            for (const SuiteCase& c : r.cases)
                if (!c.equal)
                    details.push_back("  " + name + " " + c.input.dump() + ": lhs=" +
                                      to_string(c.lhs) + " rhs=" + to_string(c.rhs));
        }
        reports.push_back(std::move(r));
    }
    for (const SpotValue& spot : spots) {
        const SuiteCase* c = nullptr;
        for (size_t i = 0; i < suites.size() && !c; ++i)
            if (suites[i] == spot.suite) c = find_case(reports[i], spot.key);
        if (!c || c->lhs != spot.expected) {
            pass = false;
            details.push_back("  spot value " + spot.suite + " " + spot.key.dump() +
                              " expected " + to_string(spot.expected) +
                              (c ? " got " + to_string(c->lhs) : " (case missing)"));
        }
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - begin)
                       .count();
    report(number, description, pass, ms);
    for (const std::string& line : details) std::cout << line << "\n";
}

}  // namespace

int main() {
    run_criterion(1, "doubled distinct 1/H_t sums equal 1/((2t)^n n!), t in {1,3,5}",
                  {"petreolle-dd"},
                  {{"petreolle-dd", {{"t", 3}, {"n", 1}}, make_rational(1, 6)},
                   {"petreolle-dd", {{"t", 3}, {"n", 2}}, make_rational(1, 72)}});

    run_criterion(2, "self-conjugate 1/H_t sums equal 1/((2t)^n n!), t in {2,4}",
                  {"petreolle-sc"},
                  {{"petreolle-sc", {{"t", 2}, {"n", 1}}, make_rational(1, 4)}});

    run_criterion(3, "square-case hook/content polynomials for both families",
                  {"square-dd-h2", "square-sc-h2", "square-dd-c2", "square-sc-c2"},
                  {{"square-dd-h2", {{"t", 1}, {"n", 1}}, make_rational(5)},
                   {"square-dd-c2", {{"t", 1}, {"n", 1}}, make_rational(1)},
                   {"square-sc-c2", {{"t", 2}, {"n", 1}}, make_rational(2)}});

    run_criterion(4, "hook-square sequence 0,5,22,51,92 fits 6n^2 - n exactly", {"sumdd"},
                  {{"sumdd", {{"n", 2}}, make_rational(22)},
                   {"sumdd", {{"n", 4}}, make_rational(92)}});

    run_criterion(5, "shifted hook formula and the content binomial identities",
                  {"hookformula", "strict-content-k", "content-binom", "strict-c-mu",
                   "strict-h2-mu"});

    run_criterion(6, "operator nullity and the closed difference chains", {"operators"});

    run_criterion(7, "structural multiset lemmas and the Littlewood machinery",
                  {"structural"});

    run_criterion(8, "telescoping and Moebius inversion for G-weighted sums", {"telescope"});

    run_criterion(9, "fitted degrees respect the hook/content degree bounds",
                  {"degree-bounds"});

    run_criterion(10, "brute-force filter agrees with quotient-mass enumeration",
                  {"crosscheck"});

    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
