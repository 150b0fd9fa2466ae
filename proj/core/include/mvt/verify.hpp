#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvt/rational.hpp"
#include "mvt/virasoro.hpp"

namespace mvt {

struct CheckLine {
    std::string name;      // "volume (1,1)" etc.
    std::string expected;  // exact rendering
    std::string got;
    bool ok = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckLine> lines;
    bool passed() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};

/// Reference values: pi^-(6g-6+2n) MV_{g,n} keyed by (g,n).
const std::map<std::pair<int, int>, Rational>& volume_table();
/// pi^2 SV_{g,n} keyed by (g,n).
const std::map<std::pair<int, int>, Rational>& sv_table();
/// pi^-2(n-3-d) H_n[d] keyed by (n,d), n <= 9.
const std::map<std::pair<int, int>, Rational>& genus0_row_table();
/// pi^-2(n-d) H_{1,n}[d] keyed by (n,d), n <= 6, d <= 4.
const std::map<std::pair<int, int>, Rational>& genus1_row_table();
/// pi^-2(n+3-d) H_{2,n}[d] keyed by (n,d), n <= 2.
const std::map<std::pair<int, int>, Rational>& genus2_row_table();

struct MultiIndexFixture {
    int g, n;
    std::vector<int> d;
    Rational value;  // pi-stripped
};
const std::vector<MultiIndexFixture>& multi_index_table();

SuiteResult verify_tables(Session& s);
SuiteResult verify_dual(Session& s);
SuiteResult verify_oracle(Session& s);
SuiteResult verify_scaling(Session& s);
SuiteResult verify_conjectures(Session& s);

/// Runs one of {tables, dual, oracle, scaling, conjectures}.
SuiteResult run_suite(Session& s, const std::string& name);

}  // namespace mvt
