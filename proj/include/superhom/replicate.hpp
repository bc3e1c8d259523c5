#pragma once

// The worked-example suite: one criterion per published claim that can be
// checked exactly on a finite window.

#include "superhom/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace superhom {

namespace battery {

/// Simples, Kac and dual Kac modules, projectives, tensors, duals, a parity shift.
std::vector<SuperModule> gl11();
std::vector<SuperModule> gl21();
std::vector<SuperModule> q1();
/// gl(1|1) principal block weights (a|-a), |a| <= r.
std::vector<std::vector<int>> gl11_block(int r);

}  // namespace battery

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<std::string> tags;
    bool pass = false;
    std::string expected, computed;
    double seconds = 0;
};

struct Criterion {
    int id;
    std::string name;
    std::vector<std::string> tags;
    std::function<CriterionResult()> run;
};

const std::vector<Criterion>& criteria();

/// `only` filters by tag or criterion number; empty runs everything.
bool criterion_selected(const Criterion& c, const std::string& only);
std::vector<CriterionResult> replicate_suite(const std::string& only = "", std::uint64_t seed = 1);

Json to_json(const CriterionResult& r, bool with_runtime = true);

}  // namespace superhom
