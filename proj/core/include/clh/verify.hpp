#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clh {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

enum class Suite { closed_forms, samplers, lattice, conjugacy, zeta };

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    unsigned long samples = 100000;       // draws per empirical check
    std::uint64_t aut_work_budget = 4000000000ULL;
    bool quick = false;                   // shrink empirical runs for fast iteration
};

SuiteReport run_suite(Suite suite, const VerifyOptions& opt = {});
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt = {});

const char* suite_name(Suite suite);

}  // namespace clh
