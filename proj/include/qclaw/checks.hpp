#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qclaw/graph.hpp"

namespace qclaw {

struct CheckReport {
    std::string check_name;
    Int instances_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
    std::uint64_t prng_seed = 12345;
    Int graph_depth = 64;
    Int involution_sequences = 50;
    Int involution_max_len = 8;
    Int dominance_pairs = 500;
    Int tropical_samples = 1000;
    Int pbw_samples = 1000;
};

/// The selectable suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite over the exchange graph of `seed`. Unknown names throw
/// ParseError. Violations are collected, never thrown.
CheckReport run_suite(const std::string& name, const QuantumSeed& seed, const SuiteOptions& opts);

/// Runs either a single suite or, for "all", every suite in order.
std::vector<CheckReport> run_suites(const std::string& selector, const QuantumSeed& seed,
                                    const SuiteOptions& opts);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports,
                               const SuiteOptions& opts);

} // namespace qclaw
