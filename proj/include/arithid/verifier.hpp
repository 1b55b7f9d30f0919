#pragma once

#include <arithid/registry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arithid {

/// Sweep ranges. Single-n identities run n = 1..max for their cost class;
/// pair(m,n) identities run 1 <= m, n <= max_pair; pair(k,n) identities run
/// 1 <= n <= k_pair_max_n, 1 <= k <= k_multiplier * n.
struct RangeConfig {
    Int quadratic_max_n = 1000;
    Int linear_max_n = 10'000;
    Int constant_max_n = 100'000;
    Int max_pair = 200;
    Int k_pair_max_n = 500;
    Int k_multiplier = 3;
    /// Overrides every single-n maximum and k_pair_max_n when set.
    std::optional<Int> max_n;

    unsigned workers = 1;
    bool fail_fast = false;
    /// Keep every outcome in the per-identity report, not just failures.
    bool keep_outcomes = false;

    Int max_n_for(const IdentityDescriptor& d) const;
    /// Throws std::invalid_argument on nonpositive ranges or zero workers.
    void validate() const;
};

enum class Status { pass, fail, skipped_degenerate };

std::string_view name_of(Status s);

struct VerificationOutcome {
    std::string id;
    Inputs inputs;
    Status status = Status::pass;
    std::optional<EvalValue> lhs;
    std::optional<EvalValue> rhs;
    double residual = 0.0;
    /// Diagnostic for failures raised as errors (inexact division, guards).
    std::string error;
    /// Residual guard or overflow guard tripped.
    bool guard_tripped = false;
};

struct IdentityReport {
    std::string id;
    std::string name;
    std::string anchor;
    Int checked = 0;
    Int passed = 0;
    Int failed = 0;
    Int skipped = 0;
    double max_residual = 0.0;
    double elapsed_ms = 0.0;
    Int guard_trips = 0;
    std::vector<VerificationOutcome> failures;
    std::vector<VerificationOutcome> outcomes;  ///< only with keep_outcomes
};

struct RunReport {
    RangeConfig config;
    std::vector<std::string> ids;
    std::string started_at;
    std::vector<IdentityReport> identities;

    bool verdict_pass() const noexcept;
    bool guard_tripped() const noexcept;
};

/// Evaluates one instance and compares its sides.
VerificationOutcome verify_instance(const IdentityDescriptor& d, const Inputs& inputs);

/// All inputs the sweep visits for d, ordered by (n) / (m, n) / (n, k).
std::vector<Inputs> sweep_inputs(const IdentityDescriptor& d, const RangeConfig& config);

IdentityReport verify_identity(const IdentityDescriptor& d, const RangeConfig& config);
IdentityReport verify_identity(const std::string& id, const RangeConfig& config,
                               const Registry& registry = Registry::standard());

/// Runs the listed identities (all when ids is empty) in registry order.
RunReport verify_all(const RangeConfig& config, const std::vector<std::string>& ids = {},
                     const Registry& registry = Registry::standard());

}  // namespace arithid
