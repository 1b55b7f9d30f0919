#include <arithid/verifier.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <stdexcept>
#include <thread>

namespace arithid {

std::string_view name_of(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_degenerate: return "skipped_degenerate";
    }
    return "?";
}

Int RangeConfig::max_n_for(const IdentityDescriptor& d) const {
    if (d.arity == Arity::pair_mn) {
        return max_pair;
    }
    if (max_n) {
        return d.arity == Arity::pair_kn ? std::min(*max_n, k_pair_max_n) : *max_n;
    }
    if (d.arity == Arity::pair_kn) {
        return k_pair_max_n;
    }
    switch (d.cost) {
        case CostClass::constant: return constant_max_n;
        case CostClass::linear: return linear_max_n;
        case CostClass::quadratic: return quadratic_max_n;
    }
    return 0;
}

void RangeConfig::validate() const {
    if (workers < 1) {
        throw std::invalid_argument("worker count must be >= 1");
    }
    if (quadratic_max_n < 0 || linear_max_n < 0 || constant_max_n < 0 || max_pair < 0 ||
        k_pair_max_n < 0 || k_multiplier < 1 || (max_n && *max_n < 0)) {
        throw std::invalid_argument("sweep ranges must be nonnegative and k multiplier >= 1");
    }
}

bool RunReport::verdict_pass() const noexcept {
    return std::all_of(identities.begin(), identities.end(),
                       [](const IdentityReport& r) { return r.failed == 0; });
}

bool RunReport::guard_tripped() const noexcept {
    return std::any_of(identities.begin(), identities.end(),
                       [](const IdentityReport& r) { return r.guard_trips > 0; });
}

namespace {

double approx_residual(const EvalValue& v) {
    if (const auto* a = std::get_if<ApproxInteger>(&v)) {
        return a->residual;
    }
    return 0.0;
}

bool sides_equal(const EvalValue& lhs, const EvalValue& rhs) {
    const bool approx = mode_of(lhs) == EvalMode::approx || mode_of(rhs) == EvalMode::approx;
    if (approx) {
        const auto as_integer = [](const EvalValue& v, Int& out) {
            if (const auto* r = std::get_if<ExactRational>(&v); r && !r->is_integer()) {
                return false;
            }
            out = integer_value(v);
            return true;
        };
        Int a = 0;
        Int b = 0;
        return as_integer(lhs, a) && as_integer(rhs, b) && a == b;
    }
    const auto as_rational = [](const EvalValue& v) {
        if (const auto* r = std::get_if<ExactRational>(&v)) {
            return *r;
        }
        return ExactRational(std::get<Int>(v));
    };
    return as_rational(lhs) == as_rational(rhs);
}

}  // namespace

VerificationOutcome verify_instance(const IdentityDescriptor& d, const Inputs& inputs) {
    VerificationOutcome out;
    out.id = d.id;
    out.inputs = inputs;
    if (!d.in_domain(inputs)) {
        out.status = Status::skipped_degenerate;
        return out;
    }
    try {
        IdentitySides sides = d.evaluate(inputs);
        out.residual = std::max({approx_residual(sides.lhs), approx_residual(sides.rhs),
                                 sides.residual_floor});
        out.status = sides_equal(sides.lhs, sides.rhs) ? Status::pass : Status::fail;
        out.lhs = std::move(sides.lhs);
        out.rhs = std::move(sides.rhs);
    } catch (const ResidualGuard& e) {
        out.status = Status::fail;
        out.error = e.what();
        out.guard_tripped = true;
    } catch (const OverflowError& e) {
        out.status = Status::fail;
        out.error = e.what();
        out.guard_tripped = true;
    } catch (const std::exception& e) {
        // Inexact division, non-integer rational, zero denominator, or a
        // degenerate-domain error inside the declared domain.
        out.status = Status::fail;
        out.error = e.what();
    }
    return out;
}

std::vector<Inputs> sweep_inputs(const IdentityDescriptor& d, const RangeConfig& config) {
    const Int limit = config.max_n_for(d);
    std::vector<Inputs> inputs;
    switch (d.arity) {
        case Arity::single_n:
            inputs.reserve(static_cast<std::size_t>(std::max<Int>(limit, 0)));
            for (Int n = 1; n <= limit; ++n) {
                inputs.push_back(Inputs::single(n));
            }
            break;
        case Arity::pair_mn:
            for (Int m = 1; m <= limit; ++m) {
                for (Int n = 1; n <= limit; ++n) {
                    inputs.push_back(Inputs::mn(m, n));
                }
            }
            break;
        case Arity::pair_kn:
            for (Int n = 1; n <= limit; ++n) {
                for (Int k = 1; k <= config.k_multiplier * n; ++k) {
                    inputs.push_back(Inputs::kn(k, n));
                }
            }
            break;
    }
    return inputs;
}

namespace {

struct Chunk {
    std::vector<VerificationOutcome> kept;  // failures, or every outcome
    Int checked = 0;
    Int passed = 0;
    Int failed = 0;
    Int skipped = 0;
    Int guard_trips = 0;
    double max_residual = 0.0;
};

void accumulate(Chunk& c, VerificationOutcome o, bool keep_all) {
    switch (o.status) {
        case Status::pass: ++c.checked; ++c.passed; break;
        case Status::fail: ++c.checked; ++c.failed; break;
        case Status::skipped_degenerate: ++c.skipped; break;
    }
    if (o.guard_tripped) {
        ++c.guard_trips;
    }
    c.max_residual = std::max(c.max_residual, o.residual);
    if (keep_all || o.status == Status::fail) {
        c.kept.push_back(std::move(o));
    }
}

Chunk run_range(const IdentityDescriptor& d, const std::vector<Inputs>& inputs, std::size_t begin,
                std::size_t end, bool keep_all) {
    Chunk c;
    for (std::size_t i = begin; i < end; ++i) {
        accumulate(c, verify_instance(d, inputs[i]), keep_all);
    }
    return c;
}

}  // namespace

IdentityReport verify_identity(const IdentityDescriptor& d, const RangeConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Inputs> inputs = sweep_inputs(d, config);

    // fail_fast needs the full ordered stream to cut at the first failure.
    const bool keep_all = config.keep_outcomes || config.fail_fast;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(config.workers, inputs.size()));
    std::vector<Chunk> chunks(workers);
    if (workers == 1) {
        chunks[0] = run_range(d, inputs, 0, inputs.size(), keep_all);
    } else {
        // Interleaved partition balances the growing per-instance cost.
        std::vector<std::thread> threads;
        std::vector<std::vector<std::size_t>> owned(workers);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            owned[i % workers].push_back(i);
        }
        std::vector<std::vector<std::pair<std::size_t, VerificationOutcome>>> partial(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i : owned[w]) {
                    partial[w].emplace_back(i, verify_instance(d, inputs[i]));
                }
            });
        }
        for (auto& t : threads) {
            t.join();
        }
        // Re-merge in input order so aggregation is independent of the worker count.
        std::vector<VerificationOutcome> ordered(inputs.size());
        for (auto& part : partial) {
            for (auto& [i, o] : part) {
                ordered[i] = std::move(o);
            }
        }
        chunks.assign(1, Chunk{});
        for (auto& o : ordered) {
            accumulate(chunks[0], std::move(o), keep_all);
        }
    }

    IdentityReport report;
    report.id = d.id;
    report.name = d.name;
    report.anchor = d.anchor;
    for (auto& c : chunks) {
        report.checked += c.checked;
        report.passed += c.passed;
        report.failed += c.failed;
        report.skipped += c.skipped;
        report.guard_trips += c.guard_trips;
        report.max_residual = std::max(report.max_residual, c.max_residual);
        for (auto& o : c.kept) {
            report.outcomes.push_back(std::move(o));
        }
    }

    if (config.fail_fast && report.failed > 0) {
        auto first = std::find_if(report.outcomes.begin(), report.outcomes.end(),
                                  [](const VerificationOutcome& o) { return o.status == Status::fail; });
        report.outcomes.erase(first + 1, report.outcomes.end());
        Chunk truncated;
        for (auto& o : report.outcomes) {
            accumulate(truncated, o, true);
        }
        report.checked = truncated.checked;
        report.passed = truncated.passed;
        report.failed = truncated.failed;
        report.skipped = truncated.skipped;
        report.guard_trips = truncated.guard_trips;
        report.max_residual = truncated.max_residual;
    }

    for (const auto& o : report.outcomes) {
        if (o.status == Status::fail) {
            report.failures.push_back(o);
        }
    }
    if (!config.keep_outcomes) {
        report.outcomes.clear();
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

IdentityReport verify_identity(const std::string& id, const RangeConfig& config,
                               const Registry& registry) {
    return verify_identity(registry.find(id), config);
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

RunReport verify_all(const RangeConfig& config, const std::vector<std::string>& ids,
                     const Registry& registry) {
    config.validate();
    for (const auto& id : ids) {
        (void)registry.find(id);
    }
    RunReport run;
    run.config = config;
    run.ids = ids;
    run.started_at = utc_timestamp();
    for (const auto& d : registry.descriptors()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), d.id) == ids.end()) {
            continue;
        }
        run.identities.push_back(verify_identity(d, config));
        if (config.fail_fast && run.identities.back().failed > 0) {
            break;
        }
    }
    return run;
}

}  // namespace arithid
