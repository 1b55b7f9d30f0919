#include <arithid/bench.hpp>
#include <arithid/reference.hpp>
#include <arithid/registry.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace arithid {

namespace {

// Runs of a timed batch are extended until the batch takes at least this long.
constexpr double kMinBatchNs = 200'000.0;

const std::vector<std::string>& function_targets() {
    static const std::vector<std::string> names{
        "phi_definition", "phi_factored",      "tau_definition", "tau_factored",
        "mu",             "pillai_definition", "mertens",        "factorize",
    };
    return names;
}

Int mix(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) * 1'000'003u + static_cast<std::uint64_t>(b));
}

void do_not_optimize(Int value) {
    asm volatile("" : : "r"(value) : "memory");
}

std::function<Int()> identity_runner(const std::string& id, Int n) {
    // Pair identities take (n + 1, n), which is always coprime.
    const Int partner = n + 1;
    if (id == "I1") return [=] { return gcd_via_floor(partner, n); };
    if (id == "I2") return [=] {
        const auto [a, b] = floor_reciprocity_sides(partner, n);
        return mix(a, b);
    };
    if (id == "I3") return [=] { return checksum_of(phi_formula(n, PhiMethod::res1)); };
    if (id == "I4") return [=] { return checksum_of(phi_formula(n, PhiMethod::fourier)); };
    if (id == "I5") return [=] { return checksum_of(phi_formula(n, PhiMethod::res2)); };
    if (id == "I6") return [=] { return menon_rhs(n); };
    if (id == "I7") return [=] { return checksum_of(coprime_floor_sides(partner, n)); };
    if (id == "I8") return [=] { return checksum_of(coprime_sum_sides(n)); };
    if (id == "I9") return [=] { return checksum_of(cos_sum_sides(n)); };
    if (id == "I10") return [=] { return checksum_of(k_cos_sum_sides(n)); };
    if (id == "I11") {
        const Int tau_n = tau_factored(factorize(n));
        return [=] { return checksum_of(phi_formula(n, PhiMethod::res3, tau_n)); };
    }
    if (id == "I12") return [=] { return checksum_of(tau_formula(n, TauForm::toto)); };
    if (id == "I13") return [=] { return checksum_of(tau_formula(n, TauForm::res1_form)); };
    if (id == "I14") return [=] { return checksum_of(tau_formula(n, TauForm::res2_form)); };
    if (id == "I15") return [=] { return checksum_of(tau_formula(n, TauForm::res3_form)); };
    const auto pillai = [&](PillaiForm form) -> std::function<Int()> {
        const FactoredInteger f = factorize(n);
        return [=] { return checksum_of(pillai_formula(f, form)); };
    };
    if (id == "I16") return pillai(PillaiForm::divisor_phi);
    if (id == "I17") return pillai(PillaiForm::divisor_tau_mu);
    if (id == "I18") return pillai(PillaiForm::padic_product);
    if (id == "I19") return pillai(PillaiForm::phi_over_d);
    if (id == "I20") return [=] { return checksum_of(mobius_identity_lhs(n, MobiusSum::expsum)); };
    if (id == "I21" || id == "I22") {
        const auto which = id == "I21" ? MobiusSum::floor_sum : MobiusSum::kline;
        auto table = std::make_shared<const std::vector<std::int8_t>>(mobius_table(n));
        return [=] { return checksum_of(mobius_identity_lhs(n, which, *table)); };
    }
    if (id == "I23") return [=] { return checksum_of(mu2_over_phi_sides(n)); };
    if (id == "I24") return [=] { return checksum_of(phi_mult_sides(partner, n)); };
    if (id == "I25" || id == "I26") {
        const FactoredInteger f = factorize(n);
        if (id == "I25") return [=] { return phi_mobius_inversion(f); };
        return [=] { return phi_factored(f); };
    }
    throw UnknownTarget(id);
}

std::function<Int()> function_runner(const std::string& name, Int n) {
    if (name == "phi_definition") return [=] { return phi_definition(n); };
    if (name == "phi_factored") return [=] { return phi_factored(factorize(n)); };
    if (name == "tau_definition") return [=] { return tau_definition(n); };
    if (name == "tau_factored") return [=] { return tau_factored(factorize(n)); };
    if (name == "mu") return [=] { return Int{mu(factorize(n))}; };
    if (name == "pillai_definition") return [=] { return pillai_definition(n); };
    if (name == "mertens") return [=] { return mertens(n); };
    if (name == "factorize") return [=] {
        Int folded = 0;
        const FactoredInteger f = factorize(n);
        for (const auto& [p, e] : f.factors()) {
            folded = mix(mix(folded, p), e);
        }
        return folded;
    };
    throw UnknownTarget(name);
}

bool is_function_target(const std::string& t) {
    const auto& f = function_targets();
    return std::find(f.begin(), f.end(), t) != f.end();
}

}  // namespace

std::vector<std::string> bench_targets() {
    std::vector<std::string> out;
    for (const auto& d : Registry::standard().descriptors()) {
        out.push_back(d.id);
    }
    const auto& f = function_targets();
    out.insert(out.end(), f.begin(), f.end());
    return out;
}

std::function<Int()> make_bench_runner(const std::string& target, Int n) {
    if (n < 1) {
        throw DomainError("bench requires n >= 1");
    }
    if (is_function_target(target)) {
        return function_runner(target, n);
    }
    if (!Registry::standard().contains(target)) {
        throw UnknownTarget(target);
    }
    return identity_runner(target, n);
}

Int checksum_of(const EvalValue& v) {
    if (const auto* r = std::get_if<ExactRational>(&v)) {
        return mix(r->numerator(), r->denominator());
    }
    return integer_value(v);
}

Int checksum_of(const Sides& s) { return mix(checksum_of(s.lhs), checksum_of(s.rhs)); }

std::vector<BenchRecord> bench(const std::vector<std::string>& targets,
                               const std::vector<Int>& n_grid, int reps) {
    if (reps < 3) {
        throw std::invalid_argument("bench needs at least 3 reps");
    }
    if (n_grid.empty() || !std::is_sorted(n_grid.begin(), n_grid.end()) ||
        std::adjacent_find(n_grid.begin(), n_grid.end()) != n_grid.end()) {
        throw std::invalid_argument("n grid must be nonempty and strictly ascending");
    }
    for (const auto& t : targets) {
        if (!is_function_target(t) && !Registry::standard().contains(t)) {
            throw UnknownTarget(t);
        }
    }

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (const auto& target : targets) {
        for (Int n : n_grid) {
            const auto run = make_bench_runner(target, n);
            const Int checksum = run();  // warm-up, discarded from timing

            const auto time_batch = [&](Int iterations) {
                const auto start = clock::now();
                for (Int i = 0; i < iterations; ++i) {
                    do_not_optimize(run());
                }
                return std::chrono::duration<double, std::nano>(clock::now() - start).count();
            };
            Int iterations = 1;
            double probe = time_batch(1);
            while (probe < kMinBatchNs && iterations < (Int{1} << 30)) {
                iterations *= 2;
                probe = time_batch(iterations);
            }

            std::vector<double> samples;
            samples.reserve(static_cast<std::size_t>(reps));
            for (int r = 0; r < reps; ++r) {
                samples.push_back(std::max(time_batch(iterations), 1.0) /
                                  static_cast<double>(iterations));
            }
            std::sort(samples.begin(), samples.end());
            const std::size_t mid = samples.size() / 2;
            const double median = samples.size() % 2 == 1
                                      ? samples[mid]
                                      : 0.5 * (samples[mid - 1] + samples[mid]);
            records.push_back({target, n, reps, samples.front(), median, checksum});
        }
    }
    return records;
}

double loglog_slope(const std::vector<BenchRecord>& records) {
    if (records.size() < 2) {
        throw std::invalid_argument("slope needs at least two records");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double count = static_cast<double>(records.size());
    for (const auto& r : records) {
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(r.median_ns);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "target,n,reps,min_ns,median_ns,checksum\n";
    os << std::fixed << std::setprecision(1);
    for (const auto& r : records) {
        os << r.target << ',' << r.n << ',' << r.reps << ',' << r.min_ns << ',' << r.median_ns
           << ',' << r.checksum << '\n';
    }
    return os.str();
}

}  // namespace arithid
