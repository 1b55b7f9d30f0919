#include <arithid/registry.hpp>
#include <arithid/report.hpp>
#include <arithid/verifier.hpp>

#include <gtest/gtest.h>

using namespace arithid;

namespace {

RangeConfig capped(Int max_n) {
    RangeConfig c;
    c.max_n = max_n;
    return c;
}

}  // namespace

TEST(Registry, HasTwentySixEntriesInOrder) {
    const auto& d = Registry::standard().descriptors();
    ASSERT_EQ(d.size(), 26u);
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_EQ(d[i].id, "I" + std::to_string(i + 1));
        EXPECT_FALSE(d[i].name.empty());
        EXPECT_FALSE(d[i].anchor.empty());
        EXPECT_TRUE(d[i].in_domain);
        EXPECT_TRUE(d[i].evaluate);
    }
}

TEST(Registry, DescriptorFields) {
    const auto& r = Registry::standard();
    EXPECT_EQ(r.find("I11").domain, "n >= 4");
    EXPECT_EQ(r.find("I11").cost, CostClass::quadratic);
    EXPECT_EQ(r.find("I3").min_n, 3);
    EXPECT_EQ(r.find("I1").arity, Arity::pair_kn);
    EXPECT_EQ(r.find("I2").arity, Arity::pair_mn);
    EXPECT_EQ(r.find("I4").mode, EvalMode::approx);
    EXPECT_EQ(r.find("I18").mode, EvalMode::rational);
    EXPECT_NE(r.find("I9").note.find("n/2"), std::string::npos);
    EXPECT_FALSE(r.find("I10").note.empty());
    EXPECT_THROW(r.find("I27"), UnknownIdentity);
    EXPECT_FALSE(r.contains("i1"));
}

TEST(Registry, RejectsDuplicateIds) {
    auto d = Registry::standard().descriptors();
    d.push_back(d.front());
    EXPECT_THROW(Registry{d}, std::invalid_argument);
}

TEST(Registry, ListMatchesDescriptors) {
    const auto list = list_identities();
    ASSERT_EQ(list.size(), 26u);
    EXPECT_EQ(list[10].id, "I11");
    EXPECT_EQ(list[10].domain, "n >= 4");
    EXPECT_EQ(list[2].cost_class, "quadratic");
}

TEST(Registry, EveryIdentityEvaluatesAtItsFirstValidInput) {
    for (const auto& d : Registry::standard().descriptors()) {
        Inputs in = Inputs::single(d.min_n);
        if (d.arity == Arity::pair_mn) in = Inputs::mn(1, 1);
        if (d.arity == Arity::pair_kn) in = Inputs::kn(1, 1);
        ASSERT_TRUE(d.in_domain(in)) << d.id;
        const auto outcome = verify_instance(d, in);
        EXPECT_EQ(outcome.status, Status::pass) << d.id << " " << outcome.error;
    }
}

TEST(Registry, OneBelowMinimumIsSkipped) {
    for (const auto& d : Registry::standard().descriptors()) {
        if (d.arity != Arity::single_n || d.min_n <= 1) continue;
        const auto outcome = verify_instance(d, Inputs::single(d.min_n - 1));
        EXPECT_EQ(outcome.status, Status::skipped_degenerate) << d.id;
    }
}

TEST(Registry, NonCoprimePairSkippedForI7) {
    const auto& d = Registry::standard().find("I7");
    EXPECT_EQ(verify_instance(d, Inputs::kn(2, 4)).status, Status::skipped_degenerate);
    EXPECT_EQ(verify_instance(d, Inputs::kn(3, 4)).status, Status::pass);
}

TEST(Verifier, DegenerateOnlyRange) {
    const auto report = verify_identity("I3", capped(2));
    EXPECT_EQ(report.checked, 0);
    EXPECT_EQ(report.skipped, 2);
    EXPECT_EQ(report.failed, 0);
}

TEST(Verifier, LinearRange) {
    const auto report = verify_identity("I6", capped(2000));
    EXPECT_EQ(report.checked, 2000);
    EXPECT_EQ(report.passed, 2000);
    EXPECT_EQ(report.failed, 0);
}

TEST(Verifier, PairRange) {
    RangeConfig c;
    c.max_pair = 50;
    const auto report = verify_identity("I2", c);
    EXPECT_EQ(report.checked, 2500);
    EXPECT_EQ(report.failed, 0);
}

TEST(Verifier, KPairRange) {
    RangeConfig c;
    c.max_n = 20;
    const auto report = verify_identity("I1", c);
    // sum over n of 3n
    EXPECT_EQ(report.checked, 3 * 20 * 21 / 2);
    EXPECT_EQ(report.failed, 0);
}

TEST(Verifier, SweepOrder) {
    const auto& r = Registry::standard();
    RangeConfig c;
    c.max_pair = 2;
    c.max_n = 2;
    c.k_multiplier = 2;
    EXPECT_EQ(sweep_inputs(r.find("I2"), c),
              (std::vector<Inputs>{Inputs::mn(1, 1), Inputs::mn(1, 2), Inputs::mn(2, 1),
                                   Inputs::mn(2, 2)}));
    EXPECT_EQ(sweep_inputs(r.find("I1"), c),
              (std::vector<Inputs>{Inputs::kn(1, 1), Inputs::kn(2, 1), Inputs::kn(1, 2),
                                   Inputs::kn(2, 2), Inputs::kn(3, 2), Inputs::kn(4, 2)}));
}

TEST(Verifier, MaxNOfOneRunsEverything) {
    const auto run = verify_all(capped(1));
    ASSERT_EQ(run.identities.size(), 26u);
    EXPECT_TRUE(run.verdict_pass());
    for (const auto& r : run.identities) {
        EXPECT_EQ(r.failed, 0) << r.id;
        EXPECT_EQ(r.checked + r.skipped, r.id == "I2" || r.id == "I24"
                                             ? RangeConfig{}.max_pair * RangeConfig{}.max_pair
                                         : r.id == "I1" || r.id == "I7" ? 3
                                                                        : 1)
            << r.id;
    }
}

TEST(Verifier, ConfigValidation) {
    RangeConfig c;
    c.workers = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = RangeConfig{};
    c.max_n = -1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_THROW(verify_all(capped(5), {"I99"}), UnknownIdentity);
}

TEST(Verifier, PerturbedEvaluatorFailsFast) {
    const auto& base = Registry::standard();
    const auto original = base.find("I6").evaluate;
    const auto perturbed = base.with_evaluator("I6", [original](const Inputs& in) {
        auto sides = original(in);
        if (in.n == 7) sides.lhs = std::get<Int>(sides.lhs) + 1;
        return sides;
    });

    RangeConfig c = capped(50);
    c.fail_fast = true;
    const auto report = verify_identity("I6", c, perturbed);
    EXPECT_EQ(report.failed, 1);
    EXPECT_EQ(report.checked, 7);
    ASSERT_EQ(report.failures.size(), 1u);
    EXPECT_EQ(report.failures[0].inputs, Inputs::single(7));
    EXPECT_EQ(std::get<Int>(*report.failures[0].lhs), menon_rhs(7) + 1);

    const auto run = verify_all(c, {"I5", "I6", "I8"}, perturbed);
    EXPECT_FALSE(run.verdict_pass());
    EXPECT_FALSE(run.guard_tripped());
    EXPECT_EQ(run.identities.size(), 2u);

    c.fail_fast = false;
    c.workers = 4;
    const auto full = verify_identity("I6", c, perturbed);
    EXPECT_EQ(full.checked, 50);
    EXPECT_EQ(full.failed, 1);
}

TEST(Verifier, ErrorsBecomeFailures) {
    const auto perturbed = Registry::standard().with_evaluator("I4", [](const Inputs& in) {
        IdentitySides s;
        s.lhs = ApproxInteger::from_raw(static_cast<double>(in.n) + 0.5);
        s.rhs = Int{0};
        return s;
    });
    const auto report = verify_identity("I4", capped(3), perturbed);
    EXPECT_EQ(report.failed, 3);
    EXPECT_EQ(report.guard_trips, 3);
    EXPECT_FALSE(report.failures[0].error.empty());
    EXPECT_FALSE(report.failures[0].lhs.has_value());

    const auto run = verify_all(capped(3), {"I4"}, perturbed);
    EXPECT_TRUE(run.guard_tripped());
}

TEST(Verifier, KeepOutcomes) {
    RangeConfig c = capped(5);
    c.keep_outcomes = true;
    const auto report = verify_identity("I3", c);
    ASSERT_EQ(report.outcomes.size(), 5u);
    EXPECT_EQ(report.outcomes[0].status, Status::skipped_degenerate);
    EXPECT_EQ(report.outcomes[2].status, Status::pass);
    EXPECT_EQ(std::get<Int>(*report.outcomes[4].lhs), 4);
}

TEST(Verifier, WorkerCountDoesNotChangeResults) {
    RangeConfig one;
    one.quadratic_max_n = 150;
    one.linear_max_n = 400;
    one.constant_max_n = 600;
    one.max_pair = 30;
    one.k_pair_max_n = 40;
    RangeConfig eight = one;
    eight.workers = 8;

    auto a = to_json(verify_all(one));
    auto b = to_json(verify_all(eight));
    for (auto* j : {&a, &b}) {
        (*j)["run"].erase("started_at");
        for (auto& id : (*j)["identities"]) id.erase("elapsed_ms");
    }
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["verdict"], "pass");
}
