#include <arithid/report.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace arithid;

namespace {

RunReport small_run() {
    RangeConfig c;
    c.max_n = 30;
    c.max_pair = 5;
    return verify_all(c, {"I3", "I2", "I18"});
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

}  // namespace

TEST(Report, EvalValueJson) {
    EXPECT_EQ(to_json(EvalValue{Int{7}}), nlohmann::json(7));
    EXPECT_EQ(to_json(EvalValue{ExactRational(7, 3)}), nlohmann::json("7/3"));
    const auto j = to_json(EvalValue{ApproxInteger::from_raw(2.0)});
    EXPECT_EQ(j["nearest"], 2);
    EXPECT_EQ(j["residual"], 0.0);
    EXPECT_EQ(to_json(Inputs::kn(3, 5)), (nlohmann::json{{"k", 3}, {"n", 5}}));
    EXPECT_EQ(to_json(Inputs::mn(3, 5)), (nlohmann::json{{"m", 3}, {"n", 5}}));
}

TEST(Report, JsonLayout) {
    const auto run = small_run();
    const auto j = to_json(run);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["run"]["config"]["max_n"], 30);
    EXPECT_EQ(j["run"]["config"]["ids"], (nlohmann::json{"I3", "I2", "I18"}));
    EXPECT_TRUE(j["run"]["started_at"].is_string());
    ASSERT_EQ(j["identities"].size(), 3u);
    // Registry order, regardless of request order.
    EXPECT_EQ(j["identities"][0]["id"], "I2");
    for (const auto& id : j["identities"]) {
        for (const char* key : {"id", "name", "anchor", "checked", "passed", "failed", "skipped",
                                "max_residual", "elapsed_ms", "failures"}) {
            EXPECT_TRUE(id.contains(key)) << key;
        }
    }
    EXPECT_EQ(j["identities"][0]["checked"], 25);
    EXPECT_EQ(j["identities"][1]["skipped"], 2);
}

TEST(Report, FailureEntries) {
    const auto perturbed = Registry::standard().with_evaluator("I8", [](const Inputs& in) {
        return IdentitySides{Int{in.n}, Int{in.n == 4 ? 0 : in.n}};
    });
    RangeConfig c;
    c.max_n = 5;
    const auto j = to_json(verify_all(c, {"I8"}, perturbed));
    EXPECT_EQ(j["verdict"], "fail");
    const auto& failures = j["identities"][0]["failures"];
    ASSERT_EQ(failures.size(), 1u);
    EXPECT_EQ(failures[0]["inputs"], (nlohmann::json{{"n", 4}}));
    EXPECT_EQ(failures[0]["lhs"], 4);
    EXPECT_EQ(failures[0]["rhs"], 0);
    EXPECT_FALSE(failures[0].contains("error"));
}

TEST(Report, FormatsCarryTheSameNumbers) {
    const auto run = small_run();
    const auto j = to_json(run);
    std::stringstream csv(to_csv(run));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "id,name,anchor,checked,passed,failed,skipped,max_residual,elapsed_ms");
    std::size_t row = 0;
    while (std::getline(csv, line)) {
        const auto& id = j["identities"][row++];
        // Anchors may be quoted and contain commas; read numeric fields from the right.
        const auto fields = split(line, ',');
        ASSERT_GE(fields.size(), 9u);
        const std::size_t last = fields.size() - 1;
        EXPECT_EQ(fields[0], id["id"]);
        EXPECT_EQ(fields[last - 5], id["checked"].dump());
        EXPECT_EQ(fields[last - 4], id["passed"].dump());
        EXPECT_EQ(fields[last - 3], id["failed"].dump());
        EXPECT_EQ(fields[last - 2], id["skipped"].dump());
        EXPECT_EQ(fields[last - 1], id["max_residual"].dump());
        EXPECT_EQ(fields[last], id["elapsed_ms"].dump());

        const std::string text = to_text(run);
        EXPECT_NE(text.find("checked=" + id["checked"].dump() + " passed=" + id["passed"].dump()),
                  std::string::npos);
        EXPECT_NE(text.find("max_residual=" + id["max_residual"].dump()), std::string::npos);
    }
    EXPECT_EQ(row, 3u);
    EXPECT_EQ(summary_line(run), "verdict pass: 3 identities, 83 instances checked, 0 failed");
}

TEST(Report, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Report, IdentityList) {
    const auto list = list_identities();
    const auto j = to_json(list);
    ASSERT_EQ(j.size(), 26u);
    EXPECT_EQ(j[10]["domain"], "n >= 4");
    EXPECT_NE(to_text(list).find("note:"), std::string::npos);
    EXPECT_EQ(to_csv(list).substr(0, 44), "id,name,anchor,arity,domain,mode,cost_class,");
    EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}
