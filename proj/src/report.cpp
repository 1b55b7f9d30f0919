#include <arithid/report.hpp>

#include <sstream>
#include <stdexcept>

namespace arithid {

namespace {

// Shared number formatting so text, CSV and JSON carry the same digits.
std::string num(double x) { return nlohmann::json(x).dump(); }

nlohmann::json config_json(const RunReport& report) {
    const RangeConfig& c = report.config;
    nlohmann::json j;
    j["quadratic_max_n"] = c.quadratic_max_n;
    j["linear_max_n"] = c.linear_max_n;
    j["constant_max_n"] = c.constant_max_n;
    j["max_pair"] = c.max_pair;
    j["k_pair_max_n"] = c.k_pair_max_n;
    j["k_multiplier"] = c.k_multiplier;
    j["max_n"] = c.max_n ? nlohmann::json(*c.max_n) : nlohmann::json(nullptr);
    j["fail_fast"] = c.fail_fast;
    j["ids"] = report.ids;
    return j;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: " + s);
}

nlohmann::json to_json(const EvalValue& v) {
    if (const auto* x = std::get_if<Int>(&v)) {
        return *x;
    }
    if (const auto* r = std::get_if<ExactRational>(&v)) {
        return r->to_string();
    }
    const auto& a = std::get<ApproxInteger>(v);
    return {{"raw", a.raw}, {"nearest", a.nearest}, {"residual", a.residual}};
}

nlohmann::json to_json(const Inputs& in) {
    switch (in.arity) {
        case Arity::single_n: return {{"n", in.n}};
        case Arity::pair_mn: return {{"m", in.partner}, {"n", in.n}};
        case Arity::pair_kn: return {{"k", in.partner}, {"n", in.n}};
    }
    return {};
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& r : report.identities) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& f : r.failures) {
            nlohmann::json jf;
            jf["inputs"] = to_json(f.inputs);
            jf["lhs"] = f.lhs ? to_json(*f.lhs) : nlohmann::json(nullptr);
            jf["rhs"] = f.rhs ? to_json(*f.rhs) : nlohmann::json(nullptr);
            jf["residual"] = f.residual;
            if (!f.error.empty()) {
                jf["error"] = f.error;
            }
            failures.push_back(std::move(jf));
        }
        identities.push_back({
            {"id", r.id},
            {"name", r.name},
            {"anchor", r.anchor},
            {"checked", r.checked},
            {"passed", r.passed},
            {"failed", r.failed},
            {"skipped", r.skipped},
            {"max_residual", r.max_residual},
            {"elapsed_ms", r.elapsed_ms},
            {"failures", std::move(failures)},
        });
    }
    return {
        {"run", {{"config", config_json(report)}, {"started_at", report.started_at}}},
        {"identities", std::move(identities)},
        {"verdict", report.verdict_pass() ? "pass" : "fail"},
    };
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

std::string to_csv(const RunReport& report) {
    std::ostringstream os;
    os << "id,name,anchor,checked,passed,failed,skipped,max_residual,elapsed_ms\n";
    for (const auto& r : report.identities) {
        os << r.id << ',' << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << r.checked
           << ',' << r.passed << ',' << r.failed << ',' << r.skipped << ',' << num(r.max_residual)
           << ',' << num(r.elapsed_ms) << '\n';
    }
    return os.str();
}

std::string summary_line(const RunReport& report) {
    Int failed = 0;
    Int checked = 0;
    for (const auto& r : report.identities) {
        failed += r.failed;
        checked += r.checked;
    }
    std::ostringstream os;
    os << "verdict " << (report.verdict_pass() ? "pass" : "fail") << ": "
       << report.identities.size() << " identities, " << checked << " instances checked, "
       << failed << " failed";
    return os.str();
}

std::string to_text(const RunReport& report) {
    std::ostringstream os;
    for (const auto& r : report.identities) {
        os << r.id << ' ' << r.name << ": checked=" << r.checked << " passed=" << r.passed
           << " failed=" << r.failed << " skipped=" << r.skipped
           << " max_residual=" << num(r.max_residual) << " elapsed_ms=" << num(r.elapsed_ms);
        if (r.max_residual > kResidualWarning) {
            os << " WARNING residual above " << num(kResidualWarning);
        }
        os << '\n';
        for (const auto& f : r.failures) {
            os << "  FAIL " << f.inputs.to_string();
            if (f.lhs && f.rhs) {
                os << " lhs=" << to_string(*f.lhs) << " rhs=" << to_string(*f.rhs);
            }
            if (!f.error.empty()) {
                os << " error: " << f.error;
            }
            os << '\n';
        }
    }
    os << summary_line(report) << '\n';
    return os.str();
}

std::string render(const RunReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return to_text(report);
        case OutputFormat::json: return to_json(report).dump(2) + "\n";
        case OutputFormat::csv: return to_csv(report);
    }
    return {};
}

nlohmann::json to_json(const std::vector<IdentitySummary>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : list) {
        out.push_back({{"id", s.id},
                       {"name", s.name},
                       {"anchor", s.anchor},
                       {"arity", s.arity},
                       {"domain", s.domain},
                       {"mode", s.mode},
                       {"cost_class", s.cost_class},
                       {"note", s.note}});
    }
    return out;
}

std::string to_csv(const std::vector<IdentitySummary>& list) {
    std::ostringstream os;
    os << "id,name,anchor,arity,domain,mode,cost_class,note\n";
    for (const auto& s : list) {
        os << s.id << ',' << csv_field(s.name) << ',' << csv_field(s.anchor) << ','
           << csv_field(s.arity) << ',' << csv_field(s.domain) << ',' << s.mode << ','
           << s.cost_class << ',' << csv_field(s.note) << '\n';
    }
    return os.str();
}

std::string to_text(const std::vector<IdentitySummary>& list) {
    std::ostringstream os;
    for (const auto& s : list) {
        os << s.id << "  " << s.name << "  [" << s.mode << ", " << s.cost_class << ", "
           << s.domain << "]\n    " << s.anchor << '\n';
        if (!s.note.empty()) {
            os << "    note: " << s.note << '\n';
        }
    }
    return os.str();
}

std::string render(const std::vector<IdentitySummary>& list, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return to_text(list);
        case OutputFormat::json: return to_json(list).dump(2) + "\n";
        case OutputFormat::csv: return to_csv(list);
    }
    return {};
}

}  // namespace arithid
