#include "hypx/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hypx {

WeightedSeries<Rational> parse_series_description(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw DomainError(std::string("malformed series description: ") + ex.what());
    }
    auto rationals = [](const nlohmann::json& arr) {
        std::vector<Rational> out;
        for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
        return out;
    };
    WeightedSeries<Rational> s;
    if (j.contains("upper")) s.upper = rationals(j["upper"]);
    if (j.contains("lower")) s.lower = rationals(j["lower"]);
    if (j.contains("weight")) s.weight = RatPoly(rationals(j["weight"]));
    if (j.contains("scale")) s.scale = parse_rational(j["scale"].get<std::string>());
    return s;
}

std::string series_description_json(const WeightedSeries<Rational>& s) {
    nlohmann::ordered_json j;
    auto strings = [](const std::vector<Rational>& vals) {
        std::vector<std::string> out;
        out.reserve(vals.size());
        for (const auto& v : vals) out.push_back(to_string(v));
        return out;
    };
    j["upper"] = strings(s.upper);
    j["lower"] = strings(s.lower);
    j["weight"] = strings(s.weight.coefficients());
    j["scale"] = to_string(s.scale);
    return j.dump();
}

std::string to_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["k"] = r.k;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, val] : r.params) p[key] = val;
    j["params"] = p;
    j["order"] = r.order;
    j["mode"] = r.mode;
    j["pass"] = r.pass;
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (r.seed) j["seed"] = *r.seed;
    if (r.size_n) j["N"] = *r.size_n;
    if (r.size_m) j["m"] = *r.size_m;
    if (r.variant) j["variant"] = *r.variant;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string emit_report(const std::vector<VerificationReport>& reports,
                        const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        for (const auto& r : reports) os << to_json_line(r) << "\n";
        return os.str();
    }
    for (const auto& r : reports) {
        os << (r.pass ? "PASS " : "FAIL ") << r.identity;
        if (r.k) os << " k=" << r.k;
        if (r.size_n) os << " N=" << *r.size_n;
        if (r.size_m) os << " m=" << *r.size_m;
        if (r.variant) os << " variant=" << *r.variant;
        if (!r.params.empty()) {
            os << " [";
            bool first = true;
            for (const auto& [key, val] : r.params) {
                if (!first) os << ", ";
                os << key << "=" << val;
                first = false;
            }
            os << "]";
        }
        if (r.first_mismatch)
            os << " first_mismatch@" << r.first_mismatch->index << ": "
               << r.first_mismatch->lhs << " != " << r.first_mismatch->rhs;
        os << "\n";
    }
    return os.str();
}

}  // namespace hypx
