#pragma once

/**
 * @file io.hpp
 * @brief JSON input files, number formatting and report serialization
 *        shared by the command-line front end.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyrel/chebyshev.hpp"
#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/errors.hpp"
#include "fuzzyrel/learning.hpp"
#include "fuzzyrel/minmax_dual.hpp"
#include "fuzzyrel/rules.hpp"

namespace fuzzyrel::cli {

using nlohmann::json;

enum class OutputFormat { text, json };

enum ExitCode : int { ok = 0, inconsistent = 1, disagreement = 1, input_error = 2, budget_exceeded = 3 };

struct Options {
    double tolerance = 1e-9;
    std::size_t max_enumeration = default_enumeration_cap;
    OutputFormat format = OutputFormat::text;
    bool skip_minimal = false;
    ApproximationChoice approximation = ApproximationChoice::greatest;
    SolutionChoice solution = SolutionChoice::greatest;

    Tolerance tol() const { return Tolerance{tolerance}; }
};

/// Raised for malformed input files; the message names the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- number formatting ----

/// Up to 9 fractional digits, trailing zeros trimmed.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

inline double round9(double v) {
    const double r = std::round(v * 1e9) / 1e9;
    return r == 0.0 ? 0.0 : r;
}

inline std::string format_vector(const UnitVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_number(v[i]);
    }
    return s + "]";
}

inline std::string format_matrix(const UnitMatrix& m, const std::string& indent) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) s += indent + format_vector(m.row(i)) + "\n";
    return s;
}

inline json to_json(double v) { return round9(v); }

inline json to_json(const UnitVector& v) {
    json a = json::array();
    for (double x : v) a.push_back(round9(x));
    return a;
}

inline json to_json(const std::vector<UnitVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline json to_json(const std::vector<double>& vs) {
    json a = json::array();
    for (double v : vs) a.push_back(round9(v));
    return a;
}

inline json to_json(const UnitMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- parsing ----

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline const json& field(const json& obj, const char* name, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + " must be an object");
    const auto it = obj.find(name);
    if (it == obj.end()) throw InputError(where + ": missing field '" + name + "'");
    return *it;
}

inline std::vector<double> parse_numbers(const json& j, const std::string& name) {
    if (!j.is_array() || j.empty()) throw InputError("field '" + name + "' must be a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw InputError("field '" + name + "' entry " + std::to_string(i) + " is not a number");
        const double v = j[i].get<double>();
        if (!(v >= 0.0 && v <= 1.0))
            throw InputError("field '" + name + "' entry " + std::to_string(i) + " lies outside [0,1]");
        out.push_back(v);
    }
    return out;
}

inline UnitVector parse_vector(const json& j, const std::string& name) { return UnitVector(parse_numbers(j, name)); }

inline UnitMatrix parse_matrix(const json& j, const std::string& name) {
    if (!j.is_array() || j.empty()) throw InputError("field '" + name + "' must be a non-empty array of rows");
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(parse_numbers(j[i], name + "[" + std::to_string(i) + "]"));
        if (rows.back().size() != rows.front().size())
            throw InputError("field '" + name + "' is ragged at row " + std::to_string(i));
    }
    return UnitMatrix::from_rows(rows);
}

inline std::vector<UnitVector> parse_vector_list(const json& j, const std::string& name) {
    if (!j.is_array() || j.empty()) throw InputError("field '" + name + "' must be a non-empty array of rows");
    std::vector<UnitVector> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_vector(j[i], name + "[" + std::to_string(i) + "]"));
        if (out.back().size() != out.front().size())
            throw InputError("field '" + name + "' is ragged at row " + std::to_string(i));
    }
    return out;
}

inline SystemProblem parse_problem(const json& j) {
    UnitMatrix m = parse_matrix(field(j, "matrix", "problem"), "matrix");
    UnitVector rhs = parse_vector(field(j, "rhs", "problem"), "rhs");
    if (rhs.size() != m.rows())
        throw InputError("field 'rhs' has length " + std::to_string(rhs.size()) + " but 'matrix' has " +
                         std::to_string(m.rows()) + " rows");
    Composition kind = Composition::maxmin;
    if (const auto it = j.find("kind"); it != j.end()) {
        if (*it == "maxmin")
            kind = Composition::maxmin;
        else if (*it == "minmax")
            kind = Composition::minmax;
        else
            throw InputError("field 'kind' must be \"maxmin\" or \"minmax\"");
    }
    return {std::move(m), std::move(rhs), kind};
}

inline TrainingSet parse_training(const json& j) {
    auto in = parse_vector_list(field(j, "inputs", "training file"), "inputs");
    auto out = parse_vector_list(field(j, "outputs", "training file"), "outputs");
    if (in.size() != out.size())
        throw InputError("fields 'inputs' and 'outputs' have different numbers of rows");
    return {std::move(in), std::move(out)};
}

inline std::vector<RuleTrainingInstance> parse_rules(const json& j) {
    const json& list = j.is_object() ? field(j, "instances", "rules file") : j;
    if (!list.is_array() || list.empty()) throw InputError("field 'instances' must be a non-empty array");
    std::vector<RuleTrainingInstance> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "instances[" + std::to_string(i) + "]";
        UnitMatrix g = parse_matrix(field(list[i], "gamma", where), where + ".gamma");
        UnitVector y = parse_vector(field(list[i], "target", where), where + ".target");
        if (g.rows() != y.size()) throw InputError("field '" + where + ".target' length differs from gamma rows");
        if (!out.empty() && g.cols() != out.front().gamma.cols())
            throw InputError("field '" + where + ".gamma' has a different column count");
        out.emplace_back(std::move(g), std::move(y));
    }
    return out;
}

}  // namespace fuzzyrel::cli
