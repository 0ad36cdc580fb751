#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "invheat/errors.hpp"
#include "invheat/problem/problem.hpp"

namespace invheat::problem {

namespace {

struct KeySpec {
    VariableSet vars;
    bool required;
};

const std::map<std::string, KeySpec, std::less<>>& key_specs() {
    static const std::map<std::string, KeySpec, std::less<>> specs{
        {"phi", {{true, false}, true}},      {"F", {{true, true}, true}},
        {"E", {{false, true}, true}},        {"T", {{false, false}, true}},
        {"exact_a", {{false, true}, false}}, {"exact_u", {{true, true}, false}},
    };
    return specs;
}

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t offset) {
    throw ParseError("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + msg,
                     line, offset);
}

}  // namespace

ProblemData parse_problem(std::string_view text) {
    std::map<std::string, Expression, std::less<>> exprs;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim_right(line);
        const std::size_t key_begin = skip_space(line, 0);
        if (key_begin == line.size()) {
            if (end == text.size()) break;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail("syntax error: expected 'key = expression'", line_no, line.size());
        const std::string_view key = trim_right(line.substr(key_begin, eq - key_begin));
        const auto spec = key_specs().find(key);
        if (spec == key_specs().end()) fail("unknown key '" + std::string(key) + "'", line_no, key_begin);
        if (exprs.count(key) != 0) fail("duplicate key '" + std::string(key) + "'", line_no, key_begin);

        const std::size_t expr_begin = skip_space(line, eq + 1);
        try {
            exprs.emplace(std::string(key), Expression::parse(line.substr(expr_begin), spec->second.vars));
        } catch (const ParseError& e) {
            fail(std::string(key) + ": " + e.what(), line_no, expr_begin + e.offset());
        }
        if (end == text.size()) break;
    }

    for (const auto& [key, spec] : key_specs()) {
        if (spec.required && exprs.count(key) == 0) {
            throw ParseError("missing required key '" + key + "'", 0, 0);
        }
    }

    const double horizon = exprs.at("T").evaluate(0.0, 0.0);
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ParseError("T must be a positive number, got " + std::to_string(horizon), 0, 0);
    }

    ProblemData p{
        ScalarField1D::from_expression(exprs.at("phi")),
        SourceField::from_expression(exprs.at("F")),
        TimeSignal::from_expression(exprs.at("E")),
        horizon,
        std::nullopt,
        std::nullopt,
    };
    if (auto it = exprs.find("exact_a"); it != exprs.end()) p.exact_a = TimeSignal::from_expression(it->second);
    if (auto it = exprs.find("exact_u"); it != exprs.end()) p.exact_u = SourceField::from_expression(it->second);
    return p;
}

ProblemData load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path.string() + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

std::string format_problem(const ProblemData& p) {
    if (!p.phi.expression() || !p.source.expression() || !p.energy.expression()) {
        throw DomainError("only expression-defined problems can be formatted");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p.horizon);
    std::string out;
    out += "phi = " + p.phi.expression()->to_string() + "\n";
    out += "F = " + p.source.expression()->to_string() + "\n";
    out += "E = " + p.energy.expression()->to_string() + "\n";
    out += std::string("T = ") + buf + "\n";
    if (p.exact_a && p.exact_a->expression()) out += "exact_a = " + p.exact_a->expression()->to_string() + "\n";
    if (p.exact_u && p.exact_u->expression()) out += "exact_u = " + p.exact_u->expression()->to_string() + "\n";
    return out;
}

std::filesystem::path bundled_example_path() {
    return std::filesystem::path(INVHEAT_DATA_DIR) / "paper_example.prob";
}

}  // namespace invheat::problem
