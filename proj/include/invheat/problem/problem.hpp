#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "invheat/problem/fields.hpp"

namespace invheat::problem {

/// One instance of the identification problem
///
///     u_t = a(t) u_xx + F(x,t),  u(x,0) = φ(x),
///     u(0,t) = u(1,t),  u_x(1,t) = 0,  ∫₀¹ u(x,t) dx = E(t),
///
/// on [0,1] x [0,T]. The exact pair is optional and only used for error
/// reporting.
struct ProblemData {
    ScalarField1D phi;
    SourceField source;
    TimeSignal energy;
    double horizon = 0.0;
    std::optional<TimeSignal> exact_a;
    std::optional<SourceField> exact_u;

    bool has_exact() const { return exact_a.has_value() && exact_u.has_value(); }
};

/// Parses the problem-file format:
///
///     # comment
///     phi = <expr in x>
///     F   = <expr in x, t>
///     E   = <expr in t>
///     T   = <constant expr>
///     exact_a = <expr in t>        (optional)
///     exact_u = <expr in x, t>     (optional)
///
/// Throws ParseError for syntax errors (line and in-line offset), unknown
/// identifiers or keys, duplicate or missing required keys, and T <= 0.
ProblemData parse_problem(std::string_view text);

/// Reads and parses a problem file. Throws ParseError on I/O failure too.
ProblemData load_problem(const std::filesystem::path& path);

/// Inverse of parse_problem for expression-defined problems. Throws
/// DomainError if a field was not built from an expression.
std::string format_problem(const ProblemData& p);

/// Path of the bundled numerical example.
std::filesystem::path bundled_example_path();

}  // namespace invheat::problem
