#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace invheat::analysis {

/// One row in the layout "Exact, Approximate, Error, Relative Error", keyed
/// by its coordinates (t, or x and t).
struct ErrorRow {
    std::vector<double> coords;
    double exact = 0.0;
    double approximate = 0.0;
    double error = 0.0;               ///< |exact − approximate|
    std::optional<double> relative;   ///< error/|exact|; empty when exact is 0
};

ErrorRow make_row(std::vector<double> coords, double exact, double approximate);

struct ErrorTable {
    std::vector<std::string> coord_names;
    std::vector<ErrorRow> rows;

    double max_error() const;
    /// Largest defined relative error, empty if none is defined.
    std::optional<double> max_relative() const;
};

/// Rows for approximate[r] against exact(coords[r]). Throws DomainError on
/// length mismatch.
ErrorTable error_table(std::vector<std::string> coord_names, const std::vector<std::vector<double>>& coords,
                       std::span<const double> approximate,
                       const std::function<double(std::span<const double>)>& exact);

}  // namespace invheat::analysis
