#include "invheat/analysis/error_table.hpp"

#include <algorithm>
#include <cmath>

#include "invheat/errors.hpp"

namespace invheat::analysis {

ErrorRow make_row(std::vector<double> coords, double exact, double approximate) {
    ErrorRow r{std::move(coords), exact, approximate, std::abs(exact - approximate), std::nullopt};
    if (exact != 0.0) r.relative = r.error / std::abs(exact);
    return r;
}

double ErrorTable::max_error() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.error);
    return m;
}

std::optional<double> ErrorTable::max_relative() const {
    std::optional<double> m;
    for (const auto& r : rows) {
        if (r.relative && (!m || *r.relative > *m)) m = r.relative;
    }
    return m;
}

ErrorTable error_table(std::vector<std::string> coord_names, const std::vector<std::vector<double>>& coords,
                       std::span<const double> approximate,
                       const std::function<double(std::span<const double>)>& exact) {
    if (coords.size() != approximate.size()) throw DomainError("error table: coordinate and value counts differ");
    ErrorTable t;
    t.coord_names = std::move(coord_names);
    t.rows.reserve(coords.size());
    for (std::size_t r = 0; r < coords.size(); ++r) {
        if (coords[r].size() != t.coord_names.size()) throw DomainError("error table: wrong coordinate arity");
        t.rows.push_back(make_row(coords[r], exact(coords[r]), approximate[r]));
    }
    return t;
}

}  // namespace invheat::analysis
