#include "invheat/analysis/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "invheat/errors.hpp"

namespace invheat::analysis {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void CsvDocument::add(std::vector<std::string> row) {
    if (row.size() != header.size()) throw DomainError("csv row has the wrong number of fields");
    rows.push_back(std::move(row));
}

std::string CsvDocument::to_string() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += fields[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

CsvDocument to_csv(const ErrorTable& table) {
    CsvDocument doc;
    doc.header = table.coord_names;
    for (const char* h : {"Exact", "Approximate", "Error", "Relative Error"}) doc.header.emplace_back(h);
    for (const auto& r : table.rows) {
        std::vector<std::string> f;
        for (double c : r.coords) f.push_back(format_number(c));
        f.push_back(format_number(r.exact));
        f.push_back(format_number(r.approximate));
        f.push_back(format_number(r.error));
        f.push_back(r.relative ? format_number(*r.relative) : "undefined");
        doc.add(std::move(f));
    }
    return doc;
}

CsvDocument field_csv(const spectral::TemperatureField& u) {
    CsvDocument doc{{"t", "x", "u"}, {}};
    for (std::size_t j = 0; j < u.t.size(); ++j) {
        for (std::size_t i = 0; i < u.x.size(); ++i) {
            doc.add({format_number(u.t[j]), format_number(u.x[i]), format_number(u.values[j][i])});
        }
    }
    return doc;
}

CsvDocument trajectory_csv(const std::vector<double>& times, const std::vector<double>& values) {
    CsvDocument doc{{"t", "Approximate"}, {}};
    for (std::size_t j = 0; j < times.size(); ++j) doc.add({format_number(times[j]), format_number(values[j])});
    return doc;
}

void write_csv(const std::filesystem::path& path, const CsvDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << doc.to_string();
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace invheat::analysis
