#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "invheat/analysis/error_table.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::analysis {

/// Deterministic text for a number: %.12g, "nan"/"inf" spelled out.
std::string format_number(double v);

/// Header row plus data rows, comma separated, '\n' line ends. Fields are
/// written verbatim (the tables here never contain commas or quotes).
struct CsvDocument {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
    std::string to_string() const;
};

CsvDocument to_csv(const ErrorTable& table);

/// Columns t, x, u in row-major order over the field.
CsvDocument field_csv(const spectral::TemperatureField& u);

/// Columns t, Approximate.
CsvDocument trajectory_csv(const std::vector<double>& times, const std::vector<double>& values);

/// Writes the document; throws Error when the file cannot be written.
void write_csv(const std::filesystem::path& path, const CsvDocument& doc);

}  // namespace invheat::analysis
