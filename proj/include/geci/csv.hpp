#pragma once

#include <string>
#include <vector>

#include "geci/data.hpp"

namespace geci {

/// Minimal CSV: comma-separated, first row is the header, all cells numeric.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

/// Dataset from a CSV with a named target column; every other column is
/// a feature. Task is classification when all target values are 0/1.
Dataset dataset_from_csv(const std::string& path, const std::string& target_column);

void write_dataset_csv(const Dataset& data, const std::string& path);

/// Round-trippable double formatting (17 significant digits).
std::string format_double(double v);

}  // namespace geci
