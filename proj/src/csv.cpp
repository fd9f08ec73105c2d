#include "geci/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geci/errors.hpp"

namespace geci {

int CsvTable::column(const std::string& name) const {
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == name) return int(j);
    return -1;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open CSV file: " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty CSV file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.header = split_line(line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != table.header.size())
            throw ConfigError("ragged CSV row in " + path);
        std::vector<double> row(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            try {
                std::size_t used = 0;
                row[j] = std::stod(cells[j], &used);
                if (used != cells[j].size()) throw std::invalid_argument(cells[j]);
            } catch (const std::exception&) {
                throw ConfigError("non-numeric CSV cell '" + cells[j] + "' in " + path);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Dataset dataset_from_csv(const std::string& path, const std::string& target_column) {
    const CsvTable table = read_csv(path);
    const int ty = table.column(target_column);
    if (ty < 0) throw ConfigError("target column '" + target_column + "' not found in " + path);
    Dataset data;
    data.p = table.header.empty() ? 0 : table.header.size() - 1;
    data.features.reserve(table.rows.size() * data.p);
    data.target.reserve(table.rows.size());
    bool binary = true;
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            if (int(j) != ty) data.features.push_back(row[j]);
        const double y = row[std::size_t(ty)];
        if (y != 0.0 && y != 1.0) binary = false;
        data.target.push_back(y);
    }
    data.task = binary && !data.target.empty() ? Task::classification : Task::regression;
    data.validate();
    return data;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_dataset_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot open output file: " + path);
    for (std::size_t j = 0; j < data.p; ++j) out << 'x' << (j + 1) << ',';
    out << "y\n";
    for (std::size_t i = 0; i < data.n(); ++i) {
        for (std::size_t j = 0; j < data.p; ++j) out << format_double(data.x(i, j)) << ',';
        out << format_double(data.target[i]) << '\n';
    }
}

}  // namespace geci
