#ifndef MIXDIMER_TABLE_HPP
#define MIXDIMER_TABLE_HPP

// Column tables and their CSV / JSON encodings. Numbers are written with
// 17 significant digits so both encodings round-trip exactly.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "mixdimer/errors.hpp"
#include "mixdimer/grid.hpp"

namespace mixdimer {

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw InvalidParameter("row width does not match the header");
        rows.push_back(std::move(row));
    }
};

/// (x, y, value) rows in row-major order: y outer, x inner.
inline Table grid_table(const Grid2D& g) {
    Table t{{g.x.name, g.y.name, g.value_name}, {}};
    t.rows.reserve(g.values.size());
    for (std::size_t iy = 0; iy < g.ny(); ++iy)
        for (std::size_t ix = 0; ix < g.nx(); ++ix) t.rows.push_back({g.x.values[ix], g.y.values[iy], g.at(ix, iy)});
    return t;
}

inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (const double* d = std::get_if<double>(&row[i]))
                os << format_number(*d);
            else
                os << std::get<std::string>(row[i]);
        }
        os << '\n';
    }
}

inline Table read_csv(std::istream& is) {
    const auto split = [](const std::string& line) {
        std::vector<std::string> parts;
        std::string cur;
        std::istringstream ss(line);
        while (std::getline(ss, cur, ',')) parts.push_back(cur);
        if (!line.empty() && line.back() == ',') parts.emplace_back();
        return parts;
    };
    Table t;
    std::string line;
    if (!std::getline(is, line)) return t;
    t.columns = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Cell> row;
        for (const auto& field : split(line)) {
            char* end = nullptr;
            const double v = std::strtod(field.c_str(), &end);
            if (!field.empty() && end == field.c_str() + field.size())
                row.emplace_back(v);
            else
                row.emplace_back(field);
        }
        t.add_row(std::move(row));
    }
    return t;
}

inline nlohmann::json to_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            if (const double* d = std::get_if<double>(&c))
                r.push_back(std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(nullptr));
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(r));
    }
    return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

inline Table table_from_json(const nlohmann::json& j) {
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : r) {
            if (c.is_null())
                row.emplace_back(std::nan(""));
            else if (c.is_number())
                row.emplace_back(c.get<double>());
            else
                row.emplace_back(c.get<std::string>());
        }
        t.add_row(std::move(row));
    }
    return t;
}

} // namespace mixdimer

#endif
