#include "vnauq/sample_csv.hpp"

#include <algorithm>
#include <sstream>

namespace vnauq {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        cells.push_back("");
    return cells;
}

} // namespace

int SampleTable::find(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

SampleTable parse_sample_csv(const std::string& text) {
    SampleTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        last_line = line_no;

        const std::vector<std::string> cells = split_csv(line);
        if (!have_header) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].empty())
                    throw ParseError("empty header name", line_no, c + 1);
                if (table.find(cells[c]) >= 0)
                    throw ParseError("duplicate header '" + cells[c] + "'", line_no, c + 1);
                table.names.push_back(cells[c]);
            }
            table.columns.resize(table.names.size());
            have_header = true;
            continue;
        }

        if (cells.size() != table.names.size())
            throw ParseError("ragged row: expected " + std::to_string(table.names.size()) +
                                 " cells, got " + std::to_string(cells.size()),
                             line_no);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::size_t consumed = 0;
            double value = 0.0;
            try {
                value = std::stod(cells[c], &consumed);
            } catch (const std::exception&) {
                throw ParseError("non-numeric cell '" + cells[c] + "'", line_no, c + 1);
            }
            if (consumed != cells[c].size())
                throw ParseError("non-numeric cell '" + cells[c] + "'", line_no, c + 1);
            table.columns[c].values.push_back(value);
        }
    }

    if (!have_header)
        throw ParseError("empty table: no header row", last_line ? last_line : 1);
    const std::size_t rows = table.columns.empty() ? 0 : table.columns[0].size();
    if (rows == 0)
        throw ParseError("empty table: header without data rows", last_line);
    if (rows < 2)
        throw ParseError("need at least 2 data rows, got " + std::to_string(rows), last_line);
    return table;
}

} // namespace vnauq
