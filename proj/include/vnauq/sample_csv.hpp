#pragma once

#include <string>
#include <vector>

#include "vnauq/stats.hpp"

namespace vnauq {

/// Named columns of samples, one SampleSet per uncertainty source or per
/// frequency bin. All columns have the same length (>= 2) and unique names.
struct SampleTable {
    std::vector<std::string> names;
    std::vector<SampleSet> columns;

    /// Index of a column by name, or -1.
    int find(const std::string& name) const;
};

/// Parses comma-separated samples: first non-comment row is the header,
/// the body is numeric with '.' decimals; '#' lines are comments. Errors
/// (ragged row, non-numeric cell, duplicate header, empty table) are
/// ParseError with line and, for cells, column.
SampleTable parse_sample_csv(const std::string& text);

} // namespace vnauq
