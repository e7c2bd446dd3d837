#pragma once

#include "bikei/table.hpp"

#include <iosfwd>
#include <string>

namespace bikei {

// Text format: first line is the element count n, then n lines of 2n
// space-separated integers (under block row, then over block row).
// `#` starts a comment line; blank lines are skipped. An optional leading
// `n=<k>` cardinality line is accepted so that command output can be fed
// back in directly.
PresentationMatrix readMatrix(std::istream& in);
PresentationMatrix readMatrixString(const std::string& text);
PresentationMatrix readMatrixFile(const std::string& path);

// Same formats, but every entry must be in 1..n.
BikeiTable readTable(std::istream& in);
BikeiTable readTableString(const std::string& text);
BikeiTable readTableFile(const std::string& path);

std::string writeTable(const TableData& t);

std::string readWholeFile(const std::string& path);

} // namespace bikei
