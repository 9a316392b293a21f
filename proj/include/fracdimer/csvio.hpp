// CSV serialization of sweep records: fixed 12-column header, 12 significant
// digits, '\n' line endings; strict reader for the same format.
#pragma once

#include <string>
#include <vector>

#include "fracdimer/sweep.hpp"

namespace fracdimer {

extern const char* const kCsvHeader;  // column names, no newline

std::string to_csv(const std::vector<ResourceRecord>& records);
void write_csv(const std::vector<ResourceRecord>& records,
               const std::string& path);  // io_error with path context

std::vector<ResourceRecord> parse_csv(const std::string& text);  // parse_error
std::vector<ResourceRecord> read_csv(const std::string& path);

}  // namespace fracdimer
