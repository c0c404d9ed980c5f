#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "elocc/prob_vector.hpp"

namespace elocc {

// Text format: entries separated by whitespace or commas, each entry a
// decimal ("0.25") or a rational ("1/4"). Canonicalization is applied on read.

ProbVector parse_vector_text(std::string_view text);

// One vector per non-empty line.
std::vector<ProbVector> parse_vector_lines(std::string_view text);

// Whole file holds a single vector (entries may span lines).
ProbVector read_vector_file(const std::filesystem::path& path);

// Exact "p/q" entries, space separated; round-trips through parse_vector_text.
std::string vector_to_text(const ProbVector& v);

}  // namespace elocc
