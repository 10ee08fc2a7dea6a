#pragma once

#include <iosfwd>
#include <string>

#include "hamdisc/core.hpp"
#include "hamdisc/weights.hpp"

namespace hamdisc {

// Shared code file format: first line "n=<dimension>", then one word per line
// as an n-character string over {0,1}. Duplicate lines are an error.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

// Weight file: first line "n=<dimension>", then n lines with one rational
// each ("a/b", integer, or finite decimal).
WeightVector read_weights(std::istream& in);
WeightVector read_weights_file(const std::string& path);

// Weight selector used by the CLI and objective strings:
//   uniform | hemisphere | cutoff:BETA | file:PATH
WeightVector weights_from_spec(const std::string& spec, int n);

}  // namespace hamdisc
