#pragma once

#include <string>

#include "topecycle/arrangement.hpp"

namespace topecycle {

// Arrangement text format:
//   dim <n>
//   field rational | quadratic <d>
//   normal <c1> ... <cn>        one line per hyperplane
// Coefficients are "p", "p/q", or "p/q+r/s*sqrt" ("-" for a negative sqrt
// part); blank lines and "#" comments are ignored.  Hyperplanes keep file
// order; normals are canonicalized on load and duplicates rejected.
Arrangement parse_arrangement_text(const std::string& text);
std::string write_arrangement(const Arrangement& a);

Arrangement read_arrangement(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace topecycle
