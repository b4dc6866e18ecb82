#include "topecycle/io.hpp"

#include <fstream>
#include <sstream>

namespace topecycle {

namespace {

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

} // namespace

Arrangement parse_arrangement_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int dim = -1;
  long long field_d = -1;
  bool have_field = false;
  std::vector<Vec> normals;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string kw;
    if (!(ls >> kw)) continue;
    auto bad = [&](const std::string& what) {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": " + what);
    };
    if (kw == "dim") {
      if (dim >= 0) bad("duplicate dim");
      if (!(ls >> dim) || dim <= 0) bad("dim needs a positive integer");
    } else if (kw == "field") {
      if (have_field) bad("duplicate field");
      std::string which;
      if (!(ls >> which)) bad("missing field kind");
      if (which == "rational") {
        field_d = 0;
      } else if (which == "quadratic") {
        if (!(ls >> field_d) || field_d < 2) bad("quadratic field needs d >= 2");
        if (!Scalar::is_square_free(field_d))
          fail(Errc::UnsupportedField,
               "line " + std::to_string(lineno) + ": d must be square-free");
      } else {
        bad("field must be 'rational' or 'quadratic <d>'");
      }
      have_field = true;
    } else if (kw == "normal") {
      if (dim < 0 || !have_field) bad("normal before dim/field header");
      Vec v;
      std::string tok;
      while (ls >> tok) v.push_back(Scalar::parse(tok, field_d));
      if (int(v.size()) != dim) bad("normal needs exactly dim coefficients");
      normals.push_back(std::move(v));
    } else {
      bad("unknown keyword '" + kw + "'");
    }
  }
  if (dim < 0) fail(Errc::ParseError, "missing dim header");
  if (!have_field) fail(Errc::ParseError, "missing field header");
  if (normals.empty()) fail(Errc::ParseError, "no normals");
  return Arrangement(dim, field_d, std::move(normals));
}

std::string write_arrangement(const Arrangement& a) {
  std::ostringstream out;
  out << "dim " << a.dim() << "\n";
  if (a.field_d() == 0) {
    out << "field rational\n";
  } else {
    out << "field quadratic " << a.field_d() << "\n";
  }
  for (const auto& h : a.hyperplanes()) {
    out << "normal";
    for (const auto& c : h.normal) out << " " << c.str();
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot write " + path);
  out << content;
  if (!out) fail(Errc::IoError, "write failed for " + path);
}

Arrangement read_arrangement(const std::string& path) {
  return parse_arrangement_text(read_file(path));
}

} // namespace topecycle
