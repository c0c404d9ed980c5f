#include "elocc/vector_io.hpp"

#include <fstream>
#include <sstream>

#include "elocc/errors.hpp"

namespace elocc {

namespace {

std::vector<Rational> tokenize(std::string_view text) {
  std::vector<Rational> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_rational(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  return out;
}

}  // namespace

ProbVector parse_vector_text(std::string_view text) {
  auto entries = tokenize(text);
  if (entries.empty()) fail(Errc::parse_error, "no vector entries found");
  return ProbVector::canonicalize(std::move(entries));
}

std::vector<ProbVector> parse_vector_lines(std::string_view text) {
  std::vector<ProbVector> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    auto entries = tokenize(line);
    if (!entries.empty()) out.push_back(ProbVector::canonicalize(std::move(entries)));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

ProbVector read_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_vector_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string vector_to_text(const ProbVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out << ' ';
    out << to_fraction(v[i]);
  }
  return out.str();
}

}  // namespace elocc
