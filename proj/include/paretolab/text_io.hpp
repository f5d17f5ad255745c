#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "paretolab/errors.hpp"
#include "paretolab/scalar.hpp"

namespace paretolab::detail {

/// Line-oriented reader for the instance text formats: strips '#' comments,
/// skips blank lines, tracks the 1-based line number for error reporting.
struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::size_t a = raw.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      std::size_t b = raw.find_last_not_of(" \t\r");
      out = raw.substr(a, b - a + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, msg); }
};

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

template <typename T>
T parse_or_fail(const LineReader& r, const std::string& tok) {
  T v{};
  if (!parse_scalar(tok, v)) r.fail("bad scalar '" + tok + "'");
  return v;
}

}  // namespace paretolab::detail
