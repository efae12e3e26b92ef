#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ussr/errors.hpp"
#include "ussr/instance.hpp"

namespace ussr {
namespace detail {

/// Line-oriented lexer over the UTF-8 text formats: strips '#' comments,
/// skips blank lines, reports 1-based line numbers.
class LineLexer {
 public:
  explicit LineLexer(std::istream& in) : in_(in) {}

  std::int64_t line_number() const { return lineno_; }

  /// Next non-empty line as whitespace-separated tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream split(line);
      std::string tok;
      while (split >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) throw ParseError(lineno_ + 1, "unexpected end of input, expected " + what);
    return tokens;
  }

 private:
  std::istream& in_;
  std::int64_t lineno_ = 0;
};

inline std::int64_t parse_int64(const std::string& tok, std::int64_t line) {
  std::int64_t value = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects leading '+'
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

inline std::int64_t parse_header_int(LineLexer& lex, const std::string& key) {
  const auto tokens = lex.require("'" + key + " <int>'");
  if (tokens.size() != 2 || tokens[0] != key)
    throw ParseError(lex.line_number(), "expected '" + key + " <int>'");
  return parse_int64(tokens[1], lex.line_number());
}

inline void expect_version(LineLexer& lex, const std::string& tag) {
  const auto tokens = lex.require("'" + tag + " v1'");
  if (tokens.size() != 2 || tokens[0] != tag || tokens[1] != "v1")
    throw ParseError(lex.line_number(), "unknown version tag, expected '" + tag + " v1'");
}

}  // namespace detail

/// First meaningful token of the stream ("USSR", "UUSSR", "ADVICE", ...),
/// without consuming it for the real parser. Callers rewind the stream.
inline std::string peek_format(std::istream& in) {
  detail::LineLexer lex(in);
  std::vector<std::string> tokens;
  if (!lex.next(tokens)) throw ParseError(1, "empty input");
  return tokens[0];
}

inline USSRInstance read_ussr(std::istream& in) {
  detail::LineLexer lex(in);
  detail::expect_version(lex, "USSR");
  USSRInstance inst;
  inst.k = detail::parse_header_int(lex, "k");
  if (inst.k < 1) throw ParseError(lex.line_number(), "k must be a positive integer");
  const auto tokens = lex.require("'terms ...'");
  if (tokens[0] != "terms")
    throw ParseError(lex.line_number(), "expected 'terms ...'");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
      throw ParseError(lex.line_number(),
                       "term '" + tok + "' must be a sign glued to a value, e.g. +4");
    const std::int64_t value = detail::parse_int64(tok.substr(1), lex.line_number());
    if (value < 1 || value > inst.k)
      throw ParseError(lex.line_number(),
                       "term value " + std::to_string(value) + " outside [1, " +
                           std::to_string(inst.k) + "]");
    inst.terms.push_back({tok[0] == '+' ? +1 : -1, value});
  }
  std::vector<std::string> extra;
  if (lex.next(extra)) throw ParseError(lex.line_number(), "unexpected trailing content");
  return inst;
}

inline UUSSRInstance read_uussr(std::istream& in) {
  detail::LineLexer lex(in);
  detail::expect_version(lex, "UUSSR");
  const std::int64_t k = detail::parse_header_int(lex, "k");
  if (k < 1) throw ParseError(lex.line_number(), "k must be a positive integer");
  UUSSRInstance inst = zero_uussr(k);
  const auto tokens = lex.require("'delta ...'");
  if (tokens[0] != "delta")
    throw ParseError(lex.line_number(), "expected 'delta ...'");
  if (tokens.size() - 1 != inst.basis.size())
    throw ParseError(lex.line_number(),
                     "delta has " + std::to_string(tokens.size() - 1) + " values, basis of k=" +
                         std::to_string(k) + " needs " + std::to_string(inst.basis.size()));
  for (std::size_t j = 0; j + 1 < tokens.size(); ++j)
    inst.delta[j] = detail::parse_int64(tokens[j + 1], lex.line_number());
  std::vector<std::string> extra;
  if (lex.next(extra)) throw ParseError(lex.line_number(), "unexpected trailing content");
  return inst;
}

inline void write_ussr(std::ostream& out, const USSRInstance& inst) {
  out << "USSR v1\n";
  out << "k " << inst.k << "\n";
  out << "terms";
  for (const Term& t : inst.terms) out << ' ' << (t.sign > 0 ? '+' : '-') << t.value;
  out << "\n";
}

inline void write_uussr(std::ostream& out, const UUSSRInstance& inst) {
  out << "UUSSR v1\n";
  out << "k " << inst.k << "\n";
  out << "delta";
  for (std::int64_t d : inst.delta) out << ' ' << d;
  out << "\n";
}

}  // namespace ussr
