#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ussr/advice_basis.hpp"
#include "ussr/advice_ltf.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance_io.hpp"

namespace ussr {

using AdviceVariant = std::variant<LtfAdvice, BasisAdvice>;

inline std::string advice_kind(const AdviceVariant& adv) {
  return std::holds_alternative<LtfAdvice>(adv) ? "ltf" : "basis";
}

inline std::string advice_method(const AdviceVariant& adv) {
  if (const auto* ltf = std::get_if<LtfAdvice>(&adv)) return ltf_method_name(ltf->method);
  return "lightest";
}

inline const DomainSpec& advice_domain(const AdviceVariant& adv) {
  if (const auto* ltf = std::get_if<LtfAdvice>(&adv)) return ltf->domain;
  return std::get<BasisAdvice>(adv).domain;
}

namespace detail {

inline BigInt parse_bigint(const std::string& tok, std::int64_t line) {
  if (tok.empty()) throw ParseError(line, "expected an integer");
  std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (start == tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError(line, "expected an integer, got '" + tok + "'");
  return BigInt(tok);
}

inline Rational parse_fraction(const std::string& tok, std::int64_t line) {
  const std::size_t slash = tok.find('/');
  if (slash == std::string::npos)
    throw ParseError(line, "expected '<num>/<den>', got '" + tok + "'");
  const BigInt num = parse_bigint(tok.substr(0, slash), line);
  const BigInt den = parse_bigint(tok.substr(slash + 1), line);
  if (den <= 0) throw ParseError(line, "fraction denominator must be positive");
  return Rational(num, den);
}

/// Split a token list (past the leading keyword) into ';'-separated groups.
inline std::vector<std::vector<std::string>> split_groups(
    const std::vector<std::string>& tokens, std::int64_t line) {
  std::vector<std::vector<std::string>> groups(1);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] == ";")
      groups.emplace_back();
    else
      groups.back().push_back(tokens[i]);
  }
  if (groups.back().empty()) groups.pop_back();
  for (const auto& g : groups)
    if (g.empty()) throw ParseError(line, "empty ';'-separated group");
  return groups;
}

}  // namespace detail

inline void write_advice(std::ostream& out, const LtfAdvice& adv) {
  out << "ADVICE v1\n";
  out << "kind ltf\n";
  out << "k " << adv.domain.k << "\n";
  out << "B " << adv.domain.B << "\n";
  out << "method " << ltf_method_name(adv.method) << "\n";
  out << "weights";
  for (const BigInt& u : adv.weights) out << ' ' << u;
  out << "\n";
  if (adv.method == LtfMethod::round && adv.eps_min) {
    out << "# provenance: lambda " << adv.lambda << "\n";
    out << "# provenance: eps_lo " << dyadic_to_decimal(adv.eps_min->lo) << "\n";
    out << "# provenance: eps_hi " << dyadic_to_decimal(adv.eps_min->hi) << "\n";
  }
  for (const auto& row : adv.tight_constraints) {
    out << "# provenance: tight";
    for (std::int64_t v : row) out << ' ' << v;
    out << "\n";
  }
}

inline void write_advice(std::ostream& out, const BasisAdvice& adv) {
  out << "ADVICE v1\n";
  out << "kind basis\n";
  out << "k " << adv.domain.k << "\n";
  out << "B " << adv.domain.B << "\n";
  out << "Pmant " << adv.p_mant << "\n";
  out << "Pdrop " << adv.p_drop << "\n";
  out << "basis";
  for (std::size_t i = 0; i < adv.rows.size(); ++i) {
    if (i > 0) out << " ;";
    for (std::int64_t v : adv.rows[i]) out << ' ' << v;
  }
  out << "\n";
  out << "values";
  const BigInt den = BigInt(1) << adv.p_mant;
  for (std::size_t i = 0; i < adv.values.size(); ++i) {
    if (i > 0) out << " ;";
    out << ' ' << adv.values[i].beta_num << '/' << den << ' ' << adv.values[i].e;
  }
  out << "\n";
  if (adv.inverse) {
    out << "inverse";
    for (std::size_t i = 0; i < adv.inverse->size(); ++i) {
      if (i > 0) out << " ;";
      for (const Rational& r : (*adv.inverse)[i])
        out << ' ' << numerator(r) << '/' << denominator(r);
    }
    out << "\n";
  }
}

inline void write_advice(std::ostream& out, const AdviceVariant& adv) {
  std::visit([&](const auto& a) { write_advice(out, a); }, adv);
}

inline AdviceVariant read_advice(std::istream& in) {
  detail::LineLexer lex(in);
  detail::expect_version(lex, "ADVICE");

  auto tokens = lex.require("'kind ltf|basis'");
  if (tokens.size() != 2 || tokens[0] != "kind" ||
      (tokens[1] != "ltf" && tokens[1] != "basis"))
    throw ParseError(lex.line_number(), "expected 'kind ltf' or 'kind basis'");
  const bool is_ltf = tokens[1] == "ltf";

  DomainSpec dom;
  dom.k = detail::parse_header_int(lex, "k");
  dom.B = detail::parse_header_int(lex, "B");
  if (dom.k < 1 || dom.B < 1)
    throw ParseError(lex.line_number(), "k and B must be positive integers");
  const std::size_t arity = static_cast<std::size_t>(square_free_count(dom.k));

  if (is_ltf) {
    LtfAdvice adv;
    adv.domain = dom;
    tokens = lex.require("'method round|lp'");
    if (tokens.size() != 2 || tokens[0] != "method" ||
        (tokens[1] != "round" && tokens[1] != "lp"))
      throw ParseError(lex.line_number(), "expected 'method round' or 'method lp'");
    adv.method = tokens[1] == "round" ? LtfMethod::round : LtfMethod::lp;
    tokens = lex.require("'weights ...'");
    if (tokens[0] != "weights")
      throw ParseError(lex.line_number(), "expected 'weights ...'");
    if (tokens.size() - 1 != arity)
      throw ParseError(lex.line_number(),
                       "weights arity " + std::to_string(tokens.size() - 1) +
                           " does not match basis size " + std::to_string(arity));
    for (std::size_t j = 1; j < tokens.size(); ++j)
      adv.weights.push_back(detail::parse_bigint(tokens[j], lex.line_number()));
    std::vector<std::string> extra;
    if (lex.next(extra)) throw ParseError(lex.line_number(), "unexpected trailing content");
    return adv;
  }

  BasisAdvice adv;
  adv.domain = dom;
  adv.p_mant = detail::parse_header_int(lex, "Pmant");
  adv.p_drop = detail::parse_header_int(lex, "Pdrop");
  if (adv.p_mant < 1 || adv.p_drop < 0)
    throw ParseError(lex.line_number(), "Pmant must be >= 1 and Pdrop >= 0");

  tokens = lex.require("'basis ...'");
  if (tokens[0] != "basis") throw ParseError(lex.line_number(), "expected 'basis ...'");
  for (const auto& group : detail::split_groups(tokens, lex.line_number())) {
    if (group.size() != arity)
      throw ParseError(lex.line_number(), "basis row arity does not match basis size");
    std::vector<std::int64_t> row;
    for (const auto& tok : group) row.push_back(detail::parse_int64(tok, lex.line_number()));
    adv.rows.push_back(std::move(row));
  }
  if (adv.rows.size() != arity)
    throw ParseError(lex.line_number(), "expected " + std::to_string(arity) + " basis rows");

  tokens = lex.require("'values ...'");
  if (tokens[0] != "values") throw ParseError(lex.line_number(), "expected 'values ...'");
  const BigInt expected_den = BigInt(1) << adv.p_mant;
  for (const auto& group : detail::split_groups(tokens, lex.line_number())) {
    if (group.size() != 2)
      throw ParseError(lex.line_number(), "each value is '<num>/<den> <e>'");
    const std::size_t slash = group[0].find('/');
    if (slash == std::string::npos)
      throw ParseError(lex.line_number(), "expected '<num>/<den>', got '" + group[0] + "'");
    BasisValue value;
    value.beta_num = detail::parse_bigint(group[0].substr(0, slash), lex.line_number());
    const BigInt den = detail::parse_bigint(group[0].substr(slash + 1), lex.line_number());
    if (den != expected_den)
      throw ParseError(lex.line_number(), "value denominator must be 2^Pmant");
    value.e = detail::parse_int64(group[1], lex.line_number());
    adv.values.push_back(std::move(value));
  }
  if (adv.values.size() != arity)
    throw ParseError(lex.line_number(), "expected " + std::to_string(arity) + " values");

  std::vector<std::string> maybe_inverse;
  if (lex.next(maybe_inverse)) {
    if (maybe_inverse[0] != "inverse")
      throw ParseError(lex.line_number(), "expected 'inverse ...' or end of file");
    RatMat inv;
    for (const auto& group : detail::split_groups(maybe_inverse, lex.line_number())) {
      if (group.size() != arity)
        throw ParseError(lex.line_number(), "inverse row arity does not match basis size");
      RatVec row;
      for (const auto& tok : group) row.push_back(detail::parse_fraction(tok, lex.line_number()));
      inv.push_back(std::move(row));
    }
    if (inv.size() != arity)
      throw ParseError(lex.line_number(), "expected " + std::to_string(arity) + " inverse rows");
    adv.inverse = std::move(inv);
    std::vector<std::string> extra;
    if (lex.next(extra)) throw ParseError(lex.line_number(), "unexpected trailing content");
  }
  return adv;
}

}  // namespace ussr
