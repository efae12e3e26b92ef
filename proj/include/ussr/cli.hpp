#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ussr/advice_io.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance_io.hpp"
#include "ussr/min_gap.hpp"
#include "ussr/numtheory.hpp"
#include "ussr/oracle.hpp"
#include "ussr/verify.hpp"

namespace ussr {
namespace cli {

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(1, "cannot open file for writing: " + path);
  out << content;
}

/// Instance file of either format, normalized to the UUSSR form.
inline UUSSRInstance load_instance(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream peek(text);
  const std::string format = peek_format(peek);
  std::istringstream in(text);
  if (format == "USSR") return normalize(read_ussr(in));
  if (format == "UUSSR") return read_uussr(in);
  throw ParseError(1, "expected a 'USSR v1' or 'UUSSR v1' file, got '" + format + "'");
}

inline AdviceVariant load_advice(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_advice(in);
}

inline std::string show_sign(int sign) {
  return sign > 0 ? "+1" : (sign < 0 ? "-1" : "0");
}

}  // namespace detail

/// Run the command-line tool. Output goes to `out`/`err` so tests can drive
/// the exact binary surface in-process.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"exact sign decisions for signed sums of square roots, with "
               "per-k advice synthesis and verification"};
  app.require_subcommand(1);

  // sign
  auto* sign_cmd = app.add_subcommand("sign", "print the exact sign of an instance file");
  std::string sign_in;
  std::int64_t sign_max_bits = 0;
  sign_cmd->add_option("--in", sign_in, "instance file (USSR or UUSSR)")->required();
  sign_cmd->add_option("--max-bits", sign_max_bits, "cap on oracle precision in bits");

  // normalize
  auto* norm_cmd = app.add_subcommand("normalize", "rewrite a USSR file in UUSSR normal form");
  std::string norm_in, norm_out;
  norm_cmd->add_option("--in", norm_in, "USSR instance file")->required();
  norm_cmd->add_option("--out", norm_out, "UUSSR output file")->required();

  // zero
  auto* zero_cmd = app.add_subcommand("zero", "exact zero test for an instance file");
  std::string zero_in;
  zero_cmd->add_option("--in", zero_in, "instance file (USSR or UUSSR)")->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "square-free decomposition n = c^2 * s");
  std::int64_t dec_n = 0;
  dec_cmd->add_option("n", dec_n, "positive integer")->required();

  // min-gap
  auto* gap_cmd = app.add_subcommand("min-gap", "least nonzero |value| over a domain");
  DomainSpec gap_dom;
  gap_cmd->add_option("--k", gap_dom.k, "domain k")->required();
  gap_cmd->add_option("--B", gap_dom.B, "coefficient bound")->required();

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "synthesize advice for a domain");
  DomainSpec synth_dom;
  std::string synth_method, synth_out;
  synth_cmd->add_option("--k", synth_dom.k, "domain k")->required();
  synth_cmd->add_option("--B", synth_dom.B, "coefficient bound")->required();
  synth_cmd->add_option("--method", synth_method, "ltf-round | ltf-lp | basis")
      ->required()
      ->check(CLI::IsMember({"ltf-round", "ltf-lp", "basis"}));
  synth_cmd->add_option("--out", synth_out, "advice output file")->required();

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide an instance using advice");
  std::string decide_in, decide_advice;
  decide_cmd->add_option("--in", decide_in, "instance file")->required();
  decide_cmd->add_option("--advice", decide_advice, "advice file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "compare advice against the exact oracle");
  std::string verify_advice_path, verify_report_path;
  bool verify_exhaustive = false;
  std::int64_t verify_samples = -1;
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("--advice", verify_advice_path, "advice file")->required();
  verify_cmd->add_flag("--exhaustive", verify_exhaustive, "check every domain vector (default)");
  verify_cmd->add_option("--samples", verify_samples, "check N seeded samples instead");
  verify_cmd->add_option("--seed", verify_seed, "sampling seed");
  verify_cmd->add_option("--report", verify_report_path, "write the report file here");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "record oracle precision across a family");
  std::string bench_family, bench_out;
  std::int64_t bench_kmax = 0;
  std::uint64_t bench_seed = 0;
  bench_cmd->add_option("--family", bench_family, "primes | alternating-primes | random")
      ->required()
      ->check(CLI::IsMember({"primes", "alternating-primes", "random"}));
  bench_cmd->add_option("--k-max", bench_kmax, "largest k")->required();
  bench_cmd->add_option("--out", bench_out, "report output file")->required();
  bench_cmd->add_option("--seed", bench_seed, "seed for the random family");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a family instance file");
  std::string gen_family_name, gen_out;
  std::int64_t gen_k = 0;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--family", gen_family_name, "primes | alternating-primes | random")
      ->required()
      ->check(CLI::IsMember({"primes", "alternating-primes", "random"}));
  gen_cmd->add_option("--k", gen_k, "instance k")->required();
  gen_cmd->add_option("--seed", gen_seed, "seed for the random family");
  gen_cmd->add_option("--out", gen_out, "instance output file")->required();

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);

    if (*sign_cmd) {
      const UUSSRInstance inst = detail::load_instance(sign_in);
      std::optional<std::int64_t> cap;
      if (sign_cmd->count("--max-bits") != 0) cap = sign_max_bits;
      out << detail::show_sign(sign_exact(inst, cap)) << "\n";
      return exit_ok;
    }

    if (*norm_cmd) {
      std::istringstream in(detail::slurp(norm_in));
      const UUSSRInstance inst = normalize(read_ussr(in));
      std::ostringstream text;
      write_uussr(text, inst);
      detail::spill(norm_out, text.str());
      return exit_ok;
    }

    if (*zero_cmd) {
      out << (is_zero(detail::load_instance(zero_in)) ? "zero" : "nonzero") << "\n";
      return exit_ok;
    }

    if (*dec_cmd) {
      const SquareFreeDecomposition d = square_free_part(dec_n);
      out << d.n << " = " << d.core << "^2 * " << d.part << "\n";
      return exit_ok;
    }

    if (*gap_cmd) {
      const MinGap gap = min_gap(gap_dom);
      out << "eps_lo " << dyadic_to_decimal(gap.enclosure.lo) << "\n";
      out << "eps_hi " << dyadic_to_decimal(gap.enclosure.hi) << "\n";
      out << "witness";
      for (std::int64_t d : gap.witness.delta) out << ' ' << d;
      out << "\n";
      return exit_ok;
    }

    if (*synth_cmd) {
      AdviceVariant advice = [&]() -> AdviceVariant {
        if (synth_method == "ltf-round") return synth_round(synth_dom);
        if (synth_method == "ltf-lp") return synth_lp(synth_dom);
        return synth_basis(synth_dom).first;
      }();
      std::ostringstream text;
      write_advice(text, advice);
      detail::spill(synth_out, text.str());
      out << "wrote " << advice_kind(advice) << " advice (method " << advice_method(advice)
          << ") for k=" << synth_dom.k << " B=" << synth_dom.B << " to " << synth_out << "\n";
      return exit_ok;
    }

    if (*decide_cmd) {
      const UUSSRInstance inst = detail::load_instance(decide_in);
      const AdviceVariant advice = detail::load_advice(decide_advice);
      out << detail::show_sign(decide_with_advice(inst, advice)) << "\n";
      return exit_ok;
    }

    if (*verify_cmd) {
      if (verify_exhaustive && verify_samples >= 0)
        throw DomainError("verify: --exhaustive and --samples are mutually exclusive");
      const AdviceVariant advice = detail::load_advice(verify_advice_path);
      VerifyMode mode;
      if (verify_samples >= 0) {
        mode.exhaustive = false;
        mode.samples = verify_samples;
        mode.seed = verify_seed;
      }
      const VerificationReport report = verify_advice(advice, mode);
      if (!verify_report_path.empty()) {
        std::ostringstream text;
        write_verification_report(text, report);
        detail::spill(verify_report_path, text.str());
      }
      out << (report.verified() ? "verified" : "DISAGREE") << ": " << report.agree << "/"
          << report.total << " agree\n";
      return report.verified() ? exit_ok : exit_disagree;
    }

    if (*bench_cmd) {
      const Family family = parse_family(bench_family);
      const auto records = bench_precision(family, bench_kmax, bench_seed);
      std::ostringstream text;
      write_bench_report(text, family, bench_kmax, records);
      detail::spill(bench_out, text.str());
      out << "wrote " << records.size() << " bench records to " << bench_out << "\n";
      return exit_ok;
    }

    if (*gen_cmd) {
      const USSRInstance inst = gen_family(parse_family(gen_family_name), gen_k, gen_seed);
      std::ostringstream text;
      write_ussr(text, inst);
      detail::spill(gen_out, text.str());
      return exit_ok;
    }

    throw Error("no subcommand dispatched");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_resource;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace cli
}  // namespace ussr
