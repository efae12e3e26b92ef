#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ussr/advice_io.hpp"
#include "ussr/instance.hpp"
#include "ussr/oracle.hpp"

namespace ussr {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerifyMode {
  bool exhaustive = true;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  DomainSpec domain;
  std::string kind;
  std::string method;
  std::string mode;
  std::int64_t total = 0;
  std::int64_t agree = 0;
  std::vector<std::vector<std::int64_t>> disagree;
  std::int64_t max_bits_used = 0;
  double wall_time_s = 0;

  bool verified() const { return disagree.empty(); }
};

namespace detail {

inline int decide(const UUSSRInstance& inst, const LtfAdvice& adv) {
  return decide_ltf(inst, adv);
}
inline int decide(const UUSSRInstance& inst, const BasisAdvice& adv) {
  return decide_basis(inst, adv);
}

}  // namespace detail

/// Decide an instance with either kind of advice.
inline int decide_with_advice(const UUSSRInstance& inst, const AdviceVariant& adv) {
  return std::visit([&](const auto& a) { return detail::decide(inst, a); }, adv);
}

/// Compare the advice decision against the exact oracle over the advice
/// domain, exhaustively or on seeded samples. Deterministic for fixed
/// inputs; the wall time is measured but kept out of the records.
inline VerificationReport verify_advice(const AdviceVariant& adv, const VerifyMode& mode,
                                        std::int64_t enum_cap = kDefaultEnumerationCap) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.domain = advice_domain(adv);
  report.kind = advice_kind(adv);
  report.method = advice_method(adv);
  report.mode = mode.exhaustive ? "exhaustive" : "sampled";

  auto check_one = [&](const UUSSRInstance& inst) {
    const int decided =
        std::visit([&](const auto& a) { return detail::decide(inst, a); }, adv);
    const SignDecision oracle = sign_exact_stats(inst);
    report.max_bits_used = std::max(report.max_bits_used, oracle.bits_used);
    ++report.total;
    if (decided == oracle.sign)
      ++report.agree;
    else
      report.disagree.push_back(inst.delta);
  };

  if (mode.exhaustive) {
    DomainEnumerator en(report.domain, enum_cap);
    while (auto inst = en.next()) check_one(*inst);
  } else {
    std::mt19937_64 rng(mode.seed);
    const std::uint64_t span = static_cast<std::uint64_t>(2 * report.domain.B + 1);
    UUSSRInstance inst = zero_uussr(report.domain.k);
    for (std::int64_t i = 0; i < mode.samples; ++i) {
      for (std::size_t j = 0; j < inst.size(); ++j)
        inst.delta[j] = -report.domain.B + static_cast<std::int64_t>(rng() % span);
      check_one(inst);
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Line-oriented comma-separated report. Records are deterministic for fixed
/// inputs; provenance (tool version, precision, wall time) rides in '#'
/// comments so reruns diff cleanly on the records.
inline void write_verification_report(std::ostream& out, const VerificationReport& report) {
  out << "# ussr verify report\n";
  out << "# tool ussr " << kToolVersion << "\n";
  if (!report.verified())
    out << "# disagreement records follow the summary as: disagree,<delta...>\n";
  out << "# columns: k,B,kind,method,mode,total,agree,disagree_count,max_bits_used\n";
  out << report.domain.k << ',' << report.domain.B << ',' << report.kind << ','
      << report.method << ',' << report.mode << ',' << report.total << ',' << report.agree
      << ',' << report.disagree.size() << ',' << report.max_bits_used << "\n";
  for (const auto& delta : report.disagree) {
    out << "disagree";
    for (std::int64_t d : delta) out << ',' << d;
    out << "\n";
  }
  out << "# wall_time_s " << report.wall_time_s << "\n";
}

// --- precision benchmark -----------------------------------------------------

struct BenchRecord {
  std::string family;
  std::int64_t k = 0;
  std::int64_t terms = 0;
  int sign = 0;
  std::int64_t bits_used = 0;   // >= 1; the zero test alone counts as 1 bit
  BigInt certified_bits = 0;
};

/// Run the adaptive oracle over a family's instances for k = 1..k_max and
/// record decided precision against the certified worst case. Consecutive k
/// with identical instances (prime families between primes) are skipped,
/// except that k_max always reports.
inline std::vector<BenchRecord> bench_precision(Family family, std::int64_t k_max,
                                                std::uint64_t seed = 0) {
  if (k_max < 1) throw DomainError("bench_precision: k-max must be a positive integer");
  std::vector<BenchRecord> records;
  std::vector<Term> previous_terms;
  bool have_previous = false;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const USSRInstance inst = gen_family(family, k, seed);
    if (inst.terms.empty()) continue;
    if (have_previous && inst.terms == previous_terms && k != k_max) continue;
    previous_terms = inst.terms;
    have_previous = true;

    const UUSSRInstance normal = normalize(inst);
    const SignDecision decision = sign_exact_stats(normal);
    BenchRecord rec;
    rec.family = family_name(family);
    rec.k = k;
    rec.terms = static_cast<std::int64_t>(inst.terms.size());
    rec.sign = decision.sign;
    rec.bits_used = std::max<std::int64_t>(1, decision.bits_used);
    rec.certified_bits = decision.sign == 0 ? BigInt(1) : decision.certified_bits;
    records.push_back(std::move(rec));
  }
  return records;
}

inline void write_bench_report(std::ostream& out, Family family, std::int64_t k_max,
                               const std::vector<BenchRecord>& records) {
  out << "# ussr bench report\n";
  out << "# tool ussr " << kToolVersion << "\n";
  out << "# family " << family_name(family) << " k_max " << k_max << "\n";
  out << "# columns: family,k,terms,sign,bits_used,certified_bits\n";
  for (const BenchRecord& rec : records) {
    out << rec.family << ',' << rec.k << ',' << rec.terms << ',' << rec.sign << ','
        << rec.bits_used << ',' << rec.certified_bits << "\n";
  }
}

}  // namespace ussr
