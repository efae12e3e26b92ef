// Synthesize both kinds of advice for a small domain, decide every instance
// with them, and double-check the decisions against the exact oracle.

#include <iostream>

#include "ussr/ussr.hpp"

int main() {
  using namespace ussr;
  const DomainSpec dom{3, 1};

  const LtfAdvice round = synth_round(dom);
  std::cout << "scale-and-round weights:";
  for (const BigInt& u : round.weights) std::cout << ' ' << u;
  std::cout << "  (lambda " << round.lambda << ")\n";

  const LtfAdvice lp = synth_lp(dom);
  std::cout << "lp-vertex weights:";
  for (const BigInt& u : lp.weights) std::cout << ' ' << u;
  std::cout << "\n";

  auto [basis, report] = synth_basis(dom);
  std::cout << "lightest basis (" << report.positive_count << " positive vectors):\n";
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    std::cout << "  row";
    for (std::int64_t v : basis.rows[i]) std::cout << ' ' << v;
    std::cout << "   value ~ " << basis.values[i].beta_num << "/2^" << basis.p_mant
              << " * 2^-" << basis.values[i].e << "\n";
  }

  for (const AdviceVariant adv :
       {AdviceVariant(round), AdviceVariant(lp), AdviceVariant(basis)}) {
    const VerificationReport vr = verify_advice(adv, VerifyMode{});
    std::cout << advice_kind(adv) << "/" << advice_method(adv) << ": " << vr.agree << "/"
              << vr.total << " agree with the oracle\n";
  }
  return 0;
}
