// Decide a few signed sums of square roots exactly and show the bounds that
// certify termination of the adaptive oracle.

#include <iostream>

#include "ussr/ussr.hpp"

int main() {
  using namespace ussr;

  // sqrt(2) + sqrt(3) - sqrt(5) over the square-free basis {1, 2, 3, 5} of k = 5.
  const UUSSRInstance inst = make_uussr(5, {0, 1, 1, -1});

  const SignDecision decision = sign_exact_stats(inst);
  std::cout << "sign(sqrt2 + sqrt3 - sqrt5) = " << decision.sign << "\n";
  std::cout << "decided at " << decision.bits_used << " bits (certified worst case "
            << decision.certified_bits << ")\n";

  const Dyadic bound = value_lower_bound(inst);
  std::cout << "|value| >= " << dyadic_to_decimal(bound) << "\n";

  const DyadicInterval enclosure = eval_interval(inst, 64);
  std::cout << "64-bit enclosure: [" << dyadic_to_decimal(enclosure.lo) << ", "
            << dyadic_to_decimal(enclosure.hi) << "]\n";

  const IntPolynomial poly = annihilating_poly(make_uussr(3, {0, 1, 1}));
  std::cout << "annihilating polynomial of sqrt2 + sqrt3:";
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
    std::cout << " " << poly.coeffs[i] << (i > 0 ? "x^" + std::to_string(i) : "");
  std::cout << "\n";
  return 0;
}
