#ifndef SPBOREL_PBOREL_HPP
#define SPBOREL_PBOREL_HPP

#include <optional>

#include "spborel/monomial_ideal.hpp"

namespace spborel {

// Base-p digits, least significant first, no trailing zeros (empty for 0).
struct PAdicExpansion {
  std::uint64_t p;
  std::vector<std::uint32_t> digits;

  static PAdicExpansion of(const BigInt& value, std::uint64_t p);
};

// Digitwise dominance: every base-p digit of s is <= the matching digit
// of t. Equivalent to C(t,s) != 0 mod p.
bool padic_leq(const BigInt& s, const BigInt& t, std::uint64_t p);

// A violation of p-Borel fixedness: generator m, target variable i,
// source variable j (i < j, 1-based), and the transferred amount s.
struct PBorelViolation {
  Monomial m;
  int i;
  int j;
  BigInt s;
};

// Checks the exchange property for every minimal generator; nullopt means
// the ideal is p-Borel fixed.
std::optional<PBorelViolation> p_borel_violation(const MonomialIdeal& I, std::uint64_t p);
bool is_p_borel(const MonomialIdeal& I, std::uint64_t p);

// Smallest p-Borel fixed ideal whose generators include S (Borel-sense
// generation). Fixpoint of the exchange moves over monomials, minimalized.
MonomialIdeal p_borel_closure(const std::vector<Monomial>& S, std::uint64_t p, int n);

// The principal p-Borel ideal <x^mu> as a product of bracket powers of
// initial-segment power ideals, one factor per base-p digit of each mu_k.
MonomialIdeal principal_pborel_product(const std::vector<BigInt>& mu, std::uint64_t p);

}  // namespace spborel

#endif
