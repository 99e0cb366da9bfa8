#ifndef SPBOREL_SPECIAL_HPP
#define SPBOREL_SPECIAL_HPP

#include <optional>
#include <string>

#include "spborel/betti_table.hpp"
#include "spborel/monomial_ideal.hpp"

namespace spborel {

// Parameters of a special ideal: the product over j = 1..s of the p_j-th
// bracket powers of (x_1,...,x_{l_j})^{a_j}, with n = l_1 >= ... >= l_s >= 1,
// integral ratios p_{j+1}/p_j >= 2 and 1 <= a_j < p_{j+1}/p_j for j < s.
class SpecialIdealParams {
 public:
  // Validates and normalizes (factors with a_j = 0 are dropped); throws
  // invalid_argument naming the violated constraint.
  static SpecialIdealParams validate(int n, std::vector<int> ell,
                                     std::vector<BigInt> a, std::vector<BigInt> p);

  // Text form: "n=3; l=3,3; a=1,1; p=1,2".
  static SpecialIdealParams parse(const std::string& text);

  int vars() const { return n_; }
  int factors() const { return static_cast<int>(ell_.size()); }
  int ell(int j) const { return ell_[static_cast<size_t>(j - 1)]; }      // 1-based
  const BigInt& a(int j) const { return a_[static_cast<size_t>(j - 1)]; }
  const BigInt& p(int j) const { return p_[static_cast<size_t>(j - 1)]; }

  // Prefix with the first k factors (itself a valid spec).
  SpecialIdealParams prefix(int k) const;

  // The prime q with p_j = q^{r_j} for all j, when one exists.
  std::optional<BigInt> pborel_prime() const;

  std::string to_text() const;

 private:
  SpecialIdealParams(int n, std::vector<int> ell, std::vector<BigInt> a,
                     std::vector<BigInt> p);
  int n_;
  std::vector<int> ell_;
  std::vector<BigInt> a_;
  std::vector<BigInt> p_;
};

// The ideal itself; generator count is the product of C(a_j+l_j-1, l_j-1).
MonomialIdeal expand(const SpecialIdealParams& params);

// Betti table of R/(x_1,...,x_l)^(a, bracket scale):
// beta_{i, scale*(a+i-1)} = C(a+l-1, a+i-1) * C(a+i-2, i-1) for 1 <= i <= l.
GradedBettiTable power_ideal_betti(int l, const BigInt& a, const BigInt& scale);

// Shifts of the minimal resolution per homological degree i = 1..n:
// S_1 = { sum_j a_j p_j }, and for i >= 2
// S_i = { (a_j+i-1) p_j + sum_{m>j} a_m p_m : l_j >= i }.
std::vector<std::vector<BigInt>> shift_sets(const SpecialIdealParams& params);

// Betti table of the special ideal by the horseshoe recursion over factors.
GradedBettiTable special_betti(const SpecialIdealParams& params);

// Pardue's regularity formula:
// max over j of [ sum_{m>=j} a_m p_m + (p_j - 1)(l_j - 1) ].
BigInt pardue_regularity(const SpecialIdealParams& params);

}  // namespace spborel

#endif
