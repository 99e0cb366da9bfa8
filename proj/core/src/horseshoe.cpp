#include "spborel/horseshoe.hpp"

#include <stdexcept>

namespace spborel {

std::pair<BigInt, BigInt> min_max_shifts(const GradedBettiTable& T, int i) {
  return {T.min_shift(i), T.max_shift(i)};
}

bool conjoined_condition_i(const MonomialIdeal& I, const MonomialIdeal& J) {
  return product(I, J).gen_count() == I.gen_count() * J.gen_count();
}

std::optional<std::string> certify_conjoined_bracket(const MonomialIdeal& Ibase,
                                                     const BigInt& k,
                                                     const MonomialIdeal& J) {
  if (k < 2) throw std::invalid_argument("certify_conjoined_bracket: k must be >= 2");
  if (Ibase.vars() != J.vars())
    throw std::invalid_argument("certify_conjoined_bracket: mismatched ambient dimension");
  if (!Ibase.equigenerated()) return "G(I) not equigenerated";
  if (!J.equigenerated()) return "G(J) not equigenerated";

  int m = 0;
  for (const auto& g : Ibase.gens()) m = std::max(m, g.max_var());
  for (int i = 0; i < m; ++i) {
    std::vector<BigInt> e(static_cast<size_t>(Ibase.vars()), BigInt(0));
    e[static_cast<size_t>(i)] = k - 1;
    if (!J.contains(Monomial(std::move(e))))
      return "x" + std::to_string(i + 1) + "^(k-1) not in J";
  }
  return std::nullopt;
}

bool reduced_horseshoe_minimal(const GradedBettiTable& TI, const GradedBettiTable& TJ,
                               int pdim_quotient) {
  BigInt M1 = TI.max_shift(1);
  for (int k = 1; k <= pdim_quotient - 1; ++k) {
    if (!TI.has_entries_at(k + 1) || !TJ.has_entries_at(k)) continue;
    if (!(TI.min_shift(k + 1) > M1 + TJ.max_shift(k))) return false;
  }
  return true;
}

bool reduced_horseshoe_minimal(const GradedBettiTable& TI, const GradedBettiTable& TJ) {
  return reduced_horseshoe_minimal(TI, TJ, TI.pdim());
}

GradedBettiTable reduced_horseshoe_table(const GradedBettiTable& TI,
                                         const GradedBettiTable& TJ,
                                         const BigInt& g, const BigInt& e) {
  if (g < 1) throw std::invalid_argument("reduced_horseshoe_table: g must be >= 1");
  if (e < 0) throw std::invalid_argument("reduced_horseshoe_table: e must be >= 0");
  GradedBettiTable out;
  for (const auto& [key, count] : TJ.entries()) {
    if (key.first == 0) continue;
    out.add(key.first, key.second + e, g * count);
  }
  for (const auto& [key, count] : TI.entries()) {
    if (key.first < 2) continue;
    out.add(key.first, key.second, count);
  }
  return out;
}

}  // namespace spborel
