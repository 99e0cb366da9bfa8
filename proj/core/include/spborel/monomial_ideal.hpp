#ifndef SPBOREL_MONOMIAL_IDEAL_HPP
#define SPBOREL_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "spborel/monomial.hpp"

namespace spborel {

// A monomial ideal, held as its unique minimal generating set.
// Generators form an antichain under divisibility and are stored in
// descending graded-lex order, so equality is structural. The zero ideal
// (no generators) and the unit ideal are rejected at construction.
class MonomialIdeal {
 public:
  // Minimalizes `raw` (keeps the divisibility-minimal elements).
  MonomialIdeal(int n, std::vector<Monomial> raw);

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  size_t gen_count() const { return gens_.size(); }

  // Membership of a monomial: divisible by some generator.
  bool contains(const Monomial& m) const;

  // Common degree of the generators, or nullopt-like flag via `ok`.
  bool equigenerated(BigInt* degree_out = nullptr) const;

  // Componentwise lcm of all generators (bounds every syzygy multidegree).
  Monomial generator_lcm() const;

  bool operator==(const MonomialIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
  bool operator<(const MonomialIdeal& o) const;  // arbitrary total order for maps

 private:
  int n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

// Ideal generated by { u^[k] : u in G(I) }; already minimal.
MonomialIdeal bracket_power(const MonomialIdeal& I, const BigInt& k);

// I : m, minimal generators { u / gcd(u, m) } minimalized.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

// (x_1,...,x_l)^a with every exponent scaled by `scale`.
// Generator count is C(a+l-1, l-1).
MonomialIdeal power_ideal(int n, int l, const BigInt& a, const BigInt& scale);

// Text form: comma-separated monomials.
MonomialIdeal parse_ideal(const std::string& text, int n);
std::string to_text(const MonomialIdeal& I);

}  // namespace spborel

#endif
