#ifndef SPBOREL_MONOMIAL_HPP
#define SPBOREL_MONOMIAL_HPP

#include <string>
#include <vector>

#include "spborel/bigint.hpp"

namespace spborel {

// A monomial in n variables, stored as its exponent vector.
// Immutable after construction; all operations are pure.
class Monomial {
 public:
  explicit Monomial(std::vector<BigInt> exponents);
  static Monomial one(int n);

  int vars() const { return static_cast<int>(exps_.size()); }
  const BigInt& exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<BigInt>& exponents() const { return exps_; }
  BigInt degree() const;
  bool is_one() const;

  // Largest 1-based variable index with positive exponent; 0 for the unit.
  int max_var() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

 private:
  std::vector<BigInt> exps_;
};

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial operator*(const Monomial& u, const Monomial& v);

// u / gcd(u, m): the generator image under the colon by m.
Monomial colon_quotient(const Monomial& u, const Monomial& m);

// Every exponent multiplied by k (the k-th bracket power of a variable
// product); k >= 1.
Monomial bracket(const Monomial& u, const BigInt& k);

// Graded lexicographic order, x1 > x2 > ... > xn.
bool grlex_less(const Monomial& u, const Monomial& v);
bool grlex_greater(const Monomial& u, const Monomial& v);

// Text form: `x<i>^<e>` tokens joined by `*`; letters a..e alias x1..x5
// and may be juxtaposed ("a^2*b", "a^2b"); "1" is the unit monomial.
Monomial parse_monomial(const std::string& text, int n);
std::string to_text(const Monomial& m);

}  // namespace spborel

#endif
