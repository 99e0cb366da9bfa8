#include "spborel/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spborel {

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (BigInt(k) > n) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    num *= n - BigInt(j);
    den *= BigInt(j + 1);
  }
  return num / den;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error(std::string(what) + ": value too large to enumerate");
  return static_cast<std::int64_t>(v);
}

Monomial::Monomial(std::vector<BigInt> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("Monomial: empty exponent vector");
  for (const auto& e : exps_)
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::one(int n) {
  if (n < 1) throw std::invalid_argument("Monomial::one: n < 1");
  return Monomial(std::vector<BigInt>(static_cast<size_t>(n), BigInt(0)));
}

BigInt Monomial::degree() const {
  BigInt d = 0;
  for (const auto& e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const BigInt& e) { return e == 0; });
}

int Monomial::max_var() const {
  for (int i = vars(); i >= 1; --i)
    if (exps_[static_cast<size_t>(i - 1)] > 0) return i;
  return 0;
}

static void check_same_vars(const Monomial& u, const Monomial& v, const char* op) {
  if (u.vars() != v.vars())
    throw std::invalid_argument(std::string(op) + ": mismatched ambient dimension");
}

bool divides(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v, "divides");
  for (int i = 0; i < u.vars(); ++i)
    if (u.exponent(i) > v.exponent(i)) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v, "lcm");
  std::vector<BigInt> e(static_cast<size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i)
    e[static_cast<size_t>(i)] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v, "gcd");
  std::vector<BigInt> e(static_cast<size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i)
    e[static_cast<size_t>(i)] = std::min(u.exponent(i), v.exponent(i));
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v, "product");
  std::vector<BigInt> e(static_cast<size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i)
    e[static_cast<size_t>(i)] = u.exponent(i) + v.exponent(i);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& u, const Monomial& m) {
  check_same_vars(u, m, "colon_quotient");
  std::vector<BigInt> e(static_cast<size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i) {
    BigInt diff = u.exponent(i) - m.exponent(i);
    e[static_cast<size_t>(i)] = diff > 0 ? diff : BigInt(0);
  }
  return Monomial(std::move(e));
}

Monomial bracket(const Monomial& u, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("bracket: k must be >= 1");
  std::vector<BigInt> e(static_cast<size_t>(u.vars()));
  for (int i = 0; i < u.vars(); ++i) e[static_cast<size_t>(i)] = u.exponent(i) * k;
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v, "grlex");
  BigInt du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  // Same degree: lex with x1 largest.
  for (int i = 0; i < u.vars(); ++i) {
    if (u.exponent(i) != v.exponent(i)) return u.exponent(i) < v.exponent(i);
  }
  return false;
}

bool grlex_greater(const Monomial& u, const Monomial& v) { return grlex_less(v, u); }

namespace {

int letter_index(char c) {
  switch (c) {
    case 'a': return 1;
    case 'b': return 2;
    case 'c': return 3;
    case 'd': return 4;
    case 'e': return 5;
    default: return 0;
  }
}

}  // namespace

Monomial parse_monomial(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("parse_monomial: n < 1");
  std::vector<BigInt> e(static_cast<size_t>(n), BigInt(0));
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_monomial: " + why + " in \"" + text + "\"");
  };

  skip_ws();
  if (pos >= text.size()) fail("empty input");

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first) {
      if (text[pos] == '*') { ++pos; skip_ws(); }
    }
    if (pos >= text.size()) fail("trailing '*'");
    char c = text[pos];
    int var = 0;
    if (c == '1' && first) {
      ++pos;
      skip_ws();
      if (pos != text.size()) fail("unexpected text after '1'");
      break;
    } else if (letter_index(c) > 0) {
      var = letter_index(c);
      ++pos;
    } else if (c == 'x') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("missing variable index after 'x'");
      var = std::stoi(text.substr(start, pos - start));
    } else {
      fail("unexpected character");
    }
    if (var < 1 || var > n) fail("variable index out of range");

    BigInt exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("missing exponent after '^'");
      exp = BigInt(text.substr(start, pos - start));
    }
    e[static_cast<size_t>(var - 1)] += exp;
    first = false;
  }
  return Monomial(std::move(e));
}

std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  static const char* letters = "abcde";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!first) out << '*';
    if (m.vars() <= 5)
      out << letters[i];
    else
      out << 'x' << (i + 1);
    if (m.exponent(i) != 1) out << '^' << m.exponent(i);
    first = false;
  }
  return out.str();
}

}  // namespace spborel
