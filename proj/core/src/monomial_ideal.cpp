#include "spborel/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spborel {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> raw) : n_(n) {
  if (n < 1) throw std::invalid_argument("MonomialIdeal: n < 1");
  if (raw.empty())
    throw std::invalid_argument("MonomialIdeal: empty generating set (zero ideal rejected)");
  for (const auto& m : raw)
    if (m.vars() != n)
      throw std::invalid_argument("MonomialIdeal: generator has wrong ambient dimension");

  // Ascending grlex puts every strict divisor before its multiples, so a
  // single pass keeps exactly the divisibility-minimal elements.
  std::sort(raw.begin(), raw.end(), grlex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (const auto& m : raw) {
    bool redundant = false;
    for (const auto& g : gens_) {
      if (divides(g, m)) { redundant = true; break; }
    }
    if (!redundant) gens_.push_back(m);
  }
  std::sort(gens_.begin(), gens_.end(), grlex_greater);

  if (gens_.size() == 1 && gens_[0].is_one())
    throw std::invalid_argument("MonomialIdeal: unit ideal rejected");
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::equigenerated(BigInt* degree_out) const {
  BigInt d = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial acc = gens_.front();
  for (size_t i = 1; i < gens_.size(); ++i) acc = lcm(acc, gens_[i]);
  return acc;
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] != o.gens_[i]) return grlex_less(gens_[i], o.gens_[i]);
  }
  return false;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars())
    throw std::invalid_argument("product: mismatched ambient dimension");
  std::vector<Monomial> raw;
  raw.reserve(I.gen_count() * J.gen_count());
  for (const auto& u : I.gens())
    for (const auto& v : J.gens()) raw.push_back(u * v);
  return MonomialIdeal(I.vars(), std::move(raw));
}

MonomialIdeal bracket_power(const MonomialIdeal& I, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("bracket_power: k must be >= 1");
  std::vector<Monomial> raw;
  raw.reserve(I.gen_count());
  for (const auto& u : I.gens()) raw.push_back(bracket(u, k));
  return MonomialIdeal(I.vars(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  if (I.vars() != m.vars())
    throw std::invalid_argument("colon: mismatched ambient dimension");
  std::vector<Monomial> raw;
  raw.reserve(I.gen_count());
  for (const auto& u : I.gens()) raw.push_back(colon_quotient(u, m));
  return MonomialIdeal(I.vars(), std::move(raw));
}

MonomialIdeal power_ideal(int n, int l, const BigInt& a, const BigInt& scale) {
  if (l < 1 || l > n) throw std::invalid_argument("power_ideal: need 1 <= l <= n");
  if (a < 1) throw std::invalid_argument("power_ideal: need a >= 1");
  if (scale < 1) throw std::invalid_argument("power_ideal: need scale >= 1");
  std::int64_t deg = to_int64(a, "power_ideal degree");

  // All exponent vectors of total degree a in the first l variables.
  std::vector<Monomial> raw;
  std::vector<BigInt> cur(static_cast<size_t>(n), BigInt(0));
  auto rec = [&](auto&& self, int var, std::int64_t remaining) -> void {
    if (var == l - 1) {
      cur[static_cast<size_t>(var)] = BigInt(remaining) * scale;
      raw.emplace_back(cur);
      cur[static_cast<size_t>(var)] = 0;
      return;
    }
    for (std::int64_t e = 0; e <= remaining; ++e) {
      cur[static_cast<size_t>(var)] = BigInt(e) * scale;
      self(self, var + 1, remaining - e);
    }
    cur[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, deg);
  return MonomialIdeal(n, std::move(raw));
}

MonomialIdeal parse_ideal(const std::string& text, int n) {
  std::vector<Monomial> raw;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    raw.push_back(parse_monomial(tok, n));
  }
  if (raw.empty()) throw std::invalid_argument("parse_ideal: no monomials in \"" + text + "\"");
  return MonomialIdeal(n, std::move(raw));
}

std::string to_text(const MonomialIdeal& I) {
  std::ostringstream out;
  for (size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out << ',';
    out << to_text(I.gens()[i]);
  }
  return out.str();
}

}  // namespace spborel
