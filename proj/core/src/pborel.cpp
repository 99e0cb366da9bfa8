#include "spborel/pborel.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace spborel {

PAdicExpansion PAdicExpansion::of(const BigInt& value, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("PAdicExpansion: p must be prime");
  if (value < 0) throw std::invalid_argument("PAdicExpansion: negative value");
  PAdicExpansion e{p, {}};
  BigInt v = value;
  while (v > 0) {
    e.digits.push_back(static_cast<std::uint32_t>(v % p));
    v /= p;
  }
  return e;
}

bool padic_leq(const BigInt& s, const BigInt& t, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_leq: p must be prime");
  if (s < 0 || t < 0) throw std::invalid_argument("padic_leq: negative argument");
  BigInt a = s, b = t;
  while (a > 0) {
    if (a % p > b % p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

namespace {

// Exchange moves (x_i/x_j)^s * m for i < j, x_j^t || m, s digitwise <= t.
// All results have the same total degree as m.
template <typename Fn>
void for_each_move(const Monomial& m, std::uint64_t p, Fn&& fn) {
  for (int j = 1; j < m.vars(); ++j) {   // 0-based source index
    const BigInt& t = m.exponent(j);
    if (t == 0) continue;
    std::int64_t tt = to_int64(t, "p-Borel move");
    for (std::int64_t s = 1; s <= tt; ++s) {
      if (!padic_leq(BigInt(s), t, p)) continue;
      for (int i = 0; i < j; ++i) {
        std::vector<BigInt> e = m.exponents();
        e[static_cast<size_t>(i)] += s;
        e[static_cast<size_t>(j)] -= s;
        fn(i, j, BigInt(s), Monomial(std::move(e)));
      }
    }
  }
}

struct GrlexLess {
  bool operator()(const Monomial& u, const Monomial& v) const { return grlex_less(u, v); }
};

}  // namespace

std::optional<PBorelViolation> p_borel_violation(const MonomialIdeal& I, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p_borel_violation: p must be prime");
  std::optional<PBorelViolation> found;
  for (const auto& m : I.gens()) {
    bool stop = false;
    for_each_move(m, p, [&](int i, int j, BigInt s, Monomial moved) {
      if (stop) return;
      if (!I.contains(moved)) {
        found = PBorelViolation{m, i + 1, j + 1, std::move(s)};
        stop = true;
      }
    });
    if (stop) break;
  }
  return found;
}

bool is_p_borel(const MonomialIdeal& I, std::uint64_t p) {
  return !p_borel_violation(I, p).has_value();
}

MonomialIdeal p_borel_closure(const std::vector<Monomial>& S, std::uint64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p_borel_closure: p must be prime");
  if (S.empty()) throw std::invalid_argument("p_borel_closure: empty seed set");
  for (const auto& m : S)
    if (m.vars() != n) throw std::invalid_argument("p_borel_closure: wrong ambient dimension");

  // Worklist fixpoint over monomials. Moves preserve total degree, so the
  // reachable set lives in finitely many degree slices and terminates.
  std::set<Monomial, GrlexLess> seen(S.begin(), S.end());
  std::deque<Monomial> todo(S.begin(), S.end());
  while (!todo.empty()) {
    Monomial m = std::move(todo.front());
    todo.pop_front();
    for_each_move(m, p, [&](int, int, const BigInt&, Monomial moved) {
      if (seen.insert(moved).second) todo.push_back(std::move(moved));
    });
  }
  return MonomialIdeal(n, std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal principal_pborel_product(const std::vector<BigInt>& mu, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("principal_pborel_product: p must be prime");
  const int n = static_cast<int>(mu.size());
  if (n < 1) throw std::invalid_argument("principal_pborel_product: empty exponent vector");

  std::optional<MonomialIdeal> acc;
  for (int k = 0; k < n; ++k) {
    if (mu[static_cast<size_t>(k)] < 0)
      throw std::invalid_argument("principal_pborel_product: negative exponent");
    auto digits = PAdicExpansion::of(mu[static_cast<size_t>(k)], p).digits;
    BigInt scale = 1;
    for (auto digit : digits) {
      if (digit > 0) {
        MonomialIdeal factor = power_ideal(n, k + 1, BigInt(digit), scale);
        acc = acc ? product(*acc, factor) : factor;
      }
      scale *= p;
    }
  }
  if (!acc)
    throw std::invalid_argument("principal_pborel_product: all exponents are zero");
  return *acc;
}

}  // namespace spborel
