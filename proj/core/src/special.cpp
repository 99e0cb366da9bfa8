#include "spborel/special.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spborel {

SpecialIdealParams::SpecialIdealParams(int n, std::vector<int> ell,
                                       std::vector<BigInt> a, std::vector<BigInt> p)
    : n_(n), ell_(std::move(ell)), a_(std::move(a)), p_(std::move(p)) {}

SpecialIdealParams SpecialIdealParams::validate(int n, std::vector<int> ell,
                                                std::vector<BigInt> a,
                                                std::vector<BigInt> p) {
  if (n < 1) throw std::invalid_argument("spec: n must be >= 1");
  if (ell.size() != a.size() || ell.size() != p.size())
    throw std::invalid_argument("spec: l, a, p must have equal length");
  if (ell.empty()) throw std::invalid_argument("spec: no factors");

  // a_j = 0 factors are the unit ideal; drop them.
  std::vector<int> ell2;
  std::vector<BigInt> a2, p2;
  for (size_t j = 0; j < ell.size(); ++j) {
    if (a[j] < 0) throw std::invalid_argument("spec: a_j must be >= 0");
    if (a[j] == 0) continue;
    ell2.push_back(ell[j]);
    a2.push_back(a[j]);
    p2.push_back(p[j]);
  }
  if (ell2.empty()) throw std::invalid_argument("spec: all factors have a_j = 0");

  const size_t s = ell2.size();
  if (ell2[0] != n) throw std::invalid_argument("spec: l_1 must equal n");
  for (size_t j = 0; j < s; ++j) {
    if (ell2[j] < 1 || ell2[j] > n)
      throw std::invalid_argument("spec: l_j out of range");
    if (j > 0 && ell2[j] > ell2[j - 1])
      throw std::invalid_argument("spec: l_j must be non-increasing");
  }
  if (p2[0] < 1) throw std::invalid_argument("spec: p_1 must be >= 1");
  for (size_t j = 0; j + 1 < s; ++j) {
    if (p2[j + 1] % p2[j] != 0)
      throw std::invalid_argument("spec: p_{j+1} must be divisible by p_j");
    BigInt ratio = p2[j + 1] / p2[j];
    if (ratio < 2)
      throw std::invalid_argument("spec: p_{j+1}/p_j must be an integer > 1");
    if (a2[j] >= ratio)
      throw std::invalid_argument("spec: a_j must be < p_{j+1}/p_j");
  }
  return SpecialIdealParams(n, std::move(ell2), std::move(a2), std::move(p2));
}

SpecialIdealParams SpecialIdealParams::parse(const std::string& text) {
  int n = -1;
  std::vector<int> ell;
  std::vector<BigInt> a, p;
  bool have_l = false, have_a = false, have_p = false;

  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spec parse: expected key=value in \"" + part + "\"");
    std::string key = part.substr(0, eq);
    std::string value = part.substr(eq + 1);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    value.erase(std::remove_if(value.begin(), value.end(), ::isspace), value.end());

    std::vector<BigInt> nums;
    std::istringstream vs(value);
    std::string item;
    while (std::getline(vs, item, ',')) {
      if (item.empty()) throw std::invalid_argument("spec parse: empty number in \"" + value + "\"");
      nums.emplace_back(item);
    }
    if (key == "n") {
      if (nums.size() != 1) throw std::invalid_argument("spec parse: n must be a single integer");
      n = to_int64(nums[0], "spec n");
    } else if (key == "l") {
      for (const auto& v : nums) ell.push_back(static_cast<int>(to_int64(v, "spec l")));
      have_l = true;
    } else if (key == "a") {
      a = nums;
      have_a = true;
    } else if (key == "p") {
      p = nums;
      have_p = true;
    } else {
      throw std::invalid_argument("spec parse: unknown key \"" + key + "\"");
    }
  }
  if (n < 0 || !have_l || !have_a || !have_p)
    throw std::invalid_argument("spec parse: need all of n, l, a, p");
  return validate(n, std::move(ell), std::move(a), std::move(p));
}

SpecialIdealParams SpecialIdealParams::prefix(int k) const {
  if (k < 1 || k > factors()) throw std::invalid_argument("spec prefix: bad k");
  return SpecialIdealParams(
      n_, std::vector<int>(ell_.begin(), ell_.begin() + k),
      std::vector<BigInt>(a_.begin(), a_.begin() + k),
      std::vector<BigInt>(p_.begin(), p_.begin() + k));
}

std::optional<BigInt> SpecialIdealParams::pborel_prime() const {
  // Find the first scale > 1 and its smallest prime factor, then check
  // every scale is a power of it.
  BigInt q = 0;
  for (const auto& pj : p_) {
    if (pj > 1) {
      BigInt d = 2;
      BigInt v = pj;
      while (d * d <= v) {
        if (v % d == 0) break;
        ++d;
      }
      q = (v % d == 0) ? d : v;
      break;
    }
  }
  if (q == 0) return BigInt(2);  // all scales are 1; any prime works
  for (const auto& pj : p_) {
    BigInt v = pj;
    while (v % q == 0) v /= q;
    if (v != 1) return std::nullopt;
  }
  return q;
}

std::string SpecialIdealParams::to_text() const {
  std::ostringstream out;
  out << "n=" << n_ << "; l=";
  for (size_t j = 0; j < ell_.size(); ++j) out << (j ? "," : "") << ell_[j];
  out << "; a=";
  for (size_t j = 0; j < a_.size(); ++j) out << (j ? "," : "") << a_[j];
  out << "; p=";
  for (size_t j = 0; j < p_.size(); ++j) out << (j ? "," : "") << p_[j];
  return out.str();
}

MonomialIdeal expand(const SpecialIdealParams& params) {
  MonomialIdeal acc = power_ideal(params.vars(), params.ell(1), params.a(1), params.p(1));
  for (int j = 2; j <= params.factors(); ++j)
    acc = product(acc, power_ideal(params.vars(), params.ell(j), params.a(j), params.p(j)));
  return acc;
}

GradedBettiTable power_ideal_betti(int l, const BigInt& a, const BigInt& scale) {
  if (l < 1) throw std::invalid_argument("power_ideal_betti: l must be >= 1");
  if (a < 1) throw std::invalid_argument("power_ideal_betti: a must be >= 1");
  if (scale < 1) throw std::invalid_argument("power_ideal_betti: scale must be >= 1");
  GradedBettiTable T;
  for (int i = 1; i <= l; ++i) {
    // C(a+l-1, a+i-1) = C(a+l-1, l-i), keeping the small lower index
    BigInt count = binomial(a + l - 1, static_cast<std::uint64_t>(l - i)) *
                   binomial(a + i - 2, static_cast<std::uint64_t>(i - 1));
    T.add(i, scale * (a + i - 1), count);
  }
  return T;
}

std::vector<std::vector<BigInt>> shift_sets(const SpecialIdealParams& params) {
  const int n = params.vars();
  const int s = params.factors();

  std::vector<BigInt> tail(static_cast<size_t>(s) + 2, BigInt(0));  // tail[j] = sum_{m >= j} a_m p_m
  for (int j = s; j >= 1; --j)
    tail[static_cast<size_t>(j)] = tail[static_cast<size_t>(j) + 1] + params.a(j) * params.p(j);

  std::vector<std::vector<BigInt>> S(static_cast<size_t>(n) + 1);
  S[1] = {tail[1]};
  for (int i = 2; i <= n; ++i) {
    std::vector<BigInt> shifts;
    for (int j = 1; j <= s; ++j) {
      if (params.ell(j) < i) continue;
      shifts.push_back((params.a(j) + i - 1) * params.p(j) + tail[static_cast<size_t>(j) + 1]);
    }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    S[static_cast<size_t>(i)] = std::move(shifts);
  }
  return S;
}

GradedBettiTable special_betti(const SpecialIdealParams& params) {
  GradedBettiTable T = power_ideal_betti(params.ell(1), params.a(1), params.p(1));
  for (int k = 2; k <= params.factors(); ++k) {
    const BigInt gk = binomial(params.a(k) + params.ell(k) - 1,
                               static_cast<std::uint64_t>(params.ell(k) - 1));
    const BigInt shift = params.a(k) * params.p(k);
    GradedBettiTable next;
    for (const auto& [key, count] : T.entries()) {
      if (key.first == 0) continue;
      next.add(key.first, key.second + shift, gk * count);
    }
    GradedBettiTable base = power_ideal_betti(params.ell(k), params.a(k), params.p(k));
    for (const auto& [key, count] : base.entries()) {
      if (key.first < 2) continue;  // degree 1 keeps only the tensor part
      next.add(key.first, key.second, count);
    }
    T = std::move(next);
  }
  return T;
}

BigInt pardue_regularity(const SpecialIdealParams& params) {
  const int s = params.factors();
  BigInt tail = 0;
  std::vector<BigInt> tails(static_cast<size_t>(s) + 1);
  for (int j = s; j >= 1; --j) {
    tail += params.a(j) * params.p(j);
    tails[static_cast<size_t>(j)] = tail;
  }
  BigInt best = 0;
  bool first = true;
  for (int j = 1; j <= s; ++j) {
    BigInt v = tails[static_cast<size_t>(j)] + (params.p(j) - 1) * (params.ell(j) - 1);
    if (first || v > best) { best = v; first = false; }
  }
  return best;
}

}  // namespace spborel
