#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spborel/oracle.hpp"
#include "spborel/special.hpp"

using namespace spborel;

namespace {

SpecialIdealParams spec(const std::string& text) { return SpecialIdealParams::parse(text); }

// valid random parameters: geometric scale chain, digits below the ratios
SpecialIdealParams random_spec(std::mt19937& rng) {
  int n = 1 + static_cast<int>(rng() % 4);
  int s = 1 + static_cast<int>(rng() % 4);
  std::vector<int> ell(static_cast<size_t>(s));
  ell[0] = n;
  for (int j = 1; j < s; ++j)
    ell[static_cast<size_t>(j)] = 1 + static_cast<int>(rng() % ell[static_cast<size_t>(j) - 1]);
  std::vector<BigInt> p(static_cast<size_t>(s));
  p[0] = 1 + static_cast<int>(rng() % 5);
  std::vector<BigInt> ratio(static_cast<size_t>(s), BigInt(0));
  for (int j = 1; j < s; ++j) {
    ratio[static_cast<size_t>(j) - 1] = 2 + static_cast<int>(rng() % 4);
    p[static_cast<size_t>(j)] = p[static_cast<size_t>(j) - 1] * ratio[static_cast<size_t>(j) - 1];
  }
  std::vector<BigInt> a(static_cast<size_t>(s));
  for (int j = 0; j + 1 < s; ++j) {
    std::int64_t r = to_int64(ratio[static_cast<size_t>(j)], "test ratio");
    a[static_cast<size_t>(j)] = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(r - 1));
  }
  a[static_cast<size_t>(s) - 1] = 1 + static_cast<int>(rng() % 6);
  return SpecialIdealParams::validate(n, std::move(ell), std::move(a), std::move(p));
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(spec("n=3; l=3,3; a=1,1; p=1,2"));
  CHECK_NOTHROW(spec("n=3; l=3,2; a=2,1; p=1,4"));
  CHECK_THROWS_WITH_AS(spec("n=3; l=3,3; a=2,1; p=1,2"),
                       "spec: a_j must be < p_{j+1}/p_j", std::invalid_argument);
  CHECK_THROWS_AS(spec("n=3; l=3,3; a=1,1; p=2,3"), std::invalid_argument);
  CHECK_THROWS_AS(spec("n=3; l=3,3; a=1,1; p=2,2"), std::invalid_argument);
  CHECK_THROWS_AS(spec("n=3; l=2,3; a=1,1; p=1,2"), std::invalid_argument);
  CHECK_THROWS_AS(spec("n=3; l=2,2; a=1,1; p=1,2"), std::invalid_argument);

  // a_j = 0 factors are dropped during normalization
  SpecialIdealParams dropped = spec("n=3; l=3,3,2; a=1,0,1; p=1,2,4");
  CHECK(dropped.factors() == 2);
  CHECK(dropped.to_text() == "n=3; l=3,2; a=1,1; p=1,4");
  CHECK(spec(dropped.to_text()).to_text() == dropped.to_text());
}

TEST_CASE("expansion") {
  CHECK(expand(spec("n=3; l=3,3; a=1,1; p=1,2")) ==
        parse_ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3));
  CHECK(expand(spec("n=3; l=3,2; a=2,1; p=1,4")).gen_count() == 12);
  CHECK(expand(spec("n=2; l=2; a=3; p=1")) == parse_ideal("a^3,a^2b,ab^2,b^3", 2));
}

TEST_CASE("tables of powers of initial-segment ideals") {
  GradedBettiTable koszul = power_ideal_betti(3, 1, 1);
  CHECK(koszul.totals() == std::vector<BigInt>{1, 3, 3, 1});
  CHECK(koszul.get(1, 1) == 3);
  CHECK(koszul.get(2, 2) == 3);
  CHECK(koszul.get(3, 3) == 1);

  GradedBettiTable scaled = power_ideal_betti(3, 1, 2);
  CHECK(scaled.get(1, 2) == 3);
  CHECK(scaled.get(2, 4) == 3);
  CHECK(scaled.get(3, 6) == 1);

  GradedBettiTable square = power_ideal_betti(3, 2, 1);
  CHECK(square.totals() == std::vector<BigInt>{1, 6, 8, 3});
  CHECK(square.get(1, 2) == 6);
  CHECK(square.get(2, 3) == 8);
  CHECK(square.get(3, 4) == 3);

  // the closed form matches the homology oracle
  for (int l = 1; l <= 3; ++l)
    for (int a = 1; a <= 3; ++a)
      CHECK(power_ideal_betti(l, a, 1) ==
            betti_table(power_ideal(l, l, a, 1), FieldChar(0)));
}

TEST_CASE("shift sets") {
  auto S = shift_sets(spec("n=3; l=3,3; a=1,1; p=1,2"));
  CHECK(S[1] == std::vector<BigInt>{3});
  CHECK(S[2] == std::vector<BigInt>{4});
  CHECK(S[3] == std::vector<BigInt>{5, 6});

  auto max_ideal = shift_sets(spec("n=3; l=3; a=1; p=1"));
  CHECK(max_ideal[1] == std::vector<BigInt>{1});
  CHECK(max_ideal[2] == std::vector<BigInt>{2});
  CHECK(max_ideal[3] == std::vector<BigInt>{3});

  auto two = shift_sets(spec("n=3; l=3,2; a=2,1; p=1,4"));
  CHECK(two[1] == std::vector<BigInt>{6});
  CHECK(two[2] == std::vector<BigInt>{7, 8});
  CHECK(two[3] == std::vector<BigInt>{8});
}

TEST_CASE("closed-form Betti tables") {
  GradedBettiTable J = special_betti(spec("n=3; l=3,3; a=1,1; p=1,2"));
  CHECK(J.get(1, 3) == 9);
  CHECK(J.get(2, 4) == 12);
  CHECK(J.get(3, 5) == 3);
  CHECK(J.get(3, 6) == 1);
  CHECK(J.totals() == std::vector<BigInt>{1, 9, 12, 4});

  CHECK(special_betti(spec("n=2; l=2; a=3; p=2")) == power_ideal_betti(2, 3, 2));

  // values confirmed against the homology oracle over chars 0, 2, 3
  GradedBettiTable two = special_betti(spec("n=3; l=3,2; a=2,1; p=1,4"));
  CHECK(two.get(1, 6) == 12);
  CHECK(two.get(2, 7) == 16);
  CHECK(two.get(2, 8) == 1);
  CHECK(two.get(3, 8) == 6);
  CHECK(two.totals() == std::vector<BigInt>{1, 12, 17, 6});
}

TEST_CASE("recursion equals the oracle on known specs") {
  for (const char* text : {"n=3; l=3,3; a=1,1; p=1,2", "n=3; l=3,2; a=2,1; p=1,4",
                           "n=2; l=2,2; a=1,1; p=1,3"}) {
    SpecialIdealParams params = spec(text);
    GradedBettiTable closed = special_betti(params);
    MonomialIdeal I = expand(params);
    for (std::uint64_t c : {0, 2, 3})
      CHECK(closed == betti_table(I, FieldChar(c)));
  }
}

TEST_CASE("Pardue regularity formula") {
  CHECK(pardue_regularity(spec("n=3; l=3,3; a=1,1; p=1,2")) == 4);
  CHECK(pardue_regularity(spec("n=3; l=3; a=1; p=1")) == 1);
  CHECK(pardue_regularity(spec("n=3; l=3,2; a=2,1; p=1,4")) == 7);

  CHECK(spec("n=3; l=3,2; a=2,1; p=1,4").pborel_prime() == BigInt(2));
  CHECK(spec("n=2; l=2,2; a=1,1; p=1,3").pborel_prime() == BigInt(3));
  CHECK_FALSE(spec("n=2; l=2,2; a=1,2; p=2,6").pborel_prime().has_value());
}

TEST_CASE("shift-set structure on randomized specs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    SpecialIdealParams params = random_spec(rng);
    const int s = params.factors();

    // (a): (a_k + 1) p_k exceeds the running degree sum
    BigInt running = 0;
    for (int k = 1; k <= s; ++k) {
      running += params.a(k) * params.p(k);
      CHECK((params.a(k) + 1) * params.p(k) > running);
    }

    // (b): (a_k+i-1) p_k > (a_{k-1}+i-2) p_{k-1} + a_k p_k
    for (int k = 2; k <= s; ++k)
      for (int i = 2; i <= params.ell(1); ++i)
        CHECK((params.a(k) + i - 1) * params.p(k) >
              (params.a(k - 1) + i - 2) * params.p(k - 1) + params.a(k) * params.p(k));

    // (c): the largest shift at degree i comes from the last factor
    for (int k = 1; k <= s; ++k) {
      SpecialIdealParams pre = params.prefix(k);
      auto S = shift_sets(pre);
      for (int i = 2; i <= pre.ell(k); ++i) {
        REQUIRE(!S[static_cast<size_t>(i)].empty());
        CHECK(S[static_cast<size_t>(i)].back() == (pre.a(k) + i - 1) * pre.p(k));
      }
    }

    // (d): max_i (max S_i - i) equals the factorwise maximum
    auto S = shift_sets(params);
    bool any = false;
    BigInt lhs = 0;
    for (int i = 1; i <= params.vars(); ++i) {
      if (S[static_cast<size_t>(i)].empty()) continue;
      BigInt v = S[static_cast<size_t>(i)].back() - i;
      if (!any || v > lhs) lhs = v;
      any = true;
    }
    BigInt rhs = 0, tail = 0;
    std::vector<BigInt> tails(static_cast<size_t>(s) + 1);
    for (int j = s; j >= 1; --j) {
      tail += params.a(j) * params.p(j);
      tails[static_cast<size_t>(j)] = tail;
    }
    bool first = true;
    for (int j = 1; j <= s; ++j) {
      BigInt v = (params.a(j) + params.ell(j) - 1) * params.p(j) +
                 (tails[static_cast<size_t>(j)] - params.a(j) * params.p(j)) - params.ell(j);
      if (first || v > rhs) { rhs = v; first = false; }
    }
    CHECK(any);
    CHECK(lhs == rhs);

    // table support at each degree equals the shift sets
    GradedBettiTable T = special_betti(params);
    for (int i = 1; i <= params.vars(); ++i) {
      std::vector<BigInt> support;
      for (const auto& [key, count] : T.entries()) {
        (void)count;
        if (key.first == i) support.push_back(key.second);
      }
      CHECK(support == S[static_cast<size_t>(i)]);
    }

    // regularity from the table agrees with the closed formula
    CHECK(pardue_regularity(params) == T.regularity_quotient() + 1);
  }
}
