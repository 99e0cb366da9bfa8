#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spborel/oracle.hpp"
#include "spborel/pborel.hpp"

using namespace spborel;

namespace {

MonomialIdeal ideal(const std::string& text, int n) { return parse_ideal(text, n); }

const std::vector<FieldChar> kChars = {FieldChar(0), FieldChar(2), FieldChar(3)};

// Coefficient of x^b in the numerator of the Hilbert series, by
// inclusion-exclusion over generator subsets with lcm x^b.
BigInt k_polynomial_coefficient(const MonomialIdeal& I,
                                const std::vector<std::int64_t>& b) {
  const size_t r = I.gen_count();
  REQUIRE(r <= 20);
  BigInt acc = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    std::vector<BigInt> top(static_cast<size_t>(I.vars()), BigInt(0));
    for (size_t g = 0; g < r; ++g) {
      if (!(mask & (1ULL << g))) continue;
      for (int i = 0; i < I.vars(); ++i) {
        const BigInt& e = I.gens()[g].exponent(i);
        if (e > top[static_cast<size_t>(i)]) top[static_cast<size_t>(i)] = e;
      }
    }
    bool match = true;
    for (int i = 0; i < I.vars(); ++i)
      if (top[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) { match = false; break; }
    if (match) acc += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
  }
  return acc;
}

void check_euler_consistency(const MonomialIdeal& I, FieldChar F) {
  MultigradedBettiTable M = multigraded_betti(I, F);
  std::set<std::vector<std::int64_t>> degrees;
  for (const auto& [key, count] : M.entries()) {
    (void)count;
    degrees.insert(key.second);
  }
  // also sweep every generator-subset lcm, where betti numbers may have
  // cancelled to zero but the inclusion-exclusion coefficient must then
  // vanish as well
  const size_t r = I.gen_count();
  for (std::uint64_t mask = 1; mask < (1ULL << r); ++mask) {
    std::vector<std::int64_t> top(static_cast<size_t>(I.vars()), 0);
    for (size_t g = 0; g < r; ++g) {
      if (!(mask & (1ULL << g))) continue;
      for (int i = 0; i < I.vars(); ++i)
        top[static_cast<size_t>(i)] = std::max(
            top[static_cast<size_t>(i)], to_int64(I.gens()[g].exponent(i), "test"));
    }
    degrees.insert(std::move(top));
  }
  for (const auto& b : degrees) {
    BigInt alternating = 0;
    for (int i = 0; i <= I.vars() + 1; ++i) {
      std::int64_t v = M.get(i, b);
      alternating += (i % 2 == 0) ? BigInt(v) : BigInt(-v);
    }
    CHECK(alternating == k_polynomial_coefficient(I, b));
  }
}

}  // namespace

TEST_CASE("upper Koszul complexes") {
  MonomialIdeal I = ideal("a,b,c", 3);
  SimplicialComplex K = upper_koszul(I, {1, 1, 0});
  CHECK(K.faces() == std::set<std::vector<int>>{{}, {1}, {2}});

  // multidegree below every generator gives the void complex
  MonomialIdeal J = ideal("a^2,b^2", 2);
  CHECK(upper_koszul(J, {1, 1}).is_void());

  // at a minimal generator only the empty face survives
  MonomialIdeal P = ideal("a", 3);
  SimplicialComplex K2 = upper_koszul(P, {1, 0, 0});
  CHECK(K2.faces() == std::set<std::vector<int>>{{}});

  CHECK(upper_koszul(I, {1, 1, 1}).is_downward_closed());
  CHECK(upper_koszul(ideal("a^2,a*b,b^3", 2), {2, 3}).is_downward_closed());
}

TEST_CASE("reduced homology conventions") {
  for (FieldChar F : kChars) {
    SimplicialComplex irrelevant;
    irrelevant.add_face({});
    auto dims = reduced_homology(irrelevant, F);
    REQUIRE(dims.size() == 1);
    CHECK(dims[0] == 1);  // H~_{-1}({∅}) = 1

    SimplicialComplex void_complex;
    CHECK(reduced_homology(void_complex, F).empty());

    SimplicialComplex hollow_triangle;
    hollow_triangle.add_face_with_closure({1, 2});
    hollow_triangle.add_face_with_closure({1, 3});
    hollow_triangle.add_face_with_closure({2, 3});
    dims = reduced_homology(hollow_triangle, F);
    REQUIRE(dims.size() == 3);
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 0);  // connected
    CHECK(dims[2] == 1);  // one circle

    // hexagon boundary is a circle; coning it off makes it acyclic
    SimplicialComplex cycle;
    for (int v = 0; v < 6; ++v) cycle.add_face_with_closure({v, (v + 1) % 6});
    dims = reduced_homology(cycle, F);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);

    SimplicialComplex filled = cycle;
    for (int v = 0; v < 6; ++v) filled.add_face_with_closure({v, (v + 1) % 6, 6});
    for (auto h : reduced_homology(filled, F)) CHECK(h == 0);
  }
}

TEST_CASE("multigraded Betti numbers of the Koszul ideals") {
  for (FieldChar F : kChars) {
    MultigradedBettiTable M = multigraded_betti(ideal("a,b,c", 3), F);
    CHECK(M.get(1, {1, 0, 0}) == 1);
    CHECK(M.get(1, {0, 1, 0}) == 1);
    CHECK(M.get(1, {0, 0, 1}) == 1);
    CHECK(M.get(3, {1, 1, 1}) == 1);
    GradedBettiTable T = coarse_table(M);
    CHECK(T.totals() == std::vector<BigInt>{1, 3, 3, 1});

    GradedBettiTable T2 = betti_table(ideal("a^2,b^2,c^2", 3), F);
    CHECK(T2.totals() == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(T2.get(1, 2) == 3);
    CHECK(T2.get(2, 4) == 3);
    CHECK(T2.get(3, 6) == 1);
  }
}

TEST_CASE("coarse tables of the three-variable product ideals") {
  GradedBettiTable J = betti_table(ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3),
                                   FieldChar(2));
  CHECK(J.totals() == std::vector<BigInt>{1, 9, 12, 4});
  CHECK(J.get(1, 3) == 9);
  CHECK(J.get(2, 4) == 12);
  CHECK(J.get(3, 5) == 3);
  CHECK(J.get(3, 6) == 1);

  GradedBettiTable Ip = betti_table(ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2", 3),
                                    FieldChar(2));
  CHECK(Ip.totals() == std::vector<BigInt>{1, 7, 9, 3});
  CHECK(Ip.get(1, 3) == 7);
  CHECK(Ip.get(2, 4) == 8);
  CHECK(Ip.get(2, 5) == 1);
  CHECK(Ip.get(3, 5) == 2);
  CHECK(Ip.get(3, 6) == 1);
}

TEST_CASE("five-variable Borel-sense pair over F_2") {
  const int n = 5;
  MonomialIdeal B = p_borel_closure({parse_monomial("a*c*e^2", n), parse_monomial("b^2*e^2", n),
                                     parse_monomial("b*c*d^2", n), parse_monomial("b*c^2*d", n)},
                                    2, n);
  REQUIRE(B.gen_count() == 29);
  GradedBettiTable TB = betti_table(B, FieldChar(2));
  CHECK(TB.totals() == std::vector<BigInt>{1, 29, 78, 83, 41, 8});

  TableStats stats = regularity_and_pdim(TB);
  CHECK(stats.reg_quotient == 5);
  CHECK(stats.reg_ideal == 6);
  CHECK(stats.pdim == 5);
}

TEST_CASE("regularity and projective dimension") {
  GradedBettiTable J = betti_table(ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3),
                                   FieldChar(0));
  TableStats s = regularity_and_pdim(J);
  CHECK(s.reg_quotient == 3);
  CHECK(s.reg_ideal == 4);
  CHECK(s.pdim == 3);

  TableStats koszul = regularity_and_pdim(betti_table(ideal("a,b,c", 3), FieldChar(0)));
  CHECK(koszul.reg_ideal == 1);
  CHECK(koszul.pdim == 3);
}

TEST_CASE("Euler characteristic agrees with inclusion-exclusion") {
  std::vector<MonomialIdeal> suite = {
      ideal("a,b,c", 3),        ideal("a^2,b^2,c^2", 3), ideal("a,b", 2),
      ideal("a^3,a^2*b", 2),    ideal("a^2,a*b,b^2", 2), ideal("a^2*b,b*c,c^3", 3),
      ideal("a*b,b*c,a*c", 3),
  };
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    std::vector<Monomial> raw;
    for (int g = 0; g < 6; ++g) {
      std::vector<BigInt> e(3);
      for (auto& x : e) x = rng() % 4;
      Monomial m{std::move(e)};
      if (!m.is_one()) raw.push_back(m);
    }
    if (!raw.empty()) suite.emplace_back(3, raw);
  }
  for (const auto& I : suite) {
    if (I.gen_count() > 6) continue;
    for (FieldChar F : kChars) check_euler_consistency(I, F);
  }
}
