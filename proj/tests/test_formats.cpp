#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spborel/betti_table.hpp"
#include "spborel/oracle.hpp"

using namespace spborel;

TEST_CASE("table invariants") {
  GradedBettiTable T;
  CHECK(T.get(0, 0) == 1);
  CHECK(T.pdim() == 0);
  CHECK_THROWS_AS(T.add(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(T.add(1, 2, -1), std::invalid_argument);

  T.add(1, 2, 3);
  T.add(1, 2, 1);
  CHECK(T.get(1, 2) == 4);
  CHECK(T.total(1) == 4);
  T.add(2, 3, 5);
  CHECK(T.pdim() == 2);
  CHECK(T.min_shift(1) == 2);
  CHECK(T.max_shift(2) == 3);
  CHECK_FALSE(T.has_entries_at(3));
}

TEST_CASE("diagram layout matches the printed convention") {
  GradedBettiTable J = betti_table(
      parse_ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3), FieldChar(0));
  std::string diagram = render_diagram(J);
  CHECK(diagram ==
        "total: 1 9 12 4\n"
        "    0: 1 .  . .\n"
        "    1: . .  . .\n"
        "    2: . 9 12 3\n"
        "    3: . .  . 1\n");

  GradedBettiTable koszul = betti_table(parse_ideal("a,b,c", 3), FieldChar(0));
  CHECK(render_diagram(koszul) ==
        "total: 1 3 3 1\n"
        "    0: 1 3 3 1\n");
}

TEST_CASE("tsv round trip") {
  GradedBettiTable J = betti_table(
      parse_ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3), FieldChar(2));
  CHECK(parse_tsv(render_tsv(J)) == J);

  GradedBettiTable single;
  single.add(1, 7, 2);
  CHECK(parse_tsv(render_tsv(single)) == single);
  CHECK_THROWS_AS(parse_tsv("0\t1\t1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tsv("bad line\n"), std::invalid_argument);
}

TEST_CASE("multigraded tsv lines") {
  MultigradedBettiTable M = multigraded_betti(parse_ideal("a,b", 2), FieldChar(0));
  std::string tsv = render_tsv(M);
  CHECK(tsv.find("1\t1,0\t1\n") != std::string::npos);
  CHECK(tsv.find("2\t1,1\t1\n") != std::string::npos);
}

TEST_CASE("coarsening is consistent with totals") {
  MonomialIdeal I = parse_ideal("a^2,a*b,b^2", 2);
  MultigradedBettiTable M = multigraded_betti(I, FieldChar(0));
  GradedBettiTable T = coarse_table(M);
  CHECK(T == betti_table(I, FieldChar(0)));
  CHECK(T.totals() == std::vector<BigInt>{1, 3, 2});
}
