#include <doctest.h>

#include <stdexcept>

#include "blockwitness/symbol.hpp"

using namespace bw;

namespace {
Symbol sym(std::vector<long> x, std::vector<long> y) { return Symbol::from_rows(x, y); }
}  // namespace

TEST_CASE("construction and canonical form") {
  Symbol triv = sym({5}, {});
  CHECK(triv.rowX == std::vector<long>{5});
  CHECK(triv.rowY.empty());

  Symbol zeros = sym({0, 1}, {0, 1});
  CHECK(zeros.rowX.empty());
  CHECK(zeros.rowY.empty());

  Symbol s = sym({1, 3, 4}, {0, 1});
  CHECK(s.rowX == std::vector<long>{1, 3, 4});
  CHECK(s.rowY == std::vector<long>{0, 1});

  CHECK_THROWS_WITH_AS(sym({3, 3}, {}), "MalformedSymbol", std::invalid_argument);
  CHECK_THROWS_WITH_AS(sym({4, 1}, {0}), "MalformedSymbol", std::invalid_argument);
}

TEST_CASE("row orientation is deterministic") {
  Symbol a = sym({0, 1}, {2, 3, 4});
  Symbol b = sym({2, 3, 4}, {0, 1});
  CHECK(a.rowX == b.rowX);
  CHECK(a.rowY == b.rowY);
  CHECK(a.rowX.size() >= a.rowY.size());
}

TEST_CASE("rank and defect") {
  auto rd1 = rank_and_defect(sym({5}, {}));
  CHECK(rd1.rank == 5);
  CHECK(rd1.defect == 1);
  auto rd2 = rank_and_defect(sym({1, 3, 4}, {0, 1}));
  CHECK(rd2.rank == 5);
  CHECK(rd2.defect == 1);
  auto rd3 = rank_and_defect(sym({0, 6}, {}));
  CHECK(rd3.rank == 6);
  CHECK(rd3.defect == 2);
  auto rd4 = rank_and_defect(sym({6}, {0}));
  CHECK(rd4.rank == 6);
  CHECK(rd4.defect == 0);
}

TEST_CASE("rank and defect are shift invariant") {
  auto shift = [](const Symbol& s) {
    std::vector<long> x{0}, y{0};
    for (long v : s.rowX) x.push_back(v + 1);
    for (long v : s.rowY) y.push_back(v + 1);
    return Symbol::from_rows_raw(x, y);  // unreduced, for invariance checks
  };
  for (const Symbol& s :
       {sym({5}, {}), sym({1, 3, 4}, {0, 1}), sym({0, 6}, {}), sym({2, 5}, {1, 3})}) {
    auto rd = rank_and_defect(s);
    auto rds = rank_and_defect(shift(s));
    CHECK(rd.rank == rds.rank);
    CHECK(rd.defect == rds.defect);
  }
}

TEST_CASE("e_core_symbol") {
  // core of the B/C trivial symbol is (r | -); hook removal preserves defect,
  // so r = 0 yields (0 | -) rather than the empty symbol
  for (long n : {5L, 7L, 9L})
    for (long e = 2; e <= 4; ++e) {
      long r = n % e;
      Symbol core = e_core_symbol(sym({n}, {}), e);
      Symbol expect = sym({r}, {});
      CHECK(core.rowX == expect.rowX);
      CHECK(core.rowY == expect.rowY);
    }
  Symbol c = e_core_symbol(sym({1, 3, 4}, {0, 1}), 3);
  CHECK(c.rowX == std::vector<long>{2});
  CHECK(c.rowY.empty());
  // no hooks at large e
  Symbol s = sym({1, 3, 4}, {0, 1});
  Symbol big = e_core_symbol(s, 9);
  CHECK(big.rowX == s.rowX);
  CHECK(big.rowY == s.rowY);
}

TEST_CASE("e_cocore_symbol matches the quoted trivial-character cocores") {
  // B/C trivial
  for (long n : {5L, 7L, 8L})
    for (long e = 2; e <= 4; ++e) {
      long r = n % e;
      Symbol cc = e_cocore_symbol(sym({n}, {}), e);
      Symbol expect = sym({r}, {});
      CHECK(cc.rowX == expect.rowX);
      CHECK(cc.rowY == expect.rowY);
    }
  // D trivial, e not dividing n, m odd: (n=7, e=3, m=2 even) and (n=7, e=2, m=3 odd)
  {
    Symbol cc = e_cocore_symbol(sym({7}, {0}), 2);  // m = 3 odd, r = 1
    Symbol expect = sym({0, 1}, {});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
  {
    Symbol cc = e_cocore_symbol(sym({7}, {0}), 3);  // m = 2 even, r = 1
    Symbol expect = sym({1}, {0});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
  {
    Symbol cc = e_cocore_symbol(sym({6}, {0}), 2);  // m = 3 odd, e | n
    Symbol expect = sym({2}, {0});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
  // 2D trivial
  {
    Symbol cc = e_cocore_symbol(sym({0, 7}, {}), 2);  // m = 3 odd, r = 1
    Symbol expect = sym({1}, {0});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
  {
    Symbol cc = e_cocore_symbol(sym({0, 7}, {}), 3);  // m = 2 even, r = 1
    Symbol expect = sym({0, 1}, {});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
  {
    Symbol cc = e_cocore_symbol(sym({0, 6}, {}), 2);  // m = 3 odd, e | n
    CHECK(cc.rowX.empty());
    CHECK(cc.rowY.empty());
  }
  {
    Symbol cc = e_cocore_symbol(sym({0, 6}, {}), 3);  // m = 2 even, e | n
    Symbol expect = sym({3}, {0});
    CHECK(cc.rowX == expect.rowX);
    CHECK(cc.rowY == expect.rowY);
  }
}

TEST_CASE("core and cocore are idempotent with correct rank drops") {
  std::vector<Symbol> samples = {sym({9}, {}), sym({1, 3, 4}, {0, 1}), sym({0, 8}, {}),
                                 sym({8}, {0}), sym({2, 5, 7}, {1, 4})};
  for (const Symbol& s : samples)
    for (long e = 2; e <= 5; ++e) {
      auto rd = rank_and_defect(s);
      Symbol c = e_core_symbol(s, e);
      auto rdc = rank_and_defect(c);
      CHECK((rd.rank - rdc.rank) % e == 0);
      CHECK(rdc.defect == rd.defect);
      Symbol cc = e_cocore_symbol(s, e);
      auto rdcc = rank_and_defect(cc);
      CHECK((rd.rank - rdcc.rank) % e == 0);
      CHECK(rdcc.defect % 2 == rd.defect % 2);
      Symbol c2 = e_core_symbol(c, e);
      CHECK(c2.rowX == c.rowX);
      CHECK(c2.rowY == c.rowY);
      Symbol cc2 = e_cocore_symbol(cc, e);
      CHECK(cc2.rowX == cc.rowX);
      CHECK(cc2.rowY == cc.rowY);
    }
}

TEST_CASE("trivial_symbol") {
  Symbol bc = trivial_symbol(Family::TypeBC, 5);
  CHECK(bc.rowX == std::vector<long>{5});
  CHECK(bc.rowY.empty());
  Symbol d = trivial_symbol(Family::TypeD, 6);
  CHECK(d == sym({6}, {0}));
  CHECK(d.to_string() == "(0 | 6)");
  Symbol d2 = trivial_symbol(Family::Type2D, 6);
  CHECK(d2.rowX == std::vector<long>{0, 6});
  CHECK(d2.rowY.empty());
  CHECK_THROWS_WITH_AS(trivial_symbol(Family::TypeBC, 2), "RankTooSmall",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(trivial_symbol(Family::TypeD, 3), "RankTooSmall",
                       std::domain_error);
}

TEST_CASE("family_defect_ok") {
  CHECK(family_defect_ok(sym({5}, {}), Family::TypeBC));
  CHECK(family_defect_ok(sym({0, 6}, {}), Family::Type2D));
  CHECK(family_defect_ok(sym({6}, {0}), Family::TypeD));
  CHECK_FALSE(family_defect_ok(sym({0, 6}, {}), Family::TypeD));
  CHECK_FALSE(family_defect_ok(sym({6}, {0}), Family::Type2D));
  CHECK_FALSE(family_defect_ok(sym({0, 6}, {}), Family::TypeBC));
}

TEST_CASE("text round trip") {
  for (const std::string& text : {"(1 3 4 | 0 1)", "(5 | -)", "(0 6 | -)"}) {
    Symbol s = Symbol::parse(text);
    CHECK(s.to_string() == text);
  }
  Symbol empty = sym({}, {});
  CHECK(empty.to_string() == "(- | -)");
}
