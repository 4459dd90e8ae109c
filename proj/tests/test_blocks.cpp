#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blockwitness/blocks.hpp"

using namespace bw;

namespace {
Partition hook12() {
  std::vector<long> parts{2};
  parts.insert(parts.end(), 10, 1);
  return Partition(parts);
}
}  // namespace

TEST_CASE("principal_block_Sn") {
  CHECK(principal_block_Sn(Partition({7}), 3));
  CHECK_FALSE(principal_block_Sn(Partition({2, 1}), 2));
  CHECK(principal_block_Sn(hook12(), 5));
}

TEST_CASE("principal_block_Sn depends only on the p-core") {
  for (long n : {8L, 11L})
    for (long p : {2L, 3L, 5L}) {
      std::map<std::vector<long>, bool> verdict_by_core;
      for (const Partition& la : enumerate_partitions(n)) {
        auto core = e_core(la, p).parts;
        bool in = principal_block_Sn(la, p);
        auto it = verdict_by_core.find(core);
        if (it == verdict_by_core.end())
          verdict_by_core.emplace(core, in);
        else
          CHECK(it->second == in);
      }
    }
}

TEST_CASE("irr_pprime_principal_Sn") {
  auto s1 = irr_pprime_principal_Sn(3, 2);
  CHECK(s1.size() == 2);
  auto s2 = irr_pprime_principal_Sn(4, 3);
  CHECK(s2.size() == 3);
  bool has22 = false;
  for (const Partition& la : s2) has22 |= la.parts == std::vector<long>{2, 2};
  CHECK(has22);
  // p > n: every block has defect zero, so only the trivial character remains
  CHECK(irr_pprime_principal_Sn(6, 7).size() == 1);
  for (long n = 1; n <= 12; ++n)
    for (long p : {2L, 3L, 5L, 7L}) CHECK(!irr_pprime_principal_Sn(n, p).empty());
}

TEST_CASE("principal_block_typeA") {
  CHECK(principal_block_typeA(Partition({7}), 5));
  CHECK(principal_block_typeA(Partition({3, 3, 1}), 5));
  for (long n : {6L, 9L})
    for (long e = 2; e <= 4; ++e) {
      Partition st(std::vector<long>(n, 1));
      long r = n % e;
      std::vector<long> expect = r ? std::vector<long>{r} : std::vector<long>{};
      CHECK(principal_block_typeA(st, e) == (e_core(st, e).parts == expect));
    }
}

TEST_CASE("principal_block_classical") {
  for (long n : {5L, 8L}) {
    auto ctx = BlockContext::classical(Family::TypeBC, n, 5, PrimePower(3, 1));
    CHECK(principal_block_classical(trivial_symbol(Family::TypeBC, n), ctx));
  }
  {
    // p = 7, q = 3: ord_7(9) = 3, 3^3 - 1 = 26 not divisible, 3^3 + 1 = 28 is
    auto bb = block_branch(7, PrimePower(3, 1));
    CHECK(bb.e == 3);
    CHECK(bb.branch == Branch::Cocore);
    // p = 13, q = 3: 13 | 26, core branch
    auto ctx = BlockContext::classical(Family::TypeBC, 5, 13, PrimePower(3, 1));
    CHECK(ctx.e == 3);
    CHECK(ctx.branch == Branch::Core);
    CHECK(principal_block_classical(Symbol::from_rows({1, 3, 4}, {0, 1}), ctx));
  }
  {
    // p = 2 short-circuits to true
    auto ctx = BlockContext::symmetric(5, 2);
    ctx.family = Family::TypeBC;
    ctx.q = PrimePower(3, 1);
    CHECK(principal_block_classical(Symbol::from_rows({0, 2, 4}, {1, 2}), ctx));
  }
  {
    auto ctx = BlockContext::classical(Family::TypeBC, 6, 5, PrimePower(3, 1));
    CHECK_THROWS_WITH_AS(
        principal_block_classical(trivial_symbol(Family::TypeBC, 5), ctx),
        "RankMismatch", std::domain_error);
  }
}

TEST_CASE("an_intersection degrees 14 and 64 at (8, 3, 5)") {
  auto ai = an_intersection(8, 3, 5);
  std::vector<Int> degrees;
  for (const auto& [la, mu] : ai.pairs) {
    CHECK(conjugate(la).parts == mu.parts);
    CHECK(la.parts != mu.parts);
    degrees.push_back(degree_Sn(la));
  }
  CHECK(std::count(degrees.begin(), degrees.end(), Int(14)) == 1);
  CHECK(std::count(degrees.begin(), degrees.end(), Int(64)) == 1);
}

TEST_CASE("an_intersection basic properties") {
  // p, q > n: both principal blocks reduce to the trivial character, whose
  // A_n restriction pairs (n) with (1^n)
  auto big = an_intersection(6, 7, 11);
  REQUIRE(big.pairs.size() == 1);
  CHECK(big.pairs[0].first.parts == std::vector<long>(6, 1));
  CHECK(big.pairs[0].second.parts == std::vector<long>{6});
  CHECK(big.indeterminate.empty());

  CHECK(!an_intersection(8, 2, 3).pairs.empty());

  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 5}, {2, 5}}) {
    auto a = an_intersection(9, p, q);
    auto b = an_intersection(9, q, p);
    CHECK(a.pairs.size() == b.pairs.size());
    for (size_t i = 0; i < a.pairs.size(); ++i) {
      CHECK(a.pairs[i].first.parts == b.pairs[i].first.parts);
      CHECK(a.pairs[i].second.parts == b.pairs[i].second.parts);
    }
  }
}
