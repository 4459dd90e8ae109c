#include "blockwitness/blocks.hpp"

#include <algorithm>

namespace bw {

BlockContext BlockContext::symmetric(long n, long p) {
  BlockContext ctx;
  ctx.family = Family::Symmetric;
  ctx.n = n;
  ctx.p = p;
  ctx.e = p;
  ctx.branch = Branch::Core;
  return ctx;
}

BlockContext BlockContext::classical(Family family, long n, long p,
                                     const PrimePower& q) {
  BlockContext ctx;
  ctx.family = family;
  ctx.n = n;
  ctx.p = p;
  ctx.q = q;
  if (p == 2) {
    ctx.e = 1;
    ctx.branch = Branch::Core;
  } else {
    auto bb = block_branch(p, q);
    ctx.e = bb.e;
    ctx.branch = bb.branch;
  }
  return ctx;
}

bool principal_block_Sn(const Partition& la, long p) {
  const long n = la.size();
  return e_core(la, p) == e_core(Partition({n}), p);
}

std::vector<Partition> irr_pprime_principal_Sn(long n, long p) {
  std::vector<Partition> out;
  const Partition trivial_core = e_core(Partition({n}), p);
  for (const Partition& la : enumerate_partitions(n))
    if (e_core(la, p) == trivial_core && degree_valuation_Sn(la, p) == 0)
      out.push_back(la);
  return out;
}

bool principal_block_typeA(const Partition& la, long e) {
  const long n = la.size();
  const long r = n % e;
  Partition target = r == 0 ? Partition{} : Partition({r});
  return e_core(la, e) == target;
}

bool principal_block_classical(const Symbol& s, const BlockContext& ctx) {
  if (ctx.family != Family::TypeBC && ctx.family != Family::TypeD &&
      ctx.family != Family::Type2D)
    throw std::invalid_argument("principal_block_classical: classical family required");
  if (rank_and_defect(s).rank != ctx.n) throw std::domain_error("RankMismatch");
  if (ctx.p == 2) return true;
  const Symbol triv = trivial_symbol(ctx.family, ctx.n);
  if (ctx.branch == Branch::Core)
    return e_core_symbol(s, ctx.e) == e_core_symbol(triv, ctx.e);
  return e_cocore_symbol(s, ctx.e) == e_cocore_symbol(triv, ctx.e);
}

AnIntersection an_intersection(long n, long p, long q) {
  if (n < 5) throw std::invalid_argument("an_intersection: n must be >= 5");
  if (p == q) throw std::invalid_argument("an_intersection: p and q must differ");
  AnIntersection out;
  // An A_n character {la, la'} lies in the principal p-block when la or la'
  // does at the S_n level; block membership can split across the pair while
  // the common degree stays p'-coprime.
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const Partition& la : enumerate_partitions(n)) {
    Partition conj = conjugate(la);
    if (conj < la) continue;
    if (degree_valuation_Sn(la, p) != 0 || degree_valuation_Sn(la, q) != 0) continue;
    if (la == conj) {
      if (principal_block_Sn(la, p) && principal_block_Sn(la, q))
        out.indeterminate.push_back(la);
      continue;
    }
    bool in_p = principal_block_Sn(la, p) || principal_block_Sn(conj, p);
    bool in_q = principal_block_Sn(la, q) || principal_block_Sn(conj, q);
    if (in_p && in_q) pairs.emplace_back(la, conj);
  }
  std::sort(pairs.begin(), pairs.end());
  out.pairs = std::move(pairs);
  return out;
}

}  // namespace bw
