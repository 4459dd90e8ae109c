#include "blockwitness/selftest.hpp"

#include <random>

#include "blockwitness/blocks.hpp"
#include "blockwitness/conjectures.hpp"
#include "blockwitness/partition.hpp"
#include "blockwitness/symbol.hpp"

namespace bw {

namespace {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<long> prime_powers_up_to(long n) {
  std::vector<long> out;
  for (long v = 2; v <= n; ++v) {
    long x = v;
    long base = 0;
    for (long d = 2; d <= x; ++d) {
      if (x % d == 0) {
        base = d;
        while (x % d == 0) x /= d;
        break;
      }
    }
    if (x == 1 && base != 0) out.push_back(v);
  }
  return out;
}

// Move-based e-core oracle with randomized move order.
Partition e_core_random(const Partition& la, long e, long pad, std::mt19937& rng) {
  auto beta = beta_set(la, pad);
  for (;;) {
    std::vector<size_t> movable;
    for (size_t i = 0; i < beta.size(); ++i) {
      long t = beta[i] - e;
      if (t >= 0 && std::find(beta.begin(), beta.end(), t) == beta.end())
        movable.push_back(i);
    }
    if (movable.empty()) break;
    size_t pick = movable[rng() % movable.size()];
    beta[pick] -= e;
  }
  return partition_from_beta_set(beta);
}

bool cyclotomic_suite(std::ostream& out, long d_max, long q_max, long p_max) {
  bool ok = true;
  auto primes = primes_up_to(p_max);
  for (long qv : prime_powers_up_to(q_max)) {
    Int q(qv);
    std::vector<Int> phi(static_cast<size_t>(d_max + 1));
    for (long d = 1; d <= d_max; ++d) phi[static_cast<size_t>(d)] = phi_value(d, q);
    // product over divisors reassembles Psi_k
    for (long k = 1; k <= d_max; ++k) {
      Int prod = 1;
      for (long d = 1; d <= k; ++d)
        if (k % d == 0) prod *= phi[static_cast<size_t>(d)];
      if (prod != psi_value(k, q, PsiKind::Minus)) ok = false;
    }
    for (long p : primes) {
      if (p == 2) {
        if (qv % 2 == 1)
          for (long d = 1; d <= d_max; ++d) {
            bool div = mpz_divisible_ui_p(phi[static_cast<size_t>(d)].get_mpz_t(), 2);
            bool pow2 = (d & (d - 1)) == 0;
            if (div != pow2) ok = false;
          }
        continue;
      }
      if (qv % p == 0) continue;
      long dp = d_p(q, p);
      for (long d = 1; d <= d_max; ++d) {
        bool div = mpz_divisible_ui_p(phi[static_cast<size_t>(d)].get_mpz_t(),
                                      static_cast<unsigned long>(p));
        long quo = d % dp == 0 ? d / dp : 0;
        bool expected = false;
        if (quo > 0) {
          while (quo % p == 0) quo /= p;
          expected = quo == 1;
        }
        if (div != expected) ok = false;
        if (valuation(phi[static_cast<size_t>(d)], p) >= 2 && d != dp) ok = false;
      }
      // exclusivity of the block branch
      auto bb = block_branch(p, PrimePower::from_value(qv));
      bool core = mpz_divisible_ui_p(psi_value(bb.e, q, PsiKind::Minus).get_mpz_t(),
                                     static_cast<unsigned long>(p));
      bool cocore = mpz_divisible_ui_p(psi_value(bb.e, q, PsiKind::Plus).get_mpz_t(),
                                       static_cast<unsigned long>(p));
      if (core == cocore) ok = false;
    }
  }
  out << (ok ? "PASS" : "FAIL") << " cyclotomic invariants (d<=" << d_max
      << ", q<=" << q_max << ", p<=" << p_max << ")\n";
  return ok;
}

bool orthogonality_suite(std::ostream& out, long n_max) {
  bool ok = true;
  for (long n = 1; n <= n_max; ++n) {
    Int sum = 0;
    for (const Partition& la : enumerate_partitions(n)) {
      Int d = degree_Sn(la);
      sum += d * d;
    }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    if (sum != fact) ok = false;
  }
  out << (ok ? "PASS" : "FAIL") << " degree orthogonality (n<=" << n_max << ")\n";
  return ok;
}

bool core_suite(std::ostream& out, long n_max, int samples) {
  std::mt19937 rng(20260823);
  bool ok = true;
  for (int s = 0; s < samples; ++s) {
    long n = 1 + static_cast<long>(rng() % static_cast<unsigned long>(n_max));
    auto parts = enumerate_partitions(n);
    const Partition& la = parts[rng() % parts.size()];
    long e = 2 + static_cast<long>(rng() % 7);
    Partition core = e_core(la, e);
    long pad = static_cast<long>(la.parts.size()) + static_cast<long>(rng() % 5);
    if (!(e_core_random(la, e, pad, rng) == core)) ok = false;
    if ((la.size() - core.size()) % e != 0) ok = false;
    if (!(e_core(core, e) == core)) ok = false;
    // degree consistency
    long p = s % 2 == 0 ? 2 : 3;
    if (degree_valuation_Sn(la, p) != valuation(degree_Sn(la), p)) ok = false;
    Partition conj = conjugate(la);
    if (!(conjugate(conj) == la)) ok = false;
    if (degree_Sn(conj) != degree_Sn(la)) ok = false;
  }
  out << (ok ? "PASS" : "FAIL") << " partition core/degree properties (" << samples
      << " samples, n<=" << n_max << ")\n";
  return ok;
}

bool symbol_suite(std::ostream& out) {
  bool ok = true;
  std::mt19937 rng(7);
  for (int s = 0; s < 300; ++s) {
    std::vector<long> x, y;
    long v = 0;
    for (int i = 0; i < static_cast<int>(rng() % 5); ++i)
      x.push_back(v += 1 + static_cast<long>(rng() % 3));
    v = 0;
    for (int i = 0; i < static_cast<int>(rng() % 5); ++i)
      y.push_back(v += 1 + static_cast<long>(rng() % 3));
    Symbol sym = Symbol::from_rows(x, y);
    long e = 1 + static_cast<long>(rng() % 5);
    auto rd = rank_and_defect(sym);
    Symbol core = e_core_symbol(sym, e);
    Symbol cocore = e_cocore_symbol(sym, e);
    auto rd_core = rank_and_defect(core);
    auto rd_cocore = rank_and_defect(cocore);
    if ((rd.rank - rd_core.rank) % e != 0 || rd_core.defect != rd.defect) ok = false;
    if ((rd.rank - rd_cocore.rank) % e != 0) ok = false;
    if ((rd_cocore.defect - rd.defect) % 2 != 0) ok = false;
    if (!(e_core_symbol(core, e) == core)) ok = false;
    if (!(e_cocore_symbol(cocore, e) == cocore)) ok = false;
    // shift equivalence invariance
    std::vector<long> xs{0}, ys{0};
    for (long t : sym.rowX) xs.push_back(t + 1);
    for (long t : sym.rowY) ys.push_back(t + 1);
    Symbol shifted = Symbol::from_rows(xs, ys);
    auto rd2 = rank_and_defect(shifted);
    if (rd2.rank != rd.rank || rd2.defect != rd.defect) ok = false;
  }
  out << (ok ? "PASS" : "FAIL") << " symbol core/cocore properties\n";
  return ok;
}

bool witness_oracle_suite(std::ostream& out, long n_max) {
  bool ok = true;
  for (long n = 8; n <= n_max; n += 2)
    for (long p : primes_up_to(n - 1)) {
      if (p == 2) continue;
      if (n / p < 1) continue;
      Partition w = witness_partition_Sn(n, p);
      if (!oracle_intersection_member(w, n, p, 2)) ok = false;
      if (w == Partition({n})) ok = false;
    }
  out << (ok ? "PASS" : "FAIL") << " S_n witnesses against brute-force oracle (n<="
      << n_max << ")\n";
  return ok;
}

}  // namespace

bool run_selftest(std::ostream& out, bool quick) {
  bool ok = true;
  ok &= cyclotomic_suite(out, quick ? 24 : 60, quick ? 30 : 100, quick ? 20 : 50);
  ok &= orthogonality_suite(out, quick ? 12 : 20);
  ok &= core_suite(out, quick ? 15 : 25, quick ? 100 : 400);
  ok &= symbol_suite(out);
  ok &= witness_oracle_suite(out, quick ? 16 : 30);
  out << (ok ? "PASS" : "FAIL") << " selftest\n";
  return ok;
}

}  // namespace bw
