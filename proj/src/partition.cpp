#include "blockwitness/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bw {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  size_t i = 0;
  bool first = true;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) out << ",";
    out << parts[i];
    if (j - i > 1) out << "^" << (j - i);
    first = false;
    i = j;
  }
  out << ")";
  return out.str();
}

namespace {

void enumerate_rec(long n, long max_part, std::vector<long>& prefix,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (long k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    enumerate_rec(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<long> prefix;
  enumerate_rec(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

Partition conjugate(const Partition& la) {
  if (la.parts.empty()) return Partition{};
  std::vector<long> cols(static_cast<size_t>(la.parts[0]), 0);
  for (long part : la.parts)
    for (long j = 0; j < part; ++j) ++cols[static_cast<size_t>(j)];
  return Partition(std::move(cols));
}

std::vector<long> hook_multiset(const Partition& la) {
  std::vector<long> hooks;
  const Partition conj = conjugate(la);
  for (size_t i = 0; i < la.parts.size(); ++i)
    for (long j = 0; j < la.parts[i]; ++j)
      hooks.push_back(la.parts[i] - j + conj.parts[static_cast<size_t>(j)] -
                      static_cast<long>(i) - 1);
  return hooks;
}

Int degree_Sn(const Partition& la) {
  Int num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(la.size()));
  for (long h : hook_multiset(la))
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(h));
  return num;
}

namespace {

long legendre_valuation_factorial(long n, long p) {
  long v = 0;
  for (long pk = p; pk <= n; pk *= p) {
    v += n / pk;
    if (pk > n / p) break;
  }
  return v;
}

long small_valuation(long x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

long degree_valuation_Sn(const Partition& la, long p) {
  long v = legendre_valuation_factorial(la.size(), p);
  for (long h : hook_multiset(la)) v -= small_valuation(h, p);
  return v;
}

std::vector<long> beta_set(const Partition& la, long len) {
  const long k = static_cast<long>(la.parts.size());
  if (len < k) throw std::invalid_argument("beta_set: padding shorter than partition");
  std::vector<long> beta(static_cast<size_t>(len));
  for (long i = 0; i < len; ++i) {
    long part = i < k ? la.parts[static_cast<size_t>(i)] : 0;
    beta[static_cast<size_t>(i)] = part + (len - 1 - i);
  }
  std::sort(beta.begin(), beta.end());
  return beta;
}

Partition partition_from_beta_set(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end());
  std::vector<long> parts;
  const long len = static_cast<long>(beta.size());
  for (long i = len - 1; i >= 0; --i) {
    long part = beta[static_cast<size_t>(i)] - i;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition e_core(const Partition& la, long e) {
  if (e < 2) throw std::invalid_argument("e_core: e must be >= 2");
  auto beta = beta_set(la, static_cast<long>(la.parts.size()));
  // Push every bead down its residue class: a class with c beads occupies
  // positions rho, rho + e, ..., rho + (c-1)e in the core.
  std::vector<long> counts(static_cast<size_t>(e), 0);
  for (long x : beta) ++counts[static_cast<size_t>(x % e)];
  std::vector<long> core_beta;
  for (long rho = 0; rho < e; ++rho)
    for (long c = 0; c < counts[static_cast<size_t>(rho)]; ++c)
      core_beta.push_back(rho + c * e);
  return partition_from_beta_set(std::move(core_beta));
}

TwoAdicFrame two_adic_frame(long n, long r) {
  if (n < 1) throw std::invalid_argument("two_adic_frame: n must be >= 1");
  if (r < 0) throw std::invalid_argument("two_adic_frame: r must be >= 0");
  TwoAdicFrame fr;
  for (long bit = 0; (1L << bit) <= n; ++bit)
    if (n & (1L << bit)) fr.digits.push_back(bit);
  if (r >= (1L << fr.digits.back())) throw std::domain_error("FrameUndefined");
  fr.t0 = 0;
  while (r >= (1L << fr.digits[static_cast<size_t>(fr.t0)])) ++fr.t0;
  fr.T = 0;
  for (size_t i = static_cast<size_t>(fr.t0); i < fr.digits.size(); ++i)
    fr.T += 1L << fr.digits[i];
  fr.a = n - fr.T + 1;
  return fr;
}

SecondFrame second_frame(long n, long r, long e) {
  TwoAdicFrame base = two_adic_frame(n, 0);
  if (e + r >= (1L << base.digits.back())) throw std::domain_error("FrameUndefined");
  SecondFrame fr;
  fr.s0 = 0;
  while (e + r >= (1L << base.digits[static_cast<size_t>(fr.s0)])) ++fr.s0;
  fr.S = 0;
  for (size_t i = static_cast<size_t>(fr.s0); i < base.digits.size(); ++i)
    fr.S += 1L << base.digits[i];
  fr.b = n - fr.S + 1;
  return fr;
}

long partition_n_stat(const Partition& la) {
  long s = 0;
  for (size_t i = 0; i < la.parts.size(); ++i)
    s += static_cast<long>(i) * la.parts[i];
  return s;
}

Int unipotent_degree_glu(const Partition& la, const PrimePower& q, int eps) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("unipotent_degree_glu: eps must be +-1");
  const long n = la.size();
  if (n < 1) throw std::invalid_argument("unipotent_degree_glu: empty partition");
  auto factor = [&](long k) {
    Int qk;
    mpz_pow_ui(qk.get_mpz_t(), q.value.get_mpz_t(), static_cast<unsigned long>(k));
    long ek = (eps == 1 || k % 2 == 0) ? 1 : -1;
    return Int(qk - ek);
  };
  Int num;
  mpz_pow_ui(num.get_mpz_t(), q.value.get_mpz_t(),
             static_cast<unsigned long>(partition_n_stat(la)));
  for (long i = 1; i <= n; ++i) num *= factor(i);
  Int den = 1;
  for (long h : hook_multiset(la)) den *= factor(h);
  Int quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("InternalError: non-integral unipotent degree");
  return abs(quo);
}

}  // namespace bw
