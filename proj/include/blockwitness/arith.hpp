#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bw {

using Int = mpz_class;
using Rat = mpq_class;

/// A prime power q = ell^f with ell prime and f >= 1.
struct PrimePower {
  long ell;
  long f;
  Int value;

  PrimePower(long ell_, long f_);

  bool operator==(const PrimePower& o) const { return value == o.value; }
  std::string to_string() const;

  /// Factors a small integer v >= 2 as ell^f, rejecting non prime powers.
  static PrimePower from_value(long v);
};

/// Smallest k >= 1 with m^k = 1 mod modulus. Throws "NotCoprime" if
/// gcd(m, modulus) != 1.
long multiplicative_order(const Int& m, const Int& modulus);

/// Order of m mod p for odd p, order of m mod 4 for p = 2.
long d_p(const Int& m, long p);

enum class PsiKind { Minus, Plus };

/// q^k - 1 (Minus) or q^k + 1 (Plus).
Int psi_value(long k, const Int& q, PsiKind kind);

/// Value of the d-th cyclotomic polynomial at q, by exact recursive division.
Int phi_value(long d, const Int& q);

/// p-adic valuation; throws "ZeroValuation" on x = 0.
long valuation(const Int& x, long p);
long valuation(const Rat& x, long p);

/// Formal product  scalar * q^q_exponent * prod Psi_k^e * prod Psi'_k^e,
/// evaluated exactly at any prime power q.
class PsiExpr {
 public:
  PsiExpr() : scalar_(1) {}
  explicit PsiExpr(const Rat& scalar) : scalar_(scalar) { canonicalize_scalar(); }

  static PsiExpr psi(long k, PsiKind kind, long exp = 1) {
    PsiExpr e;
    e.mul_psi(k, kind, exp);
    return e;
  }

  PsiExpr& mul_psi(long k, PsiKind kind, long exp = 1);
  PsiExpr& mul_scalar(const Rat& s);
  PsiExpr& mul_q_power(long e) {
    q_exponent_ += e;
    return *this;
  }
  PsiExpr& operator*=(const PsiExpr& o);
  friend PsiExpr operator*(PsiExpr a, const PsiExpr& b) { return a *= b; }

  const Rat& scalar() const { return scalar_; }
  long q_exponent() const { return q_exponent_; }
  const std::map<std::pair<PsiKind, long>, long>& factors() const { return factors_; }
  bool empty() const {
    return factors_.empty() && q_exponent_ == 0 && scalar_ == 1;
  }

  Rat evaluate(const PrimePower& q) const;
  std::string to_string() const;

 private:
  void canonicalize_scalar() { scalar_.canonicalize(); }

  Rat scalar_{1};
  long q_exponent_ = 0;
  std::map<std::pair<PsiKind, long>, long> factors_;
};

enum class Branch { Core, Cocore };

struct BlockBranch {
  long e;
  Branch branch;
};

/// e = order of q^2 mod p, together with the branch deciding whether blocks
/// are labelled by e-cores (p | Psi_e) or e-cocores (p | Psi'_e).
BlockBranch block_branch(long p, const PrimePower& q);

}  // namespace bw
