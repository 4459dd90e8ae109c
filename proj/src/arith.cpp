#include "blockwitness/arith.hpp"

#include <sstream>

namespace bw {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimePower::PrimePower(long ell_, long f_) : ell(ell_), f(f_) {
  if (!is_prime(ell)) throw std::invalid_argument("PrimePower: ell must be prime");
  if (f < 1) throw std::invalid_argument("PrimePower: f must be >= 1");
  mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(ell),
                static_cast<unsigned long>(f));
}

std::string PrimePower::to_string() const { return value.get_str(); }

PrimePower PrimePower::from_value(long v) {
  if (v < 2) throw std::invalid_argument("PrimePower: value must be >= 2");
  long ell = v;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      ell = d;
      break;
    }
  }
  long f = 0;
  long rest = v;
  while (rest % ell == 0) {
    rest /= ell;
    ++f;
  }
  if (rest != 1) throw std::invalid_argument("PrimePower: not a prime power");
  return PrimePower(ell, f);
}

long multiplicative_order(const Int& m, const Int& modulus) {
  if (modulus < 2) throw std::invalid_argument("multiplicative_order: modulus < 2");
  Int g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw std::domain_error("NotCoprime");
  Int x = m % modulus;
  if (x < 0) x += modulus;
  Int acc = x;
  long k = 1;
  while (acc != 1) {
    acc = (acc * x) % modulus;
    ++k;
  }
  return k;
}

long d_p(const Int& m, long p) {
  if (!is_prime(p)) throw std::invalid_argument("d_p: p must be prime");
  if (p == 2) {
    if (m % 2 == 0) throw std::domain_error("NotCoprime");
    return multiplicative_order(m, 4);
  }
  return multiplicative_order(m, p);
}

Int psi_value(long k, const Int& q, PsiKind kind) {
  if (k < 1) throw std::invalid_argument("psi_value: k must be >= 1");
  Int qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
  return kind == PsiKind::Minus ? Int(qk - 1) : Int(qk + 1);
}

Int phi_value(long d, const Int& q) {
  if (d < 1) throw std::invalid_argument("phi_value: d must be >= 1");
  Int num = psi_value(d, q, PsiKind::Minus);
  for (long dd = 1; dd < d; ++dd) {
    if (d % dd == 0) {
      Int quo, rem;
      Int divisor = phi_value(dd, q);
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                  divisor.get_mpz_t());
      if (rem != 0) throw std::logic_error("phi_value: non-exact division");
      num = quo;
    }
  }
  return num;
}

long valuation(const Int& x, long p) {
  if (x == 0) throw std::domain_error("ZeroValuation");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  Int r = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long valuation(const Rat& x, long p) {
  if (x == 0) throw std::domain_error("ZeroValuation");
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

PsiExpr& PsiExpr::mul_psi(long k, PsiKind kind, long exp) {
  if (k < 1) throw std::invalid_argument("PsiExpr: factor index must be >= 1");
  if (exp == 0) return *this;
  auto key = std::make_pair(kind, k);
  long& e = factors_[key];
  e += exp;
  if (e == 0) factors_.erase(key);
  return *this;
}

PsiExpr& PsiExpr::mul_scalar(const Rat& s) {
  if (s == 0) throw std::invalid_argument("PsiExpr: zero scalar");
  scalar_ *= s;
  canonicalize_scalar();
  return *this;
}

PsiExpr& PsiExpr::operator*=(const PsiExpr& o) {
  mul_scalar(o.scalar_);
  q_exponent_ += o.q_exponent_;
  for (const auto& [key, e] : o.factors_) mul_psi(key.second, key.first, e);
  return *this;
}

Rat PsiExpr::evaluate(const PrimePower& q) const {
  Rat result = scalar_;
  if (q_exponent_ != 0) {
    Int qe;
    mpz_pow_ui(qe.get_mpz_t(), q.value.get_mpz_t(),
               static_cast<unsigned long>(q_exponent_ > 0 ? q_exponent_ : -q_exponent_));
    if (q_exponent_ > 0)
      result *= Rat(qe);
    else
      result /= Rat(qe);
  }
  for (const auto& [key, e] : factors_) {
    Int base = psi_value(key.second, q.value, key.first);
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      result *= Rat(pw);
    else
      result /= Rat(pw);
  }
  result.canonicalize();
  return result;
}

std::string PsiExpr::to_string() const {
  std::ostringstream out;
  out << scalar_.get_str();
  if (q_exponent_ != 0) out << " * q^" << q_exponent_;
  for (const auto& [key, e] : factors_) {
    out << " * Psi" << (key.first == PsiKind::Plus ? "'" : "") << "_" << key.second;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

BlockBranch block_branch(long p, const PrimePower& q) {
  if (p % 2 == 0) throw std::invalid_argument("block_branch: p must be odd");
  if (mpz_divisible_ui_p(q.value.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::domain_error("NotCoprime");
  long e = d_p(Int(q.value * q.value), p);
  bool core = mpz_divisible_ui_p(psi_value(e, q.value, PsiKind::Minus).get_mpz_t(),
                                 static_cast<unsigned long>(p));
  return {e, core ? Branch::Core : Branch::Cocore};
}

}  // namespace bw
