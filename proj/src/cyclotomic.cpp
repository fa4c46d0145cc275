#include "skein/cyclotomic.hpp"

#include <sstream>

namespace skein {

std::vector<Integer> cyclotomic_polynomial(long m) {
  // x^m - 1 divided by Phi_d for every proper divisor d
  zx::Poly num(static_cast<size_t>(m) + 1, Integer(0));
  num[0] = -1;
  num.back() = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = zx::div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(long m) {
  if (m < 1) throw std::invalid_argument("CyclotomicField: m must be >= 1");
  auto f = std::make_shared<CyclotomicField>();
  f->m = m;
  f->N = ord_q4(m);
  f->modulus = cyclotomic_polynomial(m);
  return f;
}

void CycloElem::check_compatible(const CycloElem& o) const {
  if (f_ && o.f_ && f_->m != o.f_->m)
    throw std::invalid_argument("CycloElem: mixed cyclotomic fields");
}

CycloElem CycloElem::from_rational(std::shared_ptr<const CyclotomicField> f, Rational r) {
  CycloElem e(std::move(f));
  if (e.c_.empty())
    throw std::invalid_argument("CycloElem: degenerate field");
  e.c_[0] = std::move(r);
  return e;
}

CycloElem CycloElem::zeta_power(std::shared_ptr<const CyclotomicField> f, long long k) {
  long m = f->m;
  long long r = ((k % m) + m) % m;
  CycloElem e(std::move(f));
  // reduce t^r mod Phi_m by repeated multiplication; r < m keeps this cheap
  std::vector<Rational> acc(e.f_->degree(), Rational(0));
  acc[0] = 1;
  const auto& mod = e.f_->modulus;
  size_t deg = e.f_->degree();
  for (long long step = 0; step < r; ++step) {
    std::vector<Rational> next(deg, Rational(0));
    // multiply by t
    Rational carry = acc.empty() ? Rational(0) : acc[deg - 1];
    for (size_t i = deg; i-- > 1;) next[i] = acc[i - 1];
    next[0] = 0;
    if (carry != 0)
      for (size_t i = 0; i < deg; ++i)
        next[i] -= carry * Rational(mod[i]);
    acc = std::move(next);
  }
  e.c_ = std::move(acc);
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
  check_compatible(o);
  if (!f_) return o;
  if (!o.f_) return *this;
  CycloElem r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
  check_compatible(o);
  if (!o.f_) return *this;
  if (!f_) return -o;
  CycloElem r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, may hold trailing zeros

QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// a mod b, b monic-ish (leading coefficient invertible over Q)
QPoly poly_rem(QPoly a, const QPoly& b) {
  a = trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    Rational coef = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= coef * b[i];
    a = trim(std::move(a));
  }
  return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(std::move(a));
}

// quotient of a by b over Q
QPoly poly_quot(QPoly a, const QPoly& b) {
  a = trim(std::move(a));
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational coef = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= coef * b[i];
    a = trim(std::move(a));
  }
  return q;
}

}  // namespace

CycloElem CycloElem::operator*(const CycloElem& o) const {
  check_compatible(o);
  if (!f_ || !o.f_) return CycloElem();
  QPoly mod(f_->modulus.size());
  for (size_t i = 0; i < mod.size(); ++i) mod[i] = Rational(f_->modulus[i]);
  QPoly prod = poly_rem(poly_mul(trim(c_), trim(o.c_)), mod);
  CycloElem r(f_);
  for (size_t i = 0; i < prod.size(); ++i) r.c_[i] = prod[i];
  return r;
}

std::optional<CycloElem> CycloElem::inverse() const {
  if (is_zero()) return std::nullopt;
  // extended Euclid over Q[t]: u * this + v * Phi = gcd = const
  QPoly mod(f_->modulus.size());
  for (size_t i = 0; i < mod.size(); ++i) mod[i] = Rational(f_->modulus[i]);
  QPoly r0 = mod, r1 = trim(c_);
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of `this`
  while (!r1.empty()) {
    QPoly q = poly_quot(r0, r1);
    QPoly r2 = poly_sub(r0, poly_mul(q, r1));
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  // r0 = gcd, constant since Phi_m is irreducible and this != 0
  if (r0.size() != 1)
    throw std::logic_error("CycloElem::inverse: non-constant gcd with Phi_m");
  Rational g = r0[0];
  CycloElem inv(f_);
  QPoly s = poly_rem(std::move(s0), mod);
  for (size_t i = 0; i < s.size() && i < inv.c_.size(); ++i) inv.c_[i] = s[i] / g;
  return inv;
}

std::string CycloElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycloElem specialize(const HalfLaurent& x, const std::shared_ptr<const CyclotomicField>& f) {
  CycloElem acc(f);
  for (const auto& [e, c] : x.terms())
    acc += CycloElem::from_rational(f, Rational(c)) * CycloElem::zeta_power(f, e);
  return acc;
}

}  // namespace skein
