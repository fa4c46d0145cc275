#include "skein/ring.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      auto it = r.t_.find(e1 + e2);
      if (it == r.t_.end()) {
        r.t_.emplace(e1 + e2, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

HalfLaurent HalfLaurent::quantum_int(long n) {
  if (n < 1) throw std::invalid_argument("quantum_int: n must be >= 1");
  HalfLaurent r;
  for (long i = -n + 1; i <= n - 1; i += 2) r += q_power(4 * i);
  return r;
}

HalfLaurent HalfLaurent::quantum_factorial(long n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n must be >= 0");
  HalfLaurent r = one();
  for (long k = 1; k <= n; ++k) r *= quantum_int(k);
  return r;
}

HalfLaurent loop_delta() {
  return -(HalfLaurent::q_power(4) + HalfLaurent::q_power(-4));
}

Integer HalfLaurent::eval_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

std::string HalfLaurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Integer a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1) && e != 0;
    if (!unit_coeff) os << a.str();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "q";
      if (e != 2) {
        os << "^";
        if (e % 2 == 0) os << (e / 2);
        else os << "(" << e << "/2)";
      }
    }
  }
  return os.str();
}

namespace zx {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

Poly div_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("zx::div_exact: division by zero");
  Poly rem = a;
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("zx::div_exact: not divisible");
  Poly q(a.size() - b.size() + 1, Integer(0));
  for (size_t k = q.size(); k-- > 0;) {
    if (rem.size() < b.size() + k) continue;
    Integer lead = rem[b.size() - 1 + k];
    if (lead == 0) continue;
    if (lead % b.back() != 0) throw std::domain_error("zx::div_exact: not divisible");
    Integer coef = lead / b.back();
    q[k] = coef;
    for (size_t i = 0; i < b.size(); ++i) rem[i + k] -= coef * b[i];
  }
  if (!trim(rem).empty()) throw std::domain_error("zx::div_exact: not divisible");
  return trim(std::move(q));
}

bool divides(const Poly& a, const Poly& b) {
  if (b.empty()) return true;
  if (a.empty()) return false;
  try {
    div_exact(b, a);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Integer content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.empty()) return {};
  Integer c = content(p);
  Poly r = p;
  for (auto& x : r) x /= c;
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

// pseudo-remainder of a by b (lead(b)^k * a mod b)
static Poly prem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Integer lb = b.back();
    Integer la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    a = trim(std::move(a));
  }
  return a;
}

Poly gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  if (a.empty()) return b.empty() ? b : primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Integer ca = content(a), cb = content(b);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? Poly{} : primitive_part(r);
  }
  Integer cg = boost::multiprecision::gcd(ca, cb);
  for (auto& x : a) x *= cg;
  return a;
}

}  // namespace zx

// --- HalfLaurent <-> dense bridge -------------------------------------------

namespace {

struct Dense {
  zx::Poly p;          // coefficients of q^{(off + 2i)/2}
  long long off = 0;   // twice-exponent of the lowest term
};

// A HalfLaurent with all exponents of equal parity maps to one dense poly.
// Mixed parity never divides evenly by anything with a uniform parity, so for
// gcd purposes we view q^{1/2} itself as the variable: exponent step 1.
Dense to_dense(const HalfLaurent& x) {
  Dense d;
  if (x.is_zero()) return d;
  d.off = x.min_twice_exp();
  d.p.assign(static_cast<size_t>(x.max_twice_exp() - d.off) + 1, Integer(0));
  for (const auto& [e, c] : x.terms()) d.p[static_cast<size_t>(e - d.off)] = c;
  return d;
}

HalfLaurent from_dense(const zx::Poly& p, long long off) {
  HalfLaurent r;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0)
      r += HalfLaurent::monomial(p[i], off + static_cast<long long>(i));
  return r;
}

}  // namespace

std::optional<HalfLaurent> HalfLaurent::divided_by(const HalfLaurent& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return HalfLaurent();
  Dense a = to_dense(*this), b = to_dense(d);
  try {
    zx::Poly q = zx::div_exact(a.p, b.p);
    return from_dense(q, a.off - b.off);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// --- LaurentFrac -------------------------------------------------------------

LaurentFrac::LaurentFrac(HalfLaurent n, HalfLaurent d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("LaurentFrac: zero denominator");
  normalize();
}

void LaurentFrac::normalize() {
  if (num_.is_zero()) {
    den_ = HalfLaurent::one();
    return;
  }
  if (den_.is_one()) return;
  // unit denominators fold straight into the numerator
  if (auto inv = den_.inverse()) {
    num_ *= *inv;
    den_ = HalfLaurent::one();
    return;
  }
  Dense a = to_dense(num_), b = to_dense(den_);
  zx::Poly g = zx::gcd(a.p, b.p);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    a.p = zx::div_exact(a.p, g);
    b.p = zx::div_exact(b.p, g);
  }
  // shift all q-powers out of the denominator, fix its lowest coefficient > 0
  size_t low = 0;
  while (low < b.p.size() && b.p[low] == 0) ++low;
  bool neg = b.p[low] < 0;
  if (neg)
    for (auto& x : b.p) x = -x;
  long long shift = b.off + static_cast<long long>(low);
  num_ = from_dense(a.p, a.off - shift);
  if (neg) num_ = -num_;
  den_ = from_dense(b.p, -static_cast<long long>(low));
}

LaurentFrac LaurentFrac::operator+(const LaurentFrac& o) const {
  return LaurentFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
LaurentFrac LaurentFrac::operator-(const LaurentFrac& o) const {
  return LaurentFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
LaurentFrac LaurentFrac::operator*(const LaurentFrac& o) const {
  return LaurentFrac(num_ * o.num_, den_ * o.den_);
}
LaurentFrac LaurentFrac::operator-() const {
  LaurentFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

std::optional<LaurentFrac> LaurentFrac::inverse() const {
  if (is_zero()) return std::nullopt;
  return LaurentFrac(den_, num_);
}

LaurentFrac LaurentFrac::operator/(const LaurentFrac& o) const {
  auto inv = o.inverse();
  if (!inv) throw std::domain_error("LaurentFrac: division by zero");
  return *this * *inv;
}

std::string LaurentFrac::str() const {
  if (is_integral()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace skein
