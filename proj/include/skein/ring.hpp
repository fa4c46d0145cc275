#pragma once

// Exact coefficient arithmetic for the skein engine: Laurent polynomials in
// q^{1/2} over Z, their fraction field, quantum integers and factorials.
// Half-integer exponents are stored doubled so everything stays integral.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

// Z[q^{±1/2}], canonical sparse form: no zero coefficients stored.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  explicit HalfLaurent(long long c) { if (c != 0) t_[0] = c; }
  explicit HalfLaurent(Integer c) { if (c != 0) t_[0] = std::move(c); }

  // q^{twice/2}
  static HalfLaurent q_power(long long twice) {
    return monomial(Integer(1), twice);
  }
  static HalfLaurent monomial(Integer c, long long twice) {
    HalfLaurent r;
    if (c != 0) r.t_[twice] = std::move(c);
    return r;
  }
  static HalfLaurent one() { return HalfLaurent(1); }

  // [n]_q = sum_{i=-n+1}^{n-1} q^{2i}, n >= 1
  static HalfLaurent quantum_int(long n);
  // [n]_q! = [1]_q [2]_q ... [n]_q, empty product = 1
  static HalfLaurent quantum_factorial(long n);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
  }
  // units of Z[q^{±1/2}] are ±q^{k/2}
  bool is_unit() const {
    return t_.size() == 1 && (t_.begin()->second == 1 || t_.begin()->second == -1);
  }
  std::optional<HalfLaurent> inverse() const {
    if (!is_unit()) return std::nullopt;
    return monomial(t_.begin()->second, -t_.begin()->first);
  }

  const std::map<long long, Integer>& terms() const { return t_; }
  long long min_twice_exp() const { return t_.begin()->first; }
  long long max_twice_exp() const { return t_.rbegin()->first; }

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent operator+(const HalfLaurent& o) const {
    HalfLaurent r = *this; r += o; return r;
  }
  HalfLaurent operator-(const HalfLaurent& o) const {
    HalfLaurent r = *this; r -= o; return r;
  }
  HalfLaurent operator-() const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent& operator*=(const HalfLaurent& o) { *this = *this * o; return *this; }

  bool operator==(const HalfLaurent& o) const { return t_ == o.t_; }
  bool operator!=(const HalfLaurent& o) const { return t_ != o.t_; }
  bool operator<(const HalfLaurent& o) const { return t_ < o.t_; }

  // exact division; nullopt when the quotient does not exist in Z[q^{±1/2}]
  std::optional<HalfLaurent> divided_by(const HalfLaurent& d) const;

  // q^{1/2} -> 1 (the commutative specialization used by the HH0 oracle)
  Integer eval_at_one() const;

  std::string str() const;

 private:
  std::map<long long, Integer> t_;
};

inline HalfLaurent operator*(const Integer& c, const HalfLaurent& x) {
  return HalfLaurent(c) * x;
}

// loop value delta = -q^2 - q^{-2}
HalfLaurent loop_delta();

// Two conventions for the Frobenius parameter epsilon circulate, q^{N^2} and
// q^{N^2/2}. Both satisfy epsilon^8 = 1 whenever ord(q^4) = N; neither enters
// any implemented formula, so both are exposed without choosing.
inline HalfLaurent frobenius_epsilon_whole(long N) {
  return HalfLaurent::q_power(2 * N * N);  // q^{N^2}
}
inline HalfLaurent frobenius_epsilon_half(long N) {
  return HalfLaurent::q_power(N * N);  // q^{N^2/2}
}

// Dense Z[x] helpers shared by the fraction field and ideal arithmetic.
// Polynomials are coefficient vectors in ascending degree, no trailing zeros.
namespace zx {
using Poly = std::vector<Integer>;
Poly trim(Poly p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
// exact division, throws std::domain_error when not divisible
Poly div_exact(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b
Integer content(const Poly& p);
Poly primitive_part(const Poly& p);
// gcd via primitive pseudo-remainder sequence, result primitive with
// positive leading coefficient
Poly gcd(Poly a, Poly b);
}  // namespace zx

// Fraction field Frac(Z[q^{±1/2}]) with gcd-reduced canonical representatives:
// the denominator has minimal exponent 0 and positive lowest coefficient.
class LaurentFrac {
 public:
  LaurentFrac() : num_(), den_(HalfLaurent::one()) {}
  LaurentFrac(HalfLaurent n) : num_(std::move(n)), den_(HalfLaurent::one()) {}
  LaurentFrac(HalfLaurent n, HalfLaurent d);

  static LaurentFrac one() { return LaurentFrac(HalfLaurent::one()); }

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_integral() const { return den_.is_one(); }

  LaurentFrac operator+(const LaurentFrac& o) const;
  LaurentFrac operator-(const LaurentFrac& o) const;
  LaurentFrac operator*(const LaurentFrac& o) const;
  LaurentFrac operator-() const;
  LaurentFrac& operator+=(const LaurentFrac& o) { *this = *this + o; return *this; }
  LaurentFrac& operator-=(const LaurentFrac& o) { *this = *this - o; return *this; }
  LaurentFrac& operator*=(const LaurentFrac& o) { *this = *this * o; return *this; }
  std::optional<LaurentFrac> inverse() const;
  LaurentFrac operator/(const LaurentFrac& o) const;

  bool operator==(const LaurentFrac& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const LaurentFrac& o) const { return !(*this == o); }
  bool operator<(const LaurentFrac& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string str() const;

 private:
  void normalize();
  HalfLaurent num_, den_;
};

inline bool is_zero(const HalfLaurent& x) { return x.is_zero(); }
inline bool is_zero(const LaurentFrac& x) { return x.is_zero(); }

}  // namespace skein
