#pragma once

// Exact root-of-unity arithmetic: Q[t]/(Phi_m(t)) with q^{1/2} |-> t.
// Every zero test the verification suite performs is algebraic, so the
// cyclotomic quotient replaces floating-point roots of unity outright.

#include "skein/ring.hpp"

#include <memory>
#include <numeric>

namespace skein {

// order data for the specialization q^{1/2} -> zeta_m
struct CyclotomicField {
  long m = 1;                     // multiplicative order of zeta
  long N = 1;                     // ord(q^4) = m / gcd(m, 8)
  std::vector<Integer> modulus;   // Phi_m, monic, ascending

  size_t degree() const { return modulus.size() - 1; }
  static std::shared_ptr<const CyclotomicField> make(long m);
};

// m / gcd(m, 8): the order of q^4 when q^{1/2} has order m
inline long ord_q4(long m) { return m / std::gcd(m, 8L); }

// Phi_m over Z
std::vector<Integer> cyclotomic_polynomial(long m);

class CycloElem {
 public:
  // a default-constructed element is the zero of every field; arithmetic
  // treats it as the neutral value so generic polynomial code can use C()
  CycloElem() = default;
  explicit CycloElem(std::shared_ptr<const CyclotomicField> f)
      : f_(std::move(f)), c_(f_->degree(), Rational(0)) {}

  static CycloElem from_rational(std::shared_ptr<const CyclotomicField> f, Rational r);
  // zeta^k (k may be negative)
  static CycloElem zeta_power(std::shared_ptr<const CyclotomicField> f, long long k);

  const std::shared_ptr<const CyclotomicField>& field() const { return f_; }
  bool is_zero() const;

  CycloElem operator+(const CycloElem& o) const;
  CycloElem operator-(const CycloElem& o) const;
  CycloElem operator*(const CycloElem& o) const;
  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o) { *this = *this + o; return *this; }
  CycloElem& operator-=(const CycloElem& o) { *this = *this - o; return *this; }
  CycloElem& operator*=(const CycloElem& o) { *this = *this * o; return *this; }
  bool operator==(const CycloElem& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return c_ == o.c_;
  }
  bool operator!=(const CycloElem& o) const { return !(*this == o); }
  bool operator<(const CycloElem& o) const {
    if (is_zero() != o.is_zero()) return is_zero();
    return c_ < o.c_;
  }

  // nullopt iff zero (the quotient is a field)
  std::optional<CycloElem> inverse() const;

  std::string str() const;

 private:
  void check_compatible(const CycloElem& o) const;
  std::shared_ptr<const CyclotomicField> f_;
  std::vector<Rational> c_;  // degree() entries, reduced mod Phi_m
};

inline bool is_zero(const CycloElem& x) { return x.is_zero(); }

// ring homomorphism Z[q^{±1/2}] -> Q(zeta_m), q^{1/2} -> zeta
CycloElem specialize(const HalfLaurent& x, const std::shared_ptr<const CyclotomicField>& f);

}  // namespace skein
