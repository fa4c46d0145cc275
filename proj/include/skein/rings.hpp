#pragma once

// Ring contexts: a lightweight handle each engine operation takes to obtain
// constants (q-powers, quantum integers) in the working coefficient ring.
// Three rings are used: Z[q^{±1/2}] itself, its fraction field (generic
// Jones-Wenzl runs), and cyclotomic specializations.

#include "skein/cyclotomic.hpp"
#include "skein/ring.hpp"

namespace skein {

// signalled when a quantum integer must be inverted but vanishes at the
// chosen specialization (e.g. Jones-Wenzl f_n with n >= ord(q^4))
struct NonInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct LaurentRing {
  using Elem = HalfLaurent;
  Elem zero() const { return HalfLaurent(); }
  Elem one() const { return HalfLaurent::one(); }
  Elem from_int(long long v) const { return HalfLaurent(v); }
  Elem q_power(long long twice) const { return HalfLaurent::q_power(twice); }
  Elem quantum_int(long n) const { return HalfLaurent::quantum_int(n); }
  Elem inv(const Elem& x) const {
    auto r = x.inverse();
    if (!r) throw NonInvertibleError("not a unit in Z[q^{1/2}]: " + x.str());
    return *r;
  }
  std::string key() const { return "laurent"; }
};

struct FracRing {
  using Elem = LaurentFrac;
  Elem zero() const { return LaurentFrac(); }
  Elem one() const { return LaurentFrac::one(); }
  Elem from_int(long long v) const { return LaurentFrac(HalfLaurent(v)); }
  Elem q_power(long long twice) const {
    return LaurentFrac(HalfLaurent::q_power(twice));
  }
  Elem quantum_int(long n) const {
    return LaurentFrac(HalfLaurent::quantum_int(n));
  }
  Elem inv(const Elem& x) const {
    auto r = x.inverse();
    if (!r) throw NonInvertibleError("division by zero in Frac(Z[q^{1/2}])");
    return *r;
  }
  std::string key() const { return "frac"; }
};

struct CycloRing {
  std::shared_ptr<const CyclotomicField> field;

  explicit CycloRing(long m) : field(CyclotomicField::make(m)) {}
  explicit CycloRing(std::shared_ptr<const CyclotomicField> f) : field(std::move(f)) {}

  using Elem = CycloElem;
  Elem zero() const { return CycloElem(field); }
  Elem one() const { return CycloElem::from_rational(field, 1); }
  Elem from_int(long long v) const { return CycloElem::from_rational(field, v); }
  Elem q_power(long long twice) const { return CycloElem::zeta_power(field, twice); }
  Elem quantum_int(long n) const {
    return specialize(HalfLaurent::quantum_int(n), field);
  }
  Elem inv(const Elem& x) const {
    auto r = x.inverse();
    if (!r)
      throw NonInvertibleError("zero at cyclotomic specialization m=" +
                               std::to_string(field->m));
    return *r;
  }
  std::string key() const { return "cyclo:" + std::to_string(field->m); }
};

// delta = -q^2 - q^{-2}, the trivial-loop value
template <class R>
typename R::Elem ring_delta(const R& ring) {
  return -(ring.q_power(4) + ring.q_power(-4));
}

// cup coefficients C(+) = -q^{-5/2}, C(-) = q^{-1/2}
template <class R>
typename R::Elem cup_coeff(const R& ring, int state) {
  return state > 0 ? -ring.q_power(-5) : ring.q_power(-1);
}

template <class R>
typename R::Elem cup_coeff_inv(const R& ring, int state) {
  return state > 0 ? -ring.q_power(5) : ring.q_power(1);
}

}  // namespace skein
