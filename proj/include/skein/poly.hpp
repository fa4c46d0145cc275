#pragma once

// Commutative polynomials over a chosen coefficient ring: one variable
// (Chebyshev machinery, annulus closures) and two variables (trace
// coordinates u1, u2).

#include "skein/ring.hpp"

#include <functional>
#include <map>
#include <utility>

namespace skein {

template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(C c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  static UniPoly x() { return monomial(C(1), 1); }
  static UniPoly monomial(C c, size_t deg) {
    UniPoly p;
    if (!is_zero(c)) {
      p.c_.assign(deg + 1, C());
      p.c_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero_poly() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  C coeff(size_t i) const { return i < c_.size() ? c_[i] : C(); }
  const std::vector<C>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), C());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    UniPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, C());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    r.trim();
    return r;
  }
  UniPoly pow(unsigned long e) const {
    UniPoly r{C(1)};
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // x -> v with coefficients embedded by `embed`
  template <class V, class F>
  V eval(const V& v, const V& zero_val, F&& embed) const {
    V acc = zero_val;
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * v;
      acc = acc + embed(c_[i]);
    }
    return acc;
  }

  template <class D, class F>
  UniPoly<D> map_coeffs(F&& f) const {
    UniPoly<D> r;
    for (size_t i = 0; i < c_.size(); ++i) {
      D d = f(c_[i]);
      if (!is_zero(d)) r = r + UniPoly<D>::monomial(std::move(d), i);
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;  // ascending degree, no trailing zeros
};

template <class C>
inline bool is_zero(const UniPoly<C>& p) { return p.is_zero_poly(); }

// Chebyshev polynomials: S_0 = 1, S_1 = x, S_n = x S_{n-1} - S_{n-2};
// T_0 = 2, T_1 = x, same recursion. The defining identities
// S_n(u+1/u)(u-1/u) = u^{n+1}-u^{-n-1}, T_n(u+1/u) = u^n+u^{-n} are tests.
UniPoly<Integer> cheb_S(long n);
UniPoly<Integer> cheb_T(long n);

// Z[u1, u2], sparse
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly monomial(Integer c, long e1, long e2) {
    BiPoly p;
    if (c != 0) p.t_[{e1, e2}] = std::move(c);
    return p;
  }
  static BiPoly constant(Integer c) { return monomial(std::move(c), 0, 0); }

  bool is_zero_poly() const { return t_.empty(); }
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

  // p(u_i) for a univariate p, i in {1, 2}
  static BiPoly from_uni(const UniPoly<Integer>& p, int which);

 private:
  std::map<std::pair<long, long>, Integer> t_;
};

}  // namespace skein
