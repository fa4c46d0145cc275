#include "skein/poly.hpp"

namespace skein {

UniPoly<Integer> cheb_S(long n) {
  if (n < 0) throw std::invalid_argument("cheb_S: n must be >= 0");
  UniPoly<Integer> s0{Integer(1)};
  if (n == 0) return s0;
  UniPoly<Integer> s1 = UniPoly<Integer>::x();
  for (long k = 2; k <= n; ++k) {
    UniPoly<Integer> s2 = UniPoly<Integer>::x() * s1 - s0;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return s1;
}

UniPoly<Integer> cheb_T(long n) {
  if (n < 0) throw std::invalid_argument("cheb_T: n must be >= 0");
  UniPoly<Integer> t0{Integer(2)};
  if (n == 0) return t0;
  UniPoly<Integer> t1 = UniPoly<Integer>::x();
  for (long k = 2; k <= n; ++k) {
    UniPoly<Integer> t2 = UniPoly<Integer>::x() * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end()) {
      r.t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.t_.erase(it);
    }
  }
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly neg = o;
  for (auto& [e, c] : neg.t_) c = -c;
  return *this + neg;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
      auto it = r.t_.find(key);
      if (it == r.t_.end()) {
        r.t_.emplace(key, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

BiPoly BiPoly::from_uni(const UniPoly<Integer>& p, int which) {
  BiPoly r;
  for (long i = 0; i <= p.degree(); ++i) {
    Integer c = p.coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    r = r + (which == 1 ? monomial(c, i, 0) : monomial(c, 0, i));
  }
  return r;
}

}  // namespace skein
