#pragma once

// The presented algebra generated by a, b, c, d with relations
//   ba = q^2 ab,  ca = q^2 ac,  db = q^2 bd,  dc = q^2 cd,
//   bc = cb,      ad - q^{-2} bc = da - q^2 bc = 1,
// with PBW normal forms a^i b^j c^k and b^j c^k d^i (i >= 1).

#include "skein/rings.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

enum class PBWFamily : uint8_t { A, D };

struct PBWMonomial {
  PBWFamily family = PBWFamily::A;
  long i = 0, j = 0, k = 0;  // i is the exponent of a (family A) or d (family D)

  static PBWMonomial unit() { return {}; }
  static PBWMonomial gen(char g) {
    switch (g) {
      case 'a': return {PBWFamily::A, 1, 0, 0};
      case 'b': return {PBWFamily::A, 0, 1, 0};
      case 'c': return {PBWFamily::A, 0, 0, 1};
      case 'd': return {PBWFamily::D, 1, 0, 0};
    }
    throw std::invalid_argument("PBWMonomial::gen: unknown generator");
  }

  long degree() const { return i + j + k; }
  bool is_unit() const { return i == 0 && j == 0 && k == 0; }
  // the sorted word this monomial stands for
  std::string word() const {
    std::string w;
    if (family == PBWFamily::A) w.append(static_cast<size_t>(i), 'a');
    w.append(static_cast<size_t>(j), 'b');
    w.append(static_cast<size_t>(k), 'c');
    if (family == PBWFamily::D) w.append(static_cast<size_t>(i), 'd');
    return w;
  }

  auto tie() const { return std::tuple(family, i, j, k); }
  bool operator==(const PBWMonomial& o) const { return tie() == o.tie(); }
  bool operator!=(const PBWMonomial& o) const { return tie() != o.tie(); }
  bool operator<(const PBWMonomial& o) const { return tie() < o.tie(); }
};

template <class E>
struct OqElement {
  std::map<PBWMonomial, E> terms;

  OqElement() = default;
  static OqElement monomial(const PBWMonomial& m, E c) {
    OqElement x;
    if (!is_zero(c)) x.terms.emplace(m, std::move(c));
    return x;
  }
  static OqElement unit(E c) { return monomial(PBWMonomial::unit(), std::move(c)); }

  bool is_zero_elem() const { return terms.empty(); }
  long degree() const {
    long d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }
  void add_term(const PBWMonomial& m, const E& c) {
    if (is_zero(c)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  OqElement operator+(const OqElement& o) const {
    OqElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  OqElement operator-() const {
    OqElement r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  OqElement operator-(const OqElement& o) const { return *this + (-o); }
  OqElement scaled(const E& s) const {
    OqElement r;
    for (const auto& [m, c] : terms) r.add_term(m, c * s);
    return r;
  }
  bool operator==(const OqElement& o) const { return terms == o.terms; }
  bool operator!=(const OqElement& o) const { return !(*this == o); }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
      if (!s.empty()) s += " + ";
      std::string w = m.word();
      s += "(" + c.str() + ")";
      if (!w.empty()) s += "*" + w;
    }
    return s;
  }
};

// Normal form of a word in {a,b,c,d} under the terminating rewriting system
//   ba -> q^2 ab, ca -> q^2 ac, db -> q^2 bd, dc -> q^2 cd,
//   cb -> bc, ad -> 1 + q^{-2} bc, da -> 1 + q^2 bc.
template <class R>
OqElement<typename R::Elem> nf(const R& ring, const std::string& word) {
  using E = typename R::Elem;
  const E q2 = ring.q_power(4), qm2 = ring.q_power(-4);
  OqElement<E> out;
  // (word, coefficient) workspace, reduced leftmost-first
  std::vector<std::pair<std::string, E>> work{{word, ring.one()}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    bool reduced = false;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      char x = w[p], y = w[p + 1];
      auto swap_scaled = [&](const E& s) {
        std::string w2 = w;
        std::swap(w2[p], w2[p + 1]);
        work.emplace_back(std::move(w2), c * s);
      };
      if ((x == 'b' && y == 'a') || (x == 'c' && y == 'a') ||
          (x == 'd' && y == 'b') || (x == 'd' && y == 'c')) {
        swap_scaled(q2);
        reduced = true;
      } else if (x == 'c' && y == 'b') {
        swap_scaled(ring.one());
        reduced = true;
      } else if ((x == 'a' && y == 'd') || (x == 'd' && y == 'a')) {
        std::string rest = w.substr(0, p) + w.substr(p + 2);
        std::string bc = w.substr(0, p) + "bc" + w.substr(p + 2);
        work.emplace_back(std::move(rest), c);
        work.emplace_back(std::move(bc), c * (x == 'a' ? qm2 : q2));
        reduced = true;
      }
      if (reduced) break;
    }
    if (!reduced) {
      long na = 0, nb = 0, nc = 0, nd = 0;
      for (char ch : w) {
        if (ch == 'a') ++na;
        else if (ch == 'b') ++nb;
        else if (ch == 'c') ++nc;
        else ++nd;
      }
      if (na > 0 && nd > 0) {
        // sorted word a^na b^nb c^nc d^nd: commute one a through the b/c
        // block (a x = q^{-2} x a) and annihilate it against one d
        std::string mid = w.substr(static_cast<size_t>(na),
                                   static_cast<size_t>(nb + nc));
        std::string pre = w.substr(0, static_cast<size_t>(na - 1));
        std::string post(static_cast<size_t>(nd - 1), 'd');
        E shift = c * ring.q_power(-4 * (nb + nc));
        work.emplace_back(pre + mid + post, shift);
        work.emplace_back(pre + mid + "bc" + post, shift * qm2);
        continue;
      }
      // sorted word in a single PBW family: read off the monomial
      PBWMonomial m;
      m.family = nd > 0 ? PBWFamily::D : PBWFamily::A;
      m.i = nd > 0 ? nd : na;
      m.j = nb;
      m.k = nc;
      out.add_term(m, c);
    }
  }
  return out;
}

template <class R>
OqElement<typename R::Elem> mul(const R& ring,
                                const OqElement<typename R::Elem>& x,
                                const OqElement<typename R::Elem>& y) {
  using E = typename R::Elem;
  OqElement<E> out;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      OqElement<E> part = nf(ring, mx.word() + my.word());
      E c = cx * cy;
      for (const auto& [m, pc] : part.terms) out.add_term(m, pc * c);
    }
  return out;
}

template <class R>
OqElement<typename R::Elem> commutator(const R& ring,
                                       const OqElement<typename R::Elem>& x,
                                       const OqElement<typename R::Elem>& y) {
  return mul(ring, x, y) - mul(ring, y, x);
}

// counit: algebra map with eps(a) = eps(d) = 1, eps(b) = eps(c) = 0.
// Any nonzero value on b or c would break (eps (x) id) Delta = id, which the
// presentation check exercises.
template <class R>
typename R::Elem counit(const R& ring, const OqElement<typename R::Elem>& x) {
  using E = typename R::Elem;
  E out = ring.zero();
  for (const auto& [m, c] : x.terms)
    if (m.j == 0 && m.k == 0) out = out + c;  // a^i and d^i map to 1
  return out;
}

// antipode: anti-algebra map, S(a) = d, S(d) = a, S(b) = -q^2 b, S(c) = -q^{-2} c
template <class R>
OqElement<typename R::Elem> antipode(const R& ring,
                                     const OqElement<typename R::Elem>& x) {
  using E = typename R::Elem;
  OqElement<E> out;
  for (const auto& [m, c] : x.terms) {
    std::string w = m.word();
    std::string rev(w.rbegin(), w.rend());
    std::string img;
    E s = c;
    for (char ch : rev) {
      switch (ch) {
        case 'a': img += 'd'; break;
        case 'd': img += 'a'; break;
        case 'b': img += 'b'; s = s * (-ring.q_power(4)); break;
        case 'c': img += 'c'; s = s * (-ring.q_power(-4)); break;
      }
    }
    OqElement<E> part = nf(ring, img);
    for (const auto& [pm, pc] : part.terms) out.add_term(pm, pc * s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// tensor square, home of coproduct images

template <class E>
struct Tensor2 {
  std::map<std::pair<PBWMonomial, PBWMonomial>, E> terms;

  static Tensor2 simple(const PBWMonomial& l, const PBWMonomial& r, E c) {
    Tensor2 t;
    if (!is_zero(c)) t.terms.emplace(std::make_pair(l, r), std::move(c));
    return t;
  }
  bool is_zero_elem() const { return terms.empty(); }
  void add_term(const PBWMonomial& l, const PBWMonomial& r, const E& c) {
    if (is_zero(c)) return;
    auto key = std::make_pair(l, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  Tensor2 operator+(const Tensor2& o) const {
    Tensor2 r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m.first, m.second, c);
    return r;
  }
  Tensor2 operator-() const {
    Tensor2 r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  Tensor2 operator-(const Tensor2& o) const { return *this + (-o); }
  Tensor2 scaled(const E& s) const {
    Tensor2 r;
    for (const auto& [m, c] : terms) r.add_term(m.first, m.second, c * s);
    return r;
  }
  bool operator==(const Tensor2& o) const { return terms == o.terms; }
  bool operator!=(const Tensor2& o) const { return !(*this == o); }
};

template <class R>
Tensor2<typename R::Elem> tensor_mul(const R& ring,
                                     const Tensor2<typename R::Elem>& x,
                                     const Tensor2<typename R::Elem>& y) {
  using E = typename R::Elem;
  Tensor2<E> out;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      OqElement<E> l = nf(ring, mx.first.word() + my.first.word());
      OqElement<E> r = nf(ring, mx.second.word() + my.second.word());
      E c = cx * cy;
      for (const auto& [lm, lc] : l.terms)
        for (const auto& [rm, rc] : r.terms)
          out.add_term(lm, rm, lc * rc * c);
    }
  return out;
}

// generator images of the coproduct, produced by the cutting state sum
// (see cutting.hpp)
template <class E>
struct DeltaTable {
  Tensor2<E> a, b, c, d;
  const Tensor2<E>& of(char g) const {
    switch (g) {
      case 'a': return a;
      case 'b': return b;
      case 'c': return c;
      case 'd': return d;
    }
    throw std::invalid_argument("DeltaTable: unknown generator");
  }
};

// multiplicative extension of the generator table to the whole algebra
template <class R>
Tensor2<typename R::Elem> coproduct(const R& ring,
                                    const OqElement<typename R::Elem>& x,
                                    const DeltaTable<typename R::Elem>& table) {
  using E = typename R::Elem;
  Tensor2<E> out;
  for (const auto& [m, c] : x.terms) {
    Tensor2<E> acc =
        Tensor2<E>::simple(PBWMonomial::unit(), PBWMonomial::unit(), ring.one());
    for (char g : m.word()) acc = tensor_mul(ring, acc, table.of(g));
    out = out + acc.scaled(c);
  }
  return out;
}

}  // namespace skein
