#pragma once

// The Temperley-Lieb diagram algebra: planar matchings in a rectangle,
// stacking composition with loop counting, Kauffman resolution of slice
// words, Jones-Wenzl idempotents, annulus closures and the u/v patterns.

#include "skein/poly.hpp"
#include "skein/rings.hpp"

#include <cassert>
#include <map>
#include <utility>
#include <vector>

namespace skein {

// Planar pairing of boundary points of a rectangle. Points 0..bot-1 run
// left to right on the bottom edge, points bot..bot+top-1 run right to left
// on the top edge, so indices follow the boundary cycle.
class Matching {
 public:
  Matching() = default;
  Matching(int bot, int top, std::vector<int> pairing);

  static Matching identity(int n);
  // e_i in TL_n: cup-cap at the gap i, 0 <= i <= n-2
  static Matching e(int n, int i);
  // width w -> w+2, new cup inserted at position i (0 <= i <= w)
  static Matching cup(int w, int i);
  // width w -> w-2, positions i, i+1 capped (0 <= i <= w-2)
  static Matching cap(int w, int i);
  // identity on the outside, m spliced over positions [pos, pos+m.bot())
  static Matching pad(int w, int pos, const Matching& m);

  int bot() const { return bot_; }
  int top() const { return top_; }
  int strands() const {
    assert(bot_ == top_);
    return bot_;
  }
  int points() const { return bot_ + top_; }
  int partner(int i) const { return pair_[static_cast<size_t>(i)]; }
  const std::vector<int>& pairing() const { return pair_; }
  // index of the point at horizontal position p on the top edge
  int top_index(int p) const { return bot_ + top_ - 1 - p; }

  bool operator==(const Matching& o) const {
    return bot_ == o.bot_ && top_ == o.top_ && pair_ == o.pair_;
  }
  bool operator!=(const Matching& o) const { return !(*this == o); }
  bool operator<(const Matching& o) const {
    if (bot_ != o.bot_) return bot_ < o.bot_;
    if (top_ != o.top_) return top_ < o.top_;
    return pair_ < o.pair_;
  }

  std::string str() const;

 private:
  int bot_ = 0, top_ = 0;
  std::vector<int> pair_;
};

// stacks `upper` on top of `lower` (lower.top() == upper.bot()); returns the
// composite and the number of closed loops produced in the middle layer
std::pair<Matching, int> matching_compose(const Matching& lower, const Matching& upper);

// all planar matchings of TL_n, Catalan(n) of them
std::vector<Matching> enumerate_matchings(int n);

template <class E>
struct TLElement {
  int bot = 0, top = 0;
  std::map<Matching, E> terms;

  TLElement() = default;
  TLElement(int b, int t) : bot(b), top(t) {}
  static TLElement from_matching(const Matching& m, E coeff) {
    TLElement x(m.bot(), m.top());
    if (!is_zero(coeff)) x.terms.emplace(m, std::move(coeff));
    return x;
  }
  bool is_zero_elem() const { return terms.empty(); }
  int strands() const {
    assert(bot == top);
    return bot;
  }
  void add_term(const Matching& m, const E& c) {
    if (is_zero(c)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }
  TLElement operator+(const TLElement& o) const {
    assert(bot == o.bot && top == o.top);
    TLElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  TLElement operator-() const {
    TLElement r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  TLElement operator-(const TLElement& o) const { return *this + (-o); }
  TLElement scaled(const E& s) const {
    TLElement r(bot, top);
    for (const auto& [m, c] : terms) r.add_term(m, c * s);
    return r;
  }
  bool operator==(const TLElement& o) const {
    return bot == o.bot && top == o.top && terms == o.terms;
  }
  bool operator!=(const TLElement& o) const { return !(*this == o); }
};

// bilinear extension of matching_compose; each loop contributes delta
template <class R>
TLElement<typename R::Elem> tl_mul(const R& ring,
                                   const TLElement<typename R::Elem>& lower,
                                   const TLElement<typename R::Elem>& upper) {
  using E = typename R::Elem;
  if (lower.top != upper.bot)
    throw std::invalid_argument("tl_mul: width mismatch");
  E delta = ring_delta(ring);
  TLElement<E> r(lower.bot, upper.top);
  for (const auto& [m1, c1] : lower.terms)
    for (const auto& [m2, c2] : upper.terms) {
      auto [m, loops] = matching_compose(m1, m2);
      E c = c1 * c2;
      for (int l = 0; l < loops; ++l) c = c * delta;
      r.add_term(m, c);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Slice words

enum class SliceKind { Cup, Cap, CrossPos, CrossNeg, JWBox };

struct Slice {
  SliceKind kind;
  int pos = 0;
  int size = 0;  // JWBox strand count
};

// A tangle diagram sliced into elementary pieces, read from width `bot`
// upward. Cup raises the width by 2, Cap lowers it by 2, crossings and boxes
// preserve it.
struct SliceWord {
  int bot = 0;
  std::vector<Slice> slices;

  int top() const;
  void validate() const;  // throws std::invalid_argument on bad positions

  SliceWord& cup(int pos) { slices.push_back({SliceKind::Cup, pos, 0}); return *this; }
  SliceWord& cap(int pos) { slices.push_back({SliceKind::Cap, pos, 0}); return *this; }
  SliceWord& cross_pos(int pos) { slices.push_back({SliceKind::CrossPos, pos, 0}); return *this; }
  SliceWord& cross_neg(int pos) { slices.push_back({SliceKind::CrossNeg, pos, 0}); return *this; }
  SliceWord& jw(int pos, int size) { slices.push_back({SliceKind::JWBox, pos, size}); return *this; }
};

// positive kink on one strand, evaluates to -q^3 times the strand
SliceWord kink_word(bool positive);

template <class R>
TLElement<typename R::Elem> jones_wenzl(const R& ring, int n);

// Kauffman expansion of a slice word into the matching basis. Every crossing
// is resolved with the convention pinned by the kink test (positive kink =
// -q^3), JW boxes are expanded, loops contribute delta.
template <class R>
TLElement<typename R::Elem> resolve(const R& ring, const SliceWord& w) {
  using E = typename R::Elem;
  w.validate();
  E delta = ring_delta(ring);
  E qp = ring.q_power(2), qn = ring.q_power(-2);

  std::map<Matching, E> cur;
  cur.emplace(Matching::identity(w.bot), ring.one());
  int width = w.bot;

  auto compose_all = [&](const Matching& g) {
    std::map<Matching, E> next;
    for (const auto& [m, c] : cur) {
      auto [r, loops] = matching_compose(m, g);
      E cc = c;
      for (int l = 0; l < loops; ++l) cc = cc * delta;
      auto it = next.find(r);
      if (it == next.end()) {
        next.emplace(r, cc);
      } else {
        it->second = it->second + cc;
        if (is_zero(it->second)) next.erase(it);
      }
    }
    cur = std::move(next);
  };

  for (const Slice& s : w.slices) {
    switch (s.kind) {
      case SliceKind::Cup:
        compose_all(Matching::cup(width, s.pos));
        width += 2;
        break;
      case SliceKind::Cap:
        compose_all(Matching::cap(width, s.pos));
        width -= 2;
        break;
      case SliceKind::CrossPos:
      case SliceKind::CrossNeg: {
        // crossing = q^{±1} (strands pass) + q^{∓1} (cap-cup smoothing)
        const E& a = (s.kind == SliceKind::CrossPos) ? qp : qn;
        const E& b = (s.kind == SliceKind::CrossPos) ? qn : qp;
        Matching ei = Matching::e(width, s.pos);
        std::map<Matching, E> next;
        auto put = [&](const Matching& m, const E& c) {
          if (is_zero(c)) return;
          auto it = next.find(m);
          if (it == next.end()) {
            next.emplace(m, c);
          } else {
            it->second = it->second + c;
            if (is_zero(it->second)) next.erase(it);
          }
        };
        for (const auto& [m, c] : cur) {
          put(m, c * a);
          auto [r, loops] = matching_compose(m, ei);
          E cc = c * b;
          for (int l = 0; l < loops; ++l) cc = cc * delta;
          put(r, cc);
        }
        cur = std::move(next);
        break;
      }
      case SliceKind::JWBox: {
        TLElement<E> f = jones_wenzl(ring, s.size);
        std::map<Matching, E> next;
        for (const auto& [m, c] : cur)
          for (const auto& [fm, fc] : f.terms) {
            auto [r, loops] = matching_compose(m, Matching::pad(width, s.pos, fm));
            E cc = c * fc;
            for (int l = 0; l < loops; ++l) cc = cc * delta;
            auto it = next.find(r);
            if (it == next.end()) {
              next.emplace(r, cc);
            } else {
              it->second = it->second + cc;
              if (is_zero(it->second)) next.erase(it);
            }
          }
        cur = std::move(next);
        break;
      }
    }
  }

  TLElement<E> out(w.bot, width);
  for (auto& [m, c] : cur) out.add_term(m, c);
  return out;
}

// Wenzl recursion f_n = f_{n-1} + ([n-1]_q/[n]_q) f_{n-1} e_{n-1} f_{n-1};
// with delta = -[2]_q the plus sign is the one forced by e_{n-1} f_n = 0.
// Memoized per coefficient ring.
template <class R>
TLElement<typename R::Elem> jones_wenzl(const R& ring, int n) {
  using E = typename R::Elem;
  if (n < 0) throw std::invalid_argument("jones_wenzl: n must be >= 0");
  thread_local std::map<std::pair<std::string, int>, TLElement<E>> memo;
  auto key = std::make_pair(ring.key(), n);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  TLElement<E> f;
  if (n == 0) {
    f = TLElement<E>::from_matching(Matching::identity(0), ring.one());
  } else if (n == 1) {
    f = TLElement<E>::from_matching(Matching::identity(1), ring.one());
  } else {
    TLElement<E> prev = jones_wenzl(ring, n - 1);
    TLElement<E> wide(n, n);
    for (const auto& [m, c] : prev.terms)
      wide.add_term(Matching::pad(n, 0, m), c);
    E coef;
    try {
      coef = ring.quantum_int(n - 1) * ring.inv(ring.quantum_int(n));
    } catch (const NonInvertibleError&) {
      throw NonInvertibleError("jones_wenzl: [" + std::to_string(n) +
                               "]_q is not invertible in " + ring.key() +
                               ", f_" + std::to_string(n) + " undefined");
    }
    TLElement<E> en = TLElement<E>::from_matching(Matching::e(n, n - 2), ring.one());
    TLElement<E> mid = tl_mul(ring, tl_mul(ring, wide, en), wide);
    f = wide + mid.scaled(coef);
  }
  memo.emplace(key, f);
  return f;
}

// [n]_q! f_n has integral coefficients; this returns it over Z[q^{±1/2}].
TLElement<HalfLaurent> jones_wenzl_integral(int n);

// Kauffman expansion with every JW box replaced by its [size]_q!-scaled
// integral form. The result is prod [size]_q! (over the boxes) times the
// true resolution, so identities between words with equal box multisets can
// be compared directly, entirely inside Z[q^{±1/2}].
TLElement<HalfLaurent> resolve_scaled_boxes(const SliceWord& w);

// Closes top point i to bottom point i around the annulus; core-parallel
// loops contribute the variable a, contractible loops delta.
template <class R>
UniPoly<typename R::Elem> annulus_closure(const R& ring,
                                          const TLElement<typename R::Elem>& x) {
  using E = typename R::Elem;
  if (x.bot != x.top)
    throw std::invalid_argument("annulus_closure: element is not square");
  int n = x.bot;
  E delta = ring_delta(ring);
  UniPoly<E> out;
  for (const auto& [m, c] : x.terms) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int core = 0;
    E coeff = c;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      // trace the loop through seam ports; direction `up` means we are about
      // to enter the rectangle at the bottom copy of the port
      int port = start;
      bool up = true;
      int wind = 0;
      do {
        seen[static_cast<size_t>(port)] = true;
        wind += up ? 1 : -1;
        int idx = up ? port : m.top_index(port);
        int j = m.partner(idx);
        if (j < n) {
          port = j;
          up = false;  // reached the bottom edge moving down
        } else {
          port = m.bot() + m.top() - 1 - j;
          up = true;  // reached the top edge moving up
        }
      } while (port != start || up != true);
      int w = wind < 0 ? -wind : wind;
      assert(w <= 1);
      if (w == 1)
        ++core;
      else
        coeff = coeff * delta;
    }
    out = out + UniPoly<E>::monomial(coeff, static_cast<size_t>(core));
  }
  return out;
}

// ---------------------------------------------------------------------------
// u_{k,m} / v_{k,m} patterns

struct BuildUvConfig {
  bool slide_positive = true;   // crossing sign used on both slide legs
  bool boxes_both_sides = true; // JW boxes on both halves of the pattern
};

// v_{k,m}: two bundles of JW boxes with k through strands per bundle and m
// nested returning arcs between them; u_{k,m}: the same pattern with the
// outermost through strand slid across all 2k-1 others and back
SliceWord uv_word_v(int k, int m, const BuildUvConfig& cfg = {});
SliceWord uv_word_u(int k, int m, const BuildUvConfig& cfg = {});

template <class E>
struct UvPair {
  TLElement<E> u, v;
  SliceWord u_word, v_word;
};

template <class R>
UvPair<typename R::Elem> build_uv(const R& ring, int k, int m,
                                  const BuildUvConfig& cfg = {}) {
  UvPair<typename R::Elem> p;
  p.u_word = uv_word_u(k, m, cfg);
  p.v_word = uv_word_v(k, m, cfg);
  p.u = resolve(ring, p.u_word);
  p.v = resolve(ring, p.v_word);
  return p;
}

}  // namespace skein
