#pragma once

// State-sum cutting and slitting operators for rectangle-presented diagrams.
// Cuts are vertical lines between slices; the cut map sums over all state
// assignments at the crossing points and evaluates the two halves in the
// bigon engine. The half-ideal slit turns closed annulus diagrams (slice
// words with bottom glued to top) into bigon elements by the cup-insertion
// state sum with coefficients C(eps)^{-1}.

#include "skein/bigon.hpp"

namespace skein {

// all +/- vectors of length k, in binary order
inline std::vector<std::vector<int>> state_vectors(int k) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(1) << k);
  for (long mask = 0; mask < (1L << k); ++mask) {
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

// Cut_c at a vertical line through slice boundary `pos` (0 <= pos <= #slices):
// the 2^k state sum over the k strands met there, each half evaluated in the
// bigon, assembled into a tensor.
template <class R>
Tensor2<typename R::Elem> cut_state_sum(const R& ring, const StatedTangle& t,
                                        size_t pos) {
  using E = typename R::Elem;
  t.validate();
  if (pos > t.word.slices.size())
    throw std::invalid_argument("cut_state_sum: cut position is not transversal");
  for (int tw : t.left_twists)
    if (tw != 0) throw std::invalid_argument("cut_state_sum: twisted tangle");
  for (int tw : t.right_twists)
    if (tw != 0) throw std::invalid_argument("cut_state_sum: twisted tangle");

  SliceWord lw, rw;
  lw.bot = t.word.bot;
  lw.slices.assign(t.word.slices.begin(),
                   t.word.slices.begin() + static_cast<long>(pos));
  rw.bot = lw.top();
  rw.slices.assign(t.word.slices.begin() + static_cast<long>(pos),
                   t.word.slices.end());
  int k = rw.bot;

  Tensor2<E> out;
  for (const auto& eps : state_vectors(k)) {
    StatedTangle lt = StatedTangle::from_word(lw, t.left, eps);
    StatedTangle rt = StatedTangle::from_word(rw, eps, t.right);
    OqElement<E> lv = evaluate(ring, lt);
    OqElement<E> rv = evaluate(ring, rt);
    for (const auto& [lm, lc] : lv.terms)
      for (const auto& [rm, rc] : rv.terms)
        out.add_term(lm, rm, lc * rc);
  }
  return out;
}

// Coproduct table on the generators, computed from the cutting state sum at
// the middle of each generator arc. The matrix form
//   D(x_{nm}) = sum_e x_{ne} (x) x_{em}
// is the expected outcome; a mismatch throws.
template <class R>
DeltaTable<typename R::Elem> delta_table(const R& ring) {
  using E = typename R::Elem;
  DeltaTable<E> tbl;
  for (char g : {'a', 'b', 'c', 'd'}) {
    Tensor2<E> got = cut_state_sum(ring, StatedTangle::generator(g), 0);
    // expected matrix coproduct
    StatedTangle arc = StatedTangle::generator(g);
    int nu = arc.left[0], mu = arc.right[0];
    Tensor2<E> expect;
    for (int e : {-1, 1}) {
      PBWMonomial l = PBWMonomial::gen(generator_of(nu, e));
      PBWMonomial r = PBWMonomial::gen(generator_of(e, mu));
      expect.add_term(l, r, ring.one());
    }
    if (!(got == expect))
      throw std::logic_error("delta_table: cutting state sum left the matrix form");
    switch (g) {
      case 'a': tbl.a = got; break;
      case 'b': tbl.b = got; break;
      case 'c': tbl.c = got; break;
      case 'd': tbl.d = got; break;
    }
  }
  return tbl;
}

// convenience: coproduct with the verified cutting table
template <class R>
Tensor2<typename R::Elem> coproduct(const R& ring,
                                    const OqElement<typename R::Elem>& x) {
  return coproduct(ring, x, delta_table(ring));
}

// ---------------------------------------------------------------------------
// Half-ideal slit

// One term of the slit state sum: a stated bigon tangle with its coefficient.
template <class E>
struct SlitTerm {
  E coeff;
  StatedTangle tangle;
};

// A closed annulus diagram is a slice word with equal bottom and top widths,
// read around the annulus with the seam between top and bottom. The slit
// cuts the seam and reroutes each of the k seam strands to the positive
// edge, producing sum_{eps} prod_i C(eps_i)^{-1} times nested returning arcs
// stated (eps_i, -eps_i).
template <class R>
std::vector<SlitTerm<typename R::Elem>> half_ideal_slit_terms(
    const R& ring, const SliceWord& annulus_word) {
  using E = typename R::Elem;
  annulus_word.validate();
  if (annulus_word.top() != annulus_word.bot)
    throw std::invalid_argument("half_ideal_slit: seam widths disagree");
  int k = annulus_word.bot;

  SliceWord base;
  base.bot = 0;
  for (int i = 0; i < k; ++i) base.cup(i);  // k nested arcs
  for (Slice s : annulus_word.slices) {
    s.pos += k;  // act on the upper legs
    base.slices.push_back(s);
  }

  std::vector<SlitTerm<E>> out;
  for (const auto& eps : state_vectors(k)) {
    E c = ring.one();
    for (int e : eps) c = c * cup_coeff_inv(ring, e);
    // right-edge states bottom to top: lower legs carry eps_i (outermost
    // first), upper legs the switched states in reverse order
    std::vector<int> rstates(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
      rstates[static_cast<size_t>(i)] = eps[static_cast<size_t>(i)];
      rstates[static_cast<size_t>(2 * k - 1 - i)] = -eps[static_cast<size_t>(i)];
    }
    out.push_back({c, StatedTangle::from_word(base, {}, rstates)});
  }
  return out;
}

// slit followed by bigon evaluation
template <class R>
OqElement<typename R::Elem> half_ideal_slit(const R& ring,
                                            const SliceWord& annulus_word) {
  using E = typename R::Elem;
  OqElement<E> out;
  for (const auto& term : half_ideal_slit_terms(ring, annulus_word)) {
    OqElement<E> v = evaluate(ring, term.tangle);
    for (const auto& [m, c] : v.terms) out.add_term(m, c * term.coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compact slit relations and the disk

// The two red-arc families of the compact slit relation, evaluated in the
// monogon: one family reads the cup along the edge orientation, the other
// against it. Entries are (states, value-top, value-bottom).
template <class R>
struct SlitRelation {
  int s1, s2;
  typename R::Elem top, bottom;
};

template <class R>
std::vector<SlitRelation<R>> compact_slit_relations(const R& ring) {
  std::vector<SlitRelation<R>> rels;
  SliceWord cup;
  cup.bot = 0;
  cup.cup(0);
  // (s1, s2) are the arc's left/right state labels; the left label sits at
  // the later position along the edge orientation
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      StatedTangle arc = StatedTangle::from_word(cup, {}, {s2, s1});
      rels.push_back({s1, s2, monogon_eval(ring, arc, false),
                      monogon_eval(ring, arc, true)});
    }
  return rels;
}

// annihilator of the empty skein of the disk: the ideal generated by the
// differences of the two families, expected (1 + q^2) up to a unit
template <class R>
std::vector<typename R::Elem> disk_annihilator(const R& ring) {
  std::vector<typename R::Elem> gens;
  for (const auto& rel : compact_slit_relations(ring)) {
    auto diff = rel.top - rel.bottom;
    if (!is_zero(diff)) gens.push_back(diff);
  }
  return gens;
}

}  // namespace skein
