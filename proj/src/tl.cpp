#include "skein/tl.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

void check_involution(int points, const std::vector<int>& pair) {
  if (static_cast<int>(pair.size()) != points)
    throw std::invalid_argument("Matching: pairing size mismatch");
  for (int i = 0; i < points; ++i) {
    int j = pair[static_cast<size_t>(i)];
    if (j < 0 || j >= points || j == i || pair[static_cast<size_t>(j)] != i)
      throw std::invalid_argument("Matching: not a fixed-point-free involution");
  }
}

void check_planar(int points, const std::vector<int>& pair) {
  // boundary cycle order equals index order; standard stack test
  std::vector<int> stack;
  for (int i = 0; i < points; ++i) {
    int j = pair[static_cast<size_t>(i)];
    if (j > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != j)
        throw std::invalid_argument("Matching: pairing is not planar");
      stack.pop_back();
    }
  }
}

}  // namespace

Matching::Matching(int bot, int top, std::vector<int> pairing)
    : bot_(bot), top_(top), pair_(std::move(pairing)) {
  if (bot_ < 0 || top_ < 0 || (bot_ + top_) % 2 != 0)
    throw std::invalid_argument("Matching: bad widths");
  check_involution(bot_ + top_, pair_);
  check_planar(bot_ + top_, pair_);
}

namespace {

// builds a matching from pairs given in (edge, position) coordinates
struct PairBuilder {
  int bot, top;
  std::vector<int> pair;
  PairBuilder(int b, int t)
      : bot(b), top(t), pair(static_cast<size_t>(b + t), -1) {}
  int idx(bool on_top, int p) const { return on_top ? bot + top - 1 - p : p; }
  void join(bool t1, int p1, bool t2, int p2) {
    int i = idx(t1, p1), j = idx(t2, p2);
    pair[static_cast<size_t>(i)] = j;
    pair[static_cast<size_t>(j)] = i;
  }
  Matching build() { return Matching(bot, top, std::move(pair)); }
};

}  // namespace

Matching Matching::identity(int n) {
  PairBuilder b(n, n);
  for (int i = 0; i < n; ++i) b.join(false, i, true, i);
  return b.build();
}

Matching Matching::e(int n, int i) {
  if (i < 0 || i > n - 2) throw std::invalid_argument("Matching::e: bad gap");
  PairBuilder b(n, n);
  b.join(false, i, false, i + 1);
  b.join(true, i, true, i + 1);
  for (int j = 0; j < n; ++j)
    if (j != i && j != i + 1) b.join(false, j, true, j);
  return b.build();
}

Matching Matching::cup(int w, int i) {
  if (i < 0 || i > w) throw std::invalid_argument("Matching::cup: bad position");
  PairBuilder b(w, w + 2);
  for (int j = 0; j < i; ++j) b.join(false, j, true, j);
  b.join(true, i, true, i + 1);
  for (int j = i; j < w; ++j) b.join(false, j, true, j + 2);
  return b.build();
}

Matching Matching::cap(int w, int i) {
  if (i < 0 || i > w - 2) throw std::invalid_argument("Matching::cap: bad position");
  PairBuilder b(w, w - 2);
  b.join(false, i, false, i + 1);
  for (int j = 0; j < i; ++j) b.join(false, j, true, j);
  for (int j = i + 2; j < w; ++j) b.join(false, j, true, j - 2);
  return b.build();
}

Matching Matching::pad(int w, int pos, const Matching& m) {
  if (pos < 0 || pos + m.bot() > w)
    throw std::invalid_argument("Matching::pad: box does not fit");
  int wtop = w - m.bot() + m.top();
  PairBuilder b(w, wtop);
  for (int j = 0; j < pos; ++j) b.join(false, j, true, j);
  for (int j = pos + m.bot(); j < w; ++j)
    b.join(false, j, true, j - m.bot() + m.top());
  // splice the box, translating its internal coordinates
  std::vector<bool> done(static_cast<size_t>(m.points()), false);
  for (int i = 0; i < m.points(); ++i) {
    if (done[static_cast<size_t>(i)]) continue;
    int j = m.partner(i);
    done[static_cast<size_t>(i)] = done[static_cast<size_t>(j)] = true;
    bool ti = i >= m.bot(), tj = j >= m.bot();
    int pi = ti ? m.bot() + m.top() - 1 - i : i;
    int pj = tj ? m.bot() + m.top() - 1 - j : j;
    b.join(ti, pos + pi, tj, pos + pj);
  }
  return b.build();
}

std::pair<Matching, int> matching_compose(const Matching& lower, const Matching& upper) {
  if (lower.top() != upper.bot())
    throw std::invalid_argument("matching_compose: width mismatch");
  int b = lower.bot(), mid = lower.top(), c = upper.top();
  PairBuilder out(b, c);

  // walk from a boundary point through the glued middle layer
  std::vector<bool> mid_used(static_cast<size_t>(mid), false);
  auto trace = [&](bool start_top, int start_pos) -> std::pair<bool, int> {
    bool in_upper = start_top;
    int idx = start_top ? upper.partner(upper.bot() + upper.top() - 1 - start_pos)
                        : lower.partner(start_pos);
    for (;;) {
      if (!in_upper) {
        if (idx < b) return {false, idx};  // bottom boundary
        int p = b + mid - 1 - idx;         // lower top position
        mid_used[static_cast<size_t>(p)] = true;
        in_upper = true;
        idx = upper.partner(p);
      } else {
        if (idx >= mid) return {true, mid + c - 1 - idx};  // top boundary
        mid_used[static_cast<size_t>(idx)] = true;
        in_upper = false;
        idx = lower.partner(b + mid - 1 - idx);
      }
    }
  };

  std::vector<bool> done(static_cast<size_t>(b + c), false);
  auto mark = [&](bool top, int pos) {
    done[static_cast<size_t>(top ? b + pos : pos)] = true;
  };
  auto is_done = [&](bool top, int pos) {
    return done[static_cast<size_t>(top ? b + pos : pos)];
  };
  for (int i = 0; i < b; ++i) {
    if (is_done(false, i)) continue;
    auto [t, p] = trace(false, i);
    out.join(false, i, t, p);
    mark(false, i);
    mark(t, p);
  }
  for (int i = 0; i < c; ++i) {
    if (is_done(true, i)) continue;
    auto [t, p] = trace(true, i);
    out.join(true, i, t, p);
    mark(true, i);
    mark(t, p);
  }

  // unvisited middle points form closed loops
  int loops = 0;
  for (int p = 0; p < mid; ++p) {
    if (mid_used[static_cast<size_t>(p)]) continue;
    ++loops;
    int cur = p;
    bool via_upper = true;
    do {
      mid_used[static_cast<size_t>(cur)] = true;
      if (via_upper) {
        int j = upper.partner(cur);        // stays in upper's bottom
        cur = j;
      } else {
        int j = lower.partner(b + mid - 1 - cur);
        cur = b + mid - 1 - j;
      }
      via_upper = !via_upper;
    } while (cur != p || !via_upper);
  }

  return {out.build(), loops};
}

std::vector<Matching> enumerate_matchings(int n) {
  std::vector<Matching> out;
  // non-crossing pairings of 2n points on a line; the lowest unpaired point
  // is always paired next, so a point inside the candidate span that is
  // already paired would have its partner outside — a crossing
  std::vector<int> p(static_cast<size_t>(2 * n), -1);
  auto gen = [&](auto&& self, int i) -> void {
    if (i == 2 * n) {
      out.emplace_back(n, n, p);
      return;
    }
    if (p[static_cast<size_t>(i)] >= 0) {
      self(self, i + 1);
      return;
    }
    for (int j = i + 1; j < 2 * n; j += 2) {
      if (p[static_cast<size_t>(j)] >= 0) break;
      bool crosses = false;
      for (int t = i + 1; t < j && !crosses; ++t)
        crosses = p[static_cast<size_t>(t)] >= 0;
      if (crosses) continue;
      p[static_cast<size_t>(i)] = j;
      p[static_cast<size_t>(j)] = i;
      self(self, i + 1);
      p[static_cast<size_t>(i)] = -1;
      p[static_cast<size_t>(j)] = -1;
    }
  };
  gen(gen, 0);
  return out;
}

std::string Matching::str() const {
  std::ostringstream os;
  os << "{" << bot_ << "x" << top_ << ":";
  for (int i = 0; i < points(); ++i) {
    int j = partner(i);
    if (j > i) os << " (" << i << "," << j << ")";
  }
  os << "}";
  return os.str();
}

int SliceWord::top() const {
  int w = bot;
  for (const Slice& s : slices) {
    if (s.kind == SliceKind::Cup) w += 2;
    else if (s.kind == SliceKind::Cap) w -= 2;
  }
  return w;
}

void SliceWord::validate() const {
  if (bot < 0) throw std::invalid_argument("SliceWord: negative width");
  int w = bot;
  for (const Slice& s : slices) {
    switch (s.kind) {
      case SliceKind::Cup:
        if (s.pos < 0 || s.pos > w)
          throw std::invalid_argument("SliceWord: cup out of range");
        w += 2;
        break;
      case SliceKind::Cap:
        if (s.pos < 0 || s.pos > w - 2)
          throw std::invalid_argument("SliceWord: cap out of range");
        w -= 2;
        break;
      case SliceKind::CrossPos:
      case SliceKind::CrossNeg:
        if (s.pos < 0 || s.pos > w - 2)
          throw std::invalid_argument("SliceWord: crossing out of range");
        break;
      case SliceKind::JWBox:
        if (s.size < 0 || s.pos < 0 || s.pos + s.size > w)
          throw std::invalid_argument("SliceWord: box out of range");
        break;
    }
  }
}

SliceWord kink_word(bool positive) {
  SliceWord w;
  w.bot = 1;
  w.cup(0);
  if (positive)
    w.cross_pos(1);
  else
    w.cross_neg(1);
  w.cap(0);
  return w;
}

SliceWord uv_word_v(int k, int m, const BuildUvConfig& cfg) {
  if (k < 0 || m < 0) throw std::invalid_argument("uv_word: k, m must be >= 0");
  int km = k + m;
  SliceWord w;
  w.bot = 2 * km;
  if (km == 0) return w;
  w.jw(0, km).jw(km, km);
  for (int t = 0; t < m; ++t) w.cap(km - 1 - t);
  for (int t = 0; t < m; ++t) w.cup(k + t);
  if (cfg.boxes_both_sides) w.jw(0, km).jw(km, km);
  return w;
}

SliceWord uv_word_u(int k, int m, const BuildUvConfig& cfg) {
  int km = k + m;
  SliceWord w;
  w.bot = 2 * km;
  if (km == 0) return w;
  w.jw(0, km).jw(km, km);
  for (int t = 0; t < m; ++t) w.cap(km - 1 - t);
  // slide the outermost through strand across all the others and back
  auto cross = [&](int pos) {
    if (cfg.slide_positive)
      w.cross_pos(pos);
    else
      w.cross_neg(pos);
  };
  for (int i = 2 * k - 2; i >= 0; --i) cross(i);
  for (int i = 0; i <= 2 * k - 2; ++i) cross(i);
  for (int t = 0; t < m; ++t) w.cup(k + t);
  if (cfg.boxes_both_sides) w.jw(0, km).jw(km, km);
  return w;
}

TLElement<HalfLaurent> jones_wenzl_integral(int n) {
  thread_local std::map<int, TLElement<HalfLaurent>> memo;
  auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  const FracRing F;
  TLElement<LaurentFrac> f = jones_wenzl(F, n);
  LaurentFrac scale(HalfLaurent::quantum_factorial(n));
  TLElement<HalfLaurent> out(n, n);
  for (const auto& [m, c] : f.terms) {
    LaurentFrac v = c * scale;
    if (!v.is_integral())
      throw std::logic_error("jones_wenzl_integral: scaled coefficient not integral");
    out.add_term(m, v.num());
  }
  memo.emplace(n, out);
  return out;
}

TLElement<HalfLaurent> resolve_scaled_boxes(const SliceWord& w) {
  w.validate();
  const LaurentRing Z;
  HalfLaurent delta = loop_delta();
  std::map<Matching, HalfLaurent> cur;
  cur.emplace(Matching::identity(w.bot), HalfLaurent(1));
  int width = w.bot;

  auto flush = [&](const TLElement<HalfLaurent>& x) {
    std::map<Matching, HalfLaurent> next;
    for (const auto& [m, c] : cur)
      for (const auto& [xm, xc] : x.terms) {
        auto [r, loops] = matching_compose(m, xm);
        HalfLaurent cc = c * xc;
        for (int l = 0; l < loops; ++l) cc *= delta;
        auto it = next.find(r);
        if (it == next.end()) {
          next.emplace(r, cc);
        } else {
          it->second += cc;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    cur = std::move(next);
  };

  SliceWord piece;
  piece.bot = w.bot;
  for (const Slice& s : w.slices) {
    if (s.kind == SliceKind::JWBox) {
      if (!piece.slices.empty()) {
        flush(resolve(Z, piece));
        piece.slices.clear();
      }
      piece.bot = width;
      TLElement<HalfLaurent> f = jones_wenzl_integral(s.size);
      TLElement<HalfLaurent> box(width, width);
      for (const auto& [m, c] : f.terms)
        box.add_term(Matching::pad(width, s.pos, m), c);
      flush(box);
    } else {
      piece.slices.push_back(s);
      if (s.kind == SliceKind::Cup) width += 2;
      if (s.kind == SliceKind::Cap) width -= 2;
    }
  }
  if (!piece.slices.empty()) flush(resolve(Z, piece));

  TLElement<HalfLaurent> out(w.bot, width);
  for (auto& [m, c] : cur) out.add_term(m, c);
  return out;
}

}  // namespace skein
