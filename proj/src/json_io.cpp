#include "skein/json_io.hpp"

namespace skein {

json to_json(const HalfLaurent& x) {
  json out = json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({e, c.str()});
  return out;
}

HalfLaurent half_laurent_from_json(const json& j) {
  HalfLaurent x;
  for (const auto& term : j) {
    long long e = term.at(0).get<long long>();
    Integer c(term.at(1).get<std::string>());
    x += HalfLaurent::monomial(c, e);
  }
  return x;
}

json to_json(const LaurentFrac& x) {
  if (x.is_integral()) return to_json(x.num());
  return {{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

json to_json(const Matching& m) {
  if (m.bot() == m.top()) return json(m.pairing());
  return {{"bot", m.bot()}, {"top", m.top()}, {"pairing", m.pairing()}};
}

Matching matching_from_json(const json& j) {
  if (j.is_array()) {
    auto pairing = j.get<std::vector<int>>();
    int n = static_cast<int>(pairing.size()) / 2;
    return Matching(n, n, std::move(pairing));
  }
  return Matching(j.at("bot").get<int>(), j.at("top").get<int>(),
                  j.at("pairing").get<std::vector<int>>());
}

namespace {

const char* slice_name(SliceKind k) {
  switch (k) {
    case SliceKind::Cup: return "cup";
    case SliceKind::Cap: return "cap";
    case SliceKind::CrossPos: return "x+";
    case SliceKind::CrossNeg: return "x-";
    case SliceKind::JWBox: return "jw";
  }
  return "?";
}

SliceKind slice_kind(const std::string& s) {
  if (s == "cup") return SliceKind::Cup;
  if (s == "cap") return SliceKind::Cap;
  if (s == "x+") return SliceKind::CrossPos;
  if (s == "x-") return SliceKind::CrossNeg;
  if (s == "jw") return SliceKind::JWBox;
  throw std::invalid_argument("unknown slice kind: " + s);
}

std::string states_str(const std::vector<int>& st) {
  std::string s;
  for (int v : st) s += v > 0 ? '+' : '-';
  return s;
}

std::vector<int> states_parse(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else throw std::invalid_argument("bad state character");
  }
  return out;
}

}  // namespace

json to_json(const SliceWord& w) {
  json slices = json::array();
  for (const Slice& s : w.slices) {
    if (s.kind == SliceKind::JWBox)
      slices.push_back({slice_name(s.kind), s.pos, s.size});
    else
      slices.push_back({slice_name(s.kind), s.pos});
  }
  return {{"bot", w.bot}, {"slices", slices}};
}

SliceWord slice_word_from_json(const json& j) {
  SliceWord w;
  w.bot = j.at("bot").get<int>();
  for (const auto& s : j.at("slices")) {
    Slice sl;
    sl.kind = slice_kind(s.at(0).get<std::string>());
    sl.pos = s.at(1).get<int>();
    if (sl.kind == SliceKind::JWBox) sl.size = s.at(2).get<int>();
    w.slices.push_back(sl);
  }
  w.validate();
  return w;
}

json to_json(const StatedTangle& t) {
  return {{"word", to_json(t.word)},
          {"left", states_str(t.left)},
          {"right", states_str(t.right)}};
}

StatedTangle stated_tangle_from_json(const json& j) {
  return StatedTangle::from_word(slice_word_from_json(j.at("word")),
                                 states_parse(j.at("left").get<std::string>()),
                                 states_parse(j.at("right").get<std::string>()));
}

json to_json(const PBWMonomial& m) {
  return {m.family == PBWFamily::A ? "A" : "D", m.i, m.j, m.k};
}

PBWMonomial pbw_from_json(const json& j) {
  PBWMonomial m;
  std::string fam = j.at(0).get<std::string>();
  if (fam == "A") m.family = PBWFamily::A;
  else if (fam == "D") m.family = PBWFamily::D;
  else throw std::invalid_argument("bad PBW family");
  m.i = j.at(1).get<long>();
  m.j = j.at(2).get<long>();
  m.k = j.at(3).get<long>();
  if (m.family == PBWFamily::D && m.i < 1)
    throw std::invalid_argument("D-family monomial needs i >= 1");
  return m;
}

json to_json(const OqElement<HalfLaurent>& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms) out.push_back({to_json(m), to_json(c)});
  return out;
}

OqElement<HalfLaurent> oq_from_json(const json& j) {
  OqElement<HalfLaurent> x;
  for (const auto& term : j)
    x.add_term(pbw_from_json(term.at(0)), half_laurent_from_json(term.at(1)));
  return x;
}

json to_json(const Tensor2<HalfLaurent>& t) {
  json out = json::array();
  for (const auto& [mm, c] : t.terms)
    out.push_back({to_json(mm.first), to_json(mm.second), to_json(c)});
  return out;
}

json to_json(const HH0Certificate& c) {
  json out;
  out["verdict"] = to_string(c.verdict);
  if (c.verdict == HH0Verdict::Zero) {
    json comb = json::array();
    for (const auto& term : c.combination)
      comb.push_back({to_json(term.coeff), to_json(term.m1), to_json(term.m2)});
    out["commutator_combination"] = comb;
  }
  if (c.verdict == HH0Verdict::Nonzero) {
    json img = json::array();
    for (const auto& [m, v] : c.commutative_image)
      img.push_back({to_json(m), v.str()});
    out["commutative_image_at_q1"] = img;
  }
  return out;
}

json report_to_json(const std::vector<verify::CheckResult>& results,
                    const std::vector<long>& cyclo_orders) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"status", r.passed ? "pass" : "fail"},
                      {"details", r.details},
                      {"wall_ms", r.ms}});
    all = all && r.passed;
  }
  json spec = json::array();
  for (long m : cyclo_orders)
    spec.push_back({{"m", m}, {"N", ord_q4(m)}});
  return {{"checks", checks}, {"specializations", spec}, {"all_passed", all}};
}

}  // namespace skein
