#pragma once

// JSON serialization of engine values. Formats:
//   HalfLaurent:  [[twice-exponent, "coefficient"], ...] sorted by exponent
//   Matching:     involution array (square) or {bot, top, pairing}
//   TLElement:    {bot, top, terms: [[pairing, coeff], ...]}
//   SliceWord:    {bot, slices: [["cup", pos], ..., ["jw", pos, size]]}
//   StatedTangle: {word, left: "+-", right: "--"} with states bottom to top
//   PBWMonomial:  [family, i, j, k];  OqElement: [[monomial, coeff], ...]
// Every serialized value parses back to an equal value.

#include "skein/verify.hpp"

#include <json.hpp>

namespace skein {

using nlohmann::json;

json to_json(const HalfLaurent& x);
HalfLaurent half_laurent_from_json(const json& j);

json to_json(const LaurentFrac& x);

inline json to_json(const CycloElem& x) {
  return {{"m", x.field() ? x.field()->m : 0}, {"value", x.str()}};
}

json to_json(const Matching& m);
Matching matching_from_json(const json& j);

template <class E>
json tl_to_json(const TLElement<E>& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms) terms.push_back({to_json(m), to_json(c)});
  return {{"bot", x.bot}, {"top", x.top}, {"terms", terms}};
}

json to_json(const SliceWord& w);
SliceWord slice_word_from_json(const json& j);

json to_json(const StatedTangle& t);
StatedTangle stated_tangle_from_json(const json& j);

json to_json(const PBWMonomial& m);
PBWMonomial pbw_from_json(const json& j);

json to_json(const OqElement<HalfLaurent>& x);
OqElement<HalfLaurent> oq_from_json(const json& j);

json to_json(const Tensor2<HalfLaurent>& t);

json to_json(const HH0Certificate& c);

json report_to_json(const std::vector<verify::CheckResult>& results,
                    const std::vector<long>& cyclo_orders);

}  // namespace skein
