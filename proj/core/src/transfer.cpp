#include "rdom/transfer.hpp"

#include "rdom/domination.hpp"
#include "rdom/error.hpp"

namespace rdom {

RainbowAssignment roman_to_rainbow(const Graph& g, const RomanAssignment& r) {
  if (!is_roman_dominating(g, r)) throw DomainError("input is not a Roman dominating function");
  RainbowAssignment f(r.size());
  for (int v = 0; v < r.size(); ++v) {
    f[v] = r[v] == 0 ? Label::None : (r[v] == 1 ? Label::One : Label::Both);
  }
  return f;
}

RainbowAssignment swap_colors(const RainbowAssignment& f) {
  RainbowAssignment out = f;
  for (int v = 0; v < out.size(); ++v) {
    if (out[v] == Label::One) out[v] = Label::Two;
    else if (out[v] == Label::Two) out[v] = Label::One;
  }
  return out;
}

namespace {

RainbowAssignment normalized(const RainbowAssignment& f) {
  return f.count(Label::Two) > f.count(Label::One) ? swap_colors(f) : f;
}

}  // namespace

RomanAssignment rainbow_to_roman(const Graph& g, const RainbowAssignment& f) {
  if (!is_2rainbow_dominating(g, f)) {
    throw DomainError("input is not a 2-rainbow dominating function");
  }
  const RainbowAssignment h = normalized(f);
  RomanAssignment r(h.size());
  for (int v = 0; v < h.size(); ++v) {
    r.set(v, h[v] == Label::None ? 0 : (h[v] == Label::One ? 1 : 2));
  }
  return r;
}

int rainbow_to_roman_weight(const RainbowAssignment& f) {
  const RainbowAssignment h = normalized(f);
  return h.count(Label::One) + 2 * h.count(Label::Two) + 2 * h.count(Label::Both);
}

}  // namespace rdom
