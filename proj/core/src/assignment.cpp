#include "rdom/assignment.hpp"

#include "rdom/error.hpp"

namespace rdom {

int RainbowAssignment::weight() const {
  int w = 0;
  for (Label l : labels_) w += label_weight(l);
  return w;
}

int RainbowAssignment::count(Label l) const {
  int c = 0;
  for (Label x : labels_) c += x == l ? 1 : 0;
  return c;
}

VertexSet RainbowAssignment::vertices_with(Label l) const {
  VertexSet s;
  for (int v = 0; v < size(); ++v)
    if (labels_[v] == l) s.insert(v);
  return s;
}

VertexSet RainbowAssignment::vertices_with_color(int color) const {
  VertexSet s;
  for (int v = 0; v < size(); ++v)
    if (has_color(labels_[v], color)) s.insert(v);
  return s;
}

RomanAssignment::RomanAssignment(std::vector<int> values) : values_(std::move(values)) {
  for (int x : values_) {
    if (x < 0 || x > 2) throw DomainError("Roman value " + std::to_string(x) + " not in {0,1,2}");
  }
}

void RomanAssignment::set(int v, int value) {
  if (value < 0 || value > 2) {
    throw DomainError("Roman value " + std::to_string(value) + " not in {0,1,2}");
  }
  values_[static_cast<std::size_t>(v)] = value;
}

int RomanAssignment::weight() const {
  int w = 0;
  for (int x : values_) w += x;
  return w;
}

VertexSet RomanAssignment::vertices_with(int value) const {
  VertexSet s;
  for (int v = 0; v < size(); ++v)
    if (values_[v] == value) s.insert(v);
  return s;
}

std::string format_assignment(const RainbowAssignment& f) {
  std::string out;
  for (int v = 0; v < f.size(); ++v) {
    if (v > 0) out += ',';
    switch (f[v]) {
      case Label::None: out += '.'; break;
      case Label::One: out += '1'; break;
      case Label::Two: out += '2'; break;
      case Label::Both: out += "12"; break;
    }
  }
  return out;
}

std::string format_assignment(const RomanAssignment& g) {
  std::string out;
  for (int v = 0; v < g.size(); ++v) {
    if (v > 0) out += ',';
    out += static_cast<char>('0' + g[v]);
  }
  return out;
}

namespace {

template <class Fn>
void for_each_token(std::string_view text, Fn&& fn) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return;
  int index = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    fn(token, index++);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

[[noreturn]] void bad_token(std::string_view token, int index) {
  throw ParseError(ParseErrorKind::BadToken, 0,
                   "bad assignment token '" + std::string(token) + "' at position " +
                       std::to_string(index));
}

}  // namespace

RainbowAssignment parse_rainbow_assignment(std::string_view text) {
  std::vector<Label> labels;
  for_each_token(text, [&](std::string_view t, int i) {
    if (t == ".") labels.push_back(Label::None);
    else if (t == "1") labels.push_back(Label::One);
    else if (t == "2") labels.push_back(Label::Two);
    else if (t == "12") labels.push_back(Label::Both);
    else bad_token(t, i);
  });
  return RainbowAssignment(std::move(labels));
}

RomanAssignment parse_roman_assignment(std::string_view text) {
  std::vector<int> values;
  for_each_token(text, [&](std::string_view t, int i) {
    if (t.size() == 1 && t[0] >= '0' && t[0] <= '2') values.push_back(t[0] - '0');
    else bad_token(t, i);
  });
  return RomanAssignment(std::move(values));
}

}  // namespace rdom
