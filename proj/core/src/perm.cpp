#include "tsr/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw ParseError("permutation image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::transposition(int degree, int a, int b) {
  Perm p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ParseError("cycle point out of range");
      p.images_[from] = to;
    }
  }
  // re-validate: overlapping cycles can silently break bijectivity
  return Perm(std::move(p.images_));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw ShapeMismatch("permutation degree mismatch");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = images_[rhs.images_[i]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

namespace {

std::vector<std::vector<int>> parse_cycle_list(const std::string& text, int* max_point) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  *max_point = -1;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
      *max_point = std::max(*max_point, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm parse_perm(const std::string& text, int degree) {
  int max_point = -1;
  auto cycles = parse_cycle_list(text, &max_point);
  int deg = degree >= 0 ? degree : max_point + 1;
  if (deg <= 0) deg = 1;
  if (max_point >= deg) throw ParseError("cycle point exceeds degree");
  return Perm::from_cycles(deg, cycles);
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree) {
  // split on commas that sit between a ')' and a '('
  std::vector<std::string> parts;
  std::string cur;
  int in_paren = 0;
  for (char c : text) {
    if (c == '(') ++in_paren;
    if (c == ')') --in_paren;
    if (c == ',' && in_paren == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  int max_point = -1;
  std::vector<std::vector<std::vector<int>>> all_cycles;
  for (const auto& part : parts) {
    bool blank = true;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    int mp = -1;
    all_cycles.push_back(parse_cycle_list(part, &mp));
    max_point = std::max(max_point, mp);
  }
  int deg = degree >= 0 ? degree : max_point + 1;
  if (deg <= 0) deg = 1;
  if (max_point >= deg) throw ParseError("cycle point exceeds degree");
  std::vector<Perm> out;
  out.reserve(all_cycles.size());
  for (const auto& cycles : all_cycles) out.push_back(Perm::from_cycles(deg, cycles));
  return out;
}

}  // namespace tsr
