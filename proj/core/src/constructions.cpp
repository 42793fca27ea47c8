#include "tsr/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "tsr/errors.hpp"

namespace tsr {

Group cyclic_group(int n, int cap) {
  if (n < 1) throw ParseError("cyclic: order must be positive");
  if (n == 1) return Group::generate({Perm::identity(1)}, 1, cap);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Group::generate({Perm(std::move(img))}, n, cap);
}

Group dihedral_group(int order, int cap) {
  if (order < 2 || order % 2 != 0) throw ParseError("dihedral: order must be even and >= 2");
  int n = order / 2;
  if (n == 1) return cyclic_group(2, cap);
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group::generate({Perm(std::move(rot)), Perm(std::move(refl))}, n, cap);
}

Group symmetric_group(int n, int cap) {
  if (n < 1) throw ParseError("symmetric: degree must be positive");
  if (n == 1) return cyclic_group(1, cap);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return Group::generate({Perm(std::move(cyc)), Perm::transposition(n, 0, 1)}, n, cap);
}

Group alternating_group(int n, int cap) {
  if (n < 3) return cyclic_group(1, cap);
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
  if (n > 3) {
    if (n % 2 == 1) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
      gens.push_back(Perm(std::move(img)));
    } else {
      std::vector<int> img(n);
      img[0] = 0;
      for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
      gens.push_back(Perm(std::move(img)));
    }
  }
  return Group::generate(gens, n, cap);
}

Group quaternion8(int cap) {
  // regular action of Q8 = <i, j> on itself: points 1,-1,i,-i,j,-j,k,-k
  // numbered 0..7 as 1,i,-1,-i,j,k,-j,-k
  // left multiplication by i and by j
  Perm li({1, 2, 3, 0, 5, 6, 7, 4});
  Perm lj({4, 7, 6, 5, 2, 1, 0, 3});
  return Group::generate({li, lj}, 8, cap);
}

Group klein4(int cap) {
  return Group::generate({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, 4,
                         cap);
}

Group elementary_abelian(int p, int k, int cap) {
  if (k < 1) return cyclic_group(1, cap);
  if (k == 1) return cyclic_group(p, cap);
  Group G = cyclic_group(p, cap);
  for (int i = 1; i < k; ++i) G = direct_product(G, cyclic_group(p, cap), cap);
  return G;
}

Group direct_product(const Group& A, const Group& B, int cap) {
  int da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  for (const Perm& a : A.generators()) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = a[i];
    for (int i = 0; i < db; ++i) img[da + i] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& b : B.generators()) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = i;
    for (int i = 0; i < db; ++i) img[da + i] = da + b[i];
    gens.emplace_back(std::move(img));
  }
  return Group::generate(gens, da + db, cap);
}

namespace {

std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lowered(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

int parse_int(const std::string& s) {
  std::string t = trimmed(s);
  if (t.empty()) throw ParseError("expected an integer in group spec");
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad integer in group spec: " + t);
  return std::stoi(t);
}

Group parse_atom(const std::string& raw, int cap) {
  std::string spec = trimmed(raw);
  if (spec.empty()) throw ParseError("empty group spec");
  if (spec[0] == '(') {
    auto gens = parse_perm_list(spec);
    if (gens.empty()) throw ParseError("no generators in group spec: " + spec);
    return Group::generate(gens, gens[0].degree(), cap);
  }
  std::string low = lowered(spec);

  // terse aliases: C<n>, D<order>, S<n>, A<n>, Q8
  if (low.size() >= 2 && std::isdigit(static_cast<unsigned char>(low[1]))) {
    int n = parse_int(low.substr(1));
    switch (low[0]) {
      case 'c': return cyclic_group(n, cap);
      case 'd': return dihedral_group(n, cap);
      case 's': return symmetric_group(n, cap);
      case 'a': return alternating_group(n, cap);
      case 'q':
        if (n == 8) return quaternion8(cap);
        throw ParseError("only quaternion8 is supported");
      default: break;
    }
  }

  if (low == "klein4" || low == "v4") return klein4(cap);
  if (low == "quaternion8") return quaternion8(cap);
  if (low == "trivial" || low == "1") return cyclic_group(1, cap);

  auto starts = [&](const char* w) {
    return low.rfind(w, 0) == 0;
  };
  if (starts("elementary_abelian")) {
    size_t l = low.find('('), r = low.find(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
      throw ParseError("elementary_abelian expects (p,k)");
    std::string args = low.substr(l + 1, r - l - 1);
    size_t comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("elementary_abelian expects (p,k)");
    return elementary_abelian(parse_int(args.substr(0, comma)),
                              parse_int(args.substr(comma + 1)), cap);
  }
  auto named = [&](const char* w) -> int {
    std::string word(w);
    if (!starts(w)) return -1;
    return parse_int(low.substr(word.size()));
  };
  if (int n = named("cyclic"); n > 0) return cyclic_group(n, cap);
  if (int n = named("dihedral"); n > 0) return dihedral_group(n, cap);
  if (int n = named("symmetric"); n > 0) return symmetric_group(n, cap);
  if (int n = named("alternating"); n > 0) return alternating_group(n, cap);
  throw ParseError("unrecognized group spec: " + spec);
}

}  // namespace

Group parse_group_spec(const std::string& spec, int cap) {
  // split on 'x'/'*' at top level (not inside parentheses, not inside a word)
  std::string s = spec;
  for (size_t pos; (pos = s.find("\xc3\x97")) != std::string::npos;)
    s.replace(pos, 2, "x");
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool split_here = false;
    if (depth == 0 && (c == 'x' || c == 'X' || c == '*')) {
      bool prev_word = i > 0 && std::isalpha(static_cast<unsigned char>(s[i - 1]));
      bool next_word = i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1]));
      // a letter flanked by letters is part of a name, not a product sign
      split_here = !(prev_word && next_word);
    }
    if (split_here) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  std::vector<std::string> atoms;
  for (auto& p : parts)
    if (!trimmed(p).empty()) atoms.push_back(p);
  if (atoms.empty()) throw ParseError("empty group spec");
  Group G = parse_atom(atoms[0], cap);
  for (size_t i = 1; i < atoms.size(); ++i)
    G = direct_product(G, parse_atom(atoms[i], cap), cap);
  return G;
}

}  // namespace tsr
