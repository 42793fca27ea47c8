#ifndef TSR_PERM_HPP
#define TSR_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace tsr {

// A permutation of {0,...,n-1}, stored as its image array.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  static Perm transposition(int degree, int a, int b);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // (a*b)(x) = a(b(x))
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;  // lexicographic on images

  // Cycle notation, e.g. "(0 1)(2 3)"; identity renders as "()".
  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

// Parses cycle notation such as "(0 1)(2 3)". With degree < 0 the degree is
// inferred from the largest point mentioned. Throws ParseError on bad input.
Perm parse_perm(const std::string& text, int degree = -1);

// Parses a comma- or whitespace-separated list of permutations in cycle
// notation, all padded to a common degree.
std::vector<Perm> parse_perm_list(const std::string& text, int degree = -1);

}  // namespace tsr

#endif
