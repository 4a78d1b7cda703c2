#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legendrian {

enum class Ring : std::uint8_t { Z, Z2 };

// Coefficient mode of an algebra universe: Z or Z/2 scalars and the number of
// central Laurent variables t_1..t_k. Operations on elements of different
// modes throw std::invalid_argument.
struct Mode {
  Ring ring = Ring::Z;
  int num_t = 0;
  bool operator==(const Mode&) const = default;
};

using Word = std::vector<int>;  // generator ids, 0-based

// Degree-lexicographic order: shorter words first, then lexicographic by id.
bool deglex_less(const Word& a, const Word& b);

struct Term {
  Word word;
  std::vector<int> t;  // exponents of t_1..t_k
  bool operator==(const Term&) const = default;
};

struct TermLess {
  bool operator()(const Term& a, const Term& b) const;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Mode mode) : mode_(mode) {}

  static AlgebraElement zero(Mode mode) { return AlgebraElement(mode); }
  static AlgebraElement one(Mode mode) { return scalar(mode, 1); }
  static AlgebraElement scalar(Mode mode, long long c, std::vector<int> t = {});
  static AlgebraElement gen(Mode mode, int id);
  static AlgebraElement word(Mode mode, Word w, long long c = 1, std::vector<int> t = {});

  const Mode& mode() const { return mode_; }
  const std::map<Term, long long, TermLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Constant term (empty word, all t exponents zero).
  long long constant() const;
  int max_length() const;
  // Largest generator id used, or -1.
  int max_generator() const;

  void add_term(const Word& w, const std::vector<int>& t, long long c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement operator-() const;
  AlgebraElement scaled(long long c, const std::vector<int>& t = {}) const;
  bool operator==(const AlgebraElement& o) const = default;

  // Z -> Z/2 and, optionally, t = 1.
  AlgebraElement reduce(Ring ring, bool collapse_t) const;

 private:
  void check_mode(const AlgebraElement& o) const;
  long long normalize(long long c) const;

  Mode mode_;
  std::map<Term, long long, TermLess> terms_;
};

// Homomorphic extension of gen -> images[gen]; a missing image keeps the
// generator. Images must share x's mode.
AlgebraElement substitute(const AlgebraElement& x,
                          const std::vector<std::optional<AlgebraElement>>& images);
// Every word reversed.
AlgebraElement reverse(const AlgebraElement& x);

// Signed Leibniz extension d(vw) = (dv)w + (-1)^|v| v(dw), d(t) = 0.
class Derivation {
 public:
  Derivation(std::vector<AlgebraElement> images, std::vector<int> degrees);
  AlgebraElement operator()(const AlgebraElement& x) const;
  AlgebraElement of_word(const Word& w) const;
  const std::vector<AlgebraElement>& images() const { return images_; }

 private:
  std::vector<AlgebraElement> images_;
  std::vector<int> degrees_;
};

Derivation leibniz_extend(std::vector<AlgebraElement> images, std::vector<int> degrees);

// Canonical rendering in term order, e.g. "1 + t a1a2 - 2 t1^-1 t2 a3".
// t variables print as "t" when there is one and "t1", "t2", ... otherwise.
std::string to_string(const AlgebraElement& x, const std::vector<std::string>& names);
std::string word_string(const Word& w, const std::vector<std::string>& names);

// Parses sums of products of integers, t variables, generator names,
// parenthesised subexpressions and nonnegative powers ("a10^2", "t^-1").
// In a mode without t variables any t evaluates to 1.
// Throws std::invalid_argument.
AlgebraElement parse_element(std::string_view text, const std::vector<std::string>& names, Mode mode);

}  // namespace legendrian
