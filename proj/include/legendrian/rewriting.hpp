#pragma once

#include <string>
#include <vector>

#include "legendrian/algebra.hpp"

namespace legendrian {

// Polynomials over Z/2 in free generators, as words sorted in decreasing
// degree-lexicographic order; the first word is the leading one.
using Poly2 = std::vector<Word>;

Poly2 to_poly2(const AlgebraElement& x);
AlgebraElement from_poly2(const Poly2& p);  // mode {Z2, 0}
Poly2 add(const Poly2& a, const Poly2& b);
Poly2 multiply(const Word& left, const Poly2& p, const Word& right);

struct Rule {
  Word lhs;
  Poly2 rhs;  // every word smaller than lhs
  bool operator==(const Rule&) const = default;
};

struct CompletionBounds {
  int max_rules = 500;
  int max_len = 8;  // longest admissible left-hand side
};

enum class CompletionStatus { Complete, BoundedIncomplete, Trivial };

enum class Membership { Yes, No, NoAtBound };

class RewritingSystem {
 public:
  RewritingSystem() = default;

  // Critical-pair completion of the two-sided ideal generated by `relations`.
  static RewritingSystem complete(const std::vector<Poly2>& relations, const CompletionBounds& bounds = {});
  static RewritingSystem complete(const std::vector<AlgebraElement>& relations,
                                  const CompletionBounds& bounds = {});

  Poly2 normal_form(const Poly2& x) const;
  AlgebraElement normal_form(const AlgebraElement& x) const;
  // Yes iff the normal form is 0; a nonzero normal form is a certified No
  // only when the system is complete.
  Membership member(const Poly2& x) const;
  Membership member(const AlgebraElement& x) const;

  const std::vector<Rule>& rules() const { return rules_; }
  CompletionStatus status() const { return status_; }
  bool trivial() const { return status_ == CompletionStatus::Trivial; }
  const CompletionBounds& bounds() const { return bounds_; }
  // Number of critical pairs or relations dropped because of the bounds.
  int dropped() const { return dropped_; }

 private:
  bool reduce_word(const Word& w, Poly2& out) const;
  void index_rules();

  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_first_;  // first letter -> rule ids
  CompletionStatus status_ = CompletionStatus::Complete;
  CompletionBounds bounds_;
  int dropped_ = 0;
};

std::string to_string(CompletionStatus s);
std::string to_string(Membership m);

}  // namespace legendrian
