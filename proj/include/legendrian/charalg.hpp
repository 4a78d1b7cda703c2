#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/rewriting.hpp"

namespace legendrian {

// The characteristic algebra A / <d a_i> over Z/2 with t = 1. Generators
// keep their ids; an eliminated generator is absent and carries its value in
// terms of the present generators.
struct CharPresentation {
  std::vector<std::string> names;
  std::vector<int> degrees;
  int modulus = 0;
  std::vector<bool> present;
  std::vector<std::optional<AlgebraElement>> values;
  std::vector<AlgebraElement> relations;  // mode {Z2, 0}
  bool trivial = false;                   // 1 lies in the ideal
  std::vector<std::string> log;

  static Mode mode() { return Mode{Ring::Z2, 0}; }
  int size() const { return static_cast<int>(names.size()); }
  std::vector<int> generators() const;  // present ids
  int degree(const Word& w) const;      // reduced modulo `modulus`
  // Homogeneous degree of x, or nullopt for zero or mixed elements.
  std::optional<int> degree(const AlgebraElement& x) const;
  // Rewrites eliminated generators through their values.
  AlgebraElement express(const AlgebraElement& x) const;
};

CharPresentation characteristic_presentation(const DGA& p);
// Drops zero relations, sorts and deduplicates; sets `trivial` on 1.
void canonicalize(CharPresentation& c);
std::string format_presentation(const CharPresentation& c);

struct TietzeOptions {
  int effort = 6;  // rounds of completion-driven elimination
  CompletionBounds bounds;
  bool prune = true;  // drop relations implied by the others
};

// Eliminates g whenever some relation (given or derived by completion) reads
// g + v with v free of g, largest id first; deletes relations reducing to 0.
CharPresentation tietze_simplify(const CharPresentation& c, const TietzeOptions& opt = {});

RewritingSystem complete_rewriting(const CharPresentation& c, const CompletionBounds& bounds = {});
Membership ideal_member(const RewritingSystem& rs, const CharPresentation& c, const AlgebraElement& x);

// Generator -> 0, 1 or another generator; with rest_zero every generator
// neither mentioned nor used as a target goes to 0.
struct ProbeValue {
  enum class Kind { Zero, One, Generator } kind = Kind::Zero;
  int generator = -1;
};
struct Probe {
  std::map<int, ProbeValue> values;
  bool rest_zero = false;
};

// "a3=1, a7=a13, a8=a12, rest=0". Throws std::invalid_argument.
Probe parse_probe(const std::string& text, const std::vector<std::string>& names);
std::string format_probe(const Probe& s, const std::vector<std::string>& names);
// Image of x under the substitution.
AlgebraElement apply_probe(const Probe& s, const AlgebraElement& x, int num_generators);
// True when every substitution preserves degrees.
bool probe_is_graded(const Probe& s, const CharPresentation& c);
// Substituted presentation, then tietze_simplify.
CharPresentation probe_quotient(const CharPresentation& c, const Probe& s, const TietzeOptions& opt = {});

// <x, y | 1 + xy> plus generators that occur in no relation.
struct ToeplitzShape {
  int x = -1, y = -1;
  std::vector<int> free;
};
std::optional<ToeplitzShape> toeplitz_shape(const CharPresentation& c);
// Smallest j with g e_j = 0 in the shift representation (x lowers, y raises,
// free generators act as 0), searching j up to the longest word length.
std::optional<int> toeplitz_annihilated(const ToeplitzShape& t, const AlgebraElement& g);
// Reverse every word and swap x with y; an anti-automorphism of the algebra.
AlgebraElement toeplitz_adjoint(const ToeplitzShape& t, const AlgebraElement& g);

// A probe with its quotient computed once, for repeated queries.
struct PreparedProbe {
  Probe probe;
  CharPresentation quotient;
  std::optional<ToeplitzShape> shape;
  bool graded = false;
};
std::vector<PreparedProbe> prepare_probes(const CharPresentation& c, const std::vector<Probe>& probes,
                                          const TietzeOptions& opt = {});

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

struct SideResult {
  Answer answer = Answer::Unknown;
  std::optional<AlgebraElement> witness;  // the inverse for Yes
  std::string certificate;
};
struct Invertibility {
  SideResult left, right;
};

struct SearchOptions {
  CompletionBounds bounds;
  int witness_len = 3;  // longest word tried as an inverse or pairing factor
  std::vector<Probe> probes;
  std::vector<PreparedProbe> prepared;  // used instead of `probes` when set
  TietzeOptions tietze;
};

Invertibility one_sided_invertibility(const CharPresentation& c, const AlgebraElement& g,
                                      const SearchOptions& opt = {});
Invertibility one_sided_invertibility(const CharPresentation& c, const RewritingSystem& rs,
                                      const AlgebraElement& g, const SearchOptions& opt = {});

struct PairingResult {
  Answer answer = Answer::Unknown;  // Yes: exists
  std::optional<AlgebraElement> v, w;
  std::string certificate;
};
// Do v in C_d and w in C_-d with vw = 1 exist?
PairingResult graded_unit_pairing(const CharPresentation& c, int d, const SearchOptions& opt = {});
PairingResult graded_unit_pairing(const CharPresentation& c, const RewritingSystem& rs, int d,
                                  const SearchOptions& opt = {});

// Proof that C has no element invertible from exactly one side: C is free,
// or its ideal equals that of {uv + vu, 1 + u_1...u_k} on the generators u_i
// occurring in relations, making C a free product of a free algebra and a
// Laurent polynomial ring, hence a domain. Ideal equality is checked by
// membership both ways.
std::optional<std::string> domain_certificate(const CharPresentation& c, const CompletionBounds& bounds = {});

CharPresentation mirror_presentation(const CharPresentation& c);
DGA mirror_dga(const DGA& p);
inline DGA stabilize_dga(const DGA& p, int degree) { return stabilize(p, degree, 1); }

struct Abelianization {
  std::vector<AlgebraElement> relations;  // letters of each word sorted
  int variables = 0;
  long long graded_points = 0;  // F2 points with degree-0 coordinates only
  long long ungraded_points = 0;
};
// Throws BoundExceeded when 2^variables exceeds max_points.
Abelianization abelianize(const CharPresentation& c, long long max_points = 1LL << 24);
// Relations of each abelianization lie in the other's ideal (identity map on
// generators), checked at bound.
bool abelianizations_match(const CharPresentation& a, const CharPresentation& b,
                           const CompletionBounds& bounds = {});

}  // namespace legendrian
