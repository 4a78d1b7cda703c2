#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/charalg.hpp"
#include "legendrian/invariants.hpp"

namespace legendrian {

enum class Verdict { Distinguished, IndistinguishableAtBounds };
std::string to_string(Verdict v);

// Names the invariant property that differs plus the data needed to re-check
// it (witness words, probe substitutions, annihilated basis index).
struct Certificate {
  std::string property;
  std::string summary;
  std::map<std::string, std::string> data;
};

struct CompareOptions {
  CompletionBounds bounds;
  int witness_len = 3;
  std::vector<Probe> probes_a, probes_b;
  int max_degree = 3;  // graded unit pairing is tried for 0 < |d| <= max_degree
  AugmentationSearch aug;
  TietzeOptions tietze;
};

struct CompareResult {
  Verdict verdict = Verdict::IndistinguishableAtBounds;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;  // every check run, in order
};

// Degree-pair stabilizations (by top degree) making the two distributions
// equal, or nullopt when the Euler characteristics differ.
std::optional<std::pair<std::vector<int>, std::vector<int>>> equalizing_stabilizations(const DegreeDistribution& a,
                                                                                        const DegreeDistribution& b);

CompareResult compare_knots(const DGA& a, const DGA& b, const CompareOptions& opt = {});

}  // namespace legendrian
