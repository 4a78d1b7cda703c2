#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/front.hpp"

namespace legendrian {

// Expected value of some invariant, with where it comes from: "printed"
// (an externally tabulated value), "derived" (independent hand or brute-force
// computation) or "construction" (true by construction).
struct Annotation {
  std::string key;
  std::string value;
  std::string origin;
};

struct CorpusEntry {
  enum class Kind { Front, Dga };
  std::string name;
  std::vector<std::string> aliases;
  Kind kind = Kind::Front;
  std::string payload;  // front text, or DGA JSON
  std::vector<Annotation> expected;
  std::vector<std::string> probes;  // probe substitutions in text form
};

const std::vector<CorpusEntry>& corpus();
// Accepts a name or alias, with or without the "corpus:" prefix.
const CorpusEntry* find_corpus(const std::string& name);
std::optional<std::string> annotation(const CorpusEntry& e, const std::string& key);

// Front of a front entry, re-validated. Throws InvalidFront.
FrontDiagram corpus_front(const CorpusEntry& e);
// DGA of any entry: fronts go through compute_dga.
DGA corpus_dga(const CorpusEntry& e);

}  // namespace legendrian
