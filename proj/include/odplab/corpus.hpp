#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "odplab/construct.hpp"

namespace odplab {

/// One named instance of the frozen regression corpus.
struct CorpusEntry {
  std::string name;
  Instance inst;
};

/// The frozen corpus, built once per process: power-set structures for
/// 1..4 points, even-set structures on 4 and 6 points, every
/// symmetric-difference-closed family for universes 1..4, and every
/// unordered product pair (repetition allowed) under 512 elements.
const std::vector<CorpusEntry>& corpus();

struct CriterionOutcome {
  int id = 0;
  bool pass = false;
  std::string detail;  // one-line summary or first failure
  double seconds = 0.0;
};

/// Runs the thirteen-property acceptance suite over the corpus and the
/// infinite-family procedures. jobs > 1 parallelizes per-instance work;
/// results are assembled in corpus order either way.
std::vector<CriterionOutcome> run_acceptance(unsigned jobs = 1);

/// Prints one "PASS criterion N: ..." / "FAIL criterion N: ..." line per
/// criterion plus a summary; true when everything passed. Timings are
/// optional so callers can keep output byte-stable.
bool corpus_check(std::ostream& out, unsigned jobs = 1,
                  bool with_timings = true);

}  // namespace odplab
