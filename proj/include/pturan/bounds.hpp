#pragma once
// Closed-form bounds and conjectured values for planar Turán numbers of
// double stars, plus structural predicate suites checked against enumerated
// and sampled pattern-free planar graphs. All formula evaluation is exact
// integer arithmetic; rationals are reported via their floors.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"

namespace pturan {

struct Bounds {
  std::optional<long long> lower;
  std::optional<long long> upper;
  std::string source;        // formula label, e.g. "2n-4 <= ex <= 2n"
  bool valid = false;        // n inside the stated range
  bool lower_clamped = false;  // negative formula value clamped to 0
};

// Proven bounds with validity ranges. Supported patterns: (2,2), (2,3),
// (2,4), (2,5), (3,3), (3,4); anything else throws std::invalid_argument.
Bounds theorem_bounds(const DoubleStarPattern& p, long long n);

struct ConjectureValue {
  long long value;      // floor of the conjectured formula
  bool exact_form;      // formula value is an integer claimed as exact equality
  std::string source;
};

// Conjectured values: (2,4) -> 15n/7; (3,3) -> piecewise (3n-6 for 3<=n<=7,
// 16 at n=8, 18 at n=9, floor(5n/2)-5 beyond); (3,4) -> 5n/2; (3,5) -> 8n/3
// main term only (never exact_form). Returns nullopt for other patterns, and
// for (3,3) below n=3 where the piecewise formula is not defined.
std::optional<ConjectureValue> conjectured_value(const DoubleStarPattern& p, long long n);

struct BoundReport {
  long long n;
  DoubleStarPattern pattern;
  std::optional<long long> exact;
  Bounds theorem;
  std::optional<ConjectureValue> conjecture;
  bool consistent = true;  // exact inside [lower, upper] whenever present and valid
  std::string detail;
};

BoundReport check_consistency(const DoubleStarPattern& p, long long n,
                              std::optional<long long> exact);

struct LemmaResult {
  std::string name;
  bool pass = false;
  std::optional<std::string> counterexample;  // graph6 of a violating graph
  std::string detail;
};

struct LemmaSuiteOptions {
  int samples = 1000;            // randomized pattern-free samples
  std::uint64_t seed = 20260816; // base seed; each sample derives its own
  int exhaustive_max_n = 7;      // exhaustive class enumeration up to here
  int sample_n_min = 8;
  int sample_n_max = 20;
  int worker_count = 1;          // forwarded to exact-value computations
};

// Structural predicate suites. Labels: s22-lemma21, s22-fig2, s33-deg7,
// s33-66edge, s33-55edge, s34-deg8, s34-77edge. Unknown labels throw.
std::vector<LemmaResult> lemma_suite(const std::string& suite,
                                     const LemmaSuiteOptions& opt = {});

const std::vector<std::string>& lemma_suite_labels();

}  // namespace pturan
