#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl1/ast.hpp"

namespace sl1 {

// splitmix64. Hand-rolled so that streams are identical across platforms and
// standard library versions; std::mt19937 would do, but its distribution
// adapters are not portable bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); n = 0 gives 0. Modulo bias is irrelevant at
  // the ranges used here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

struct FuzzConfig {
  std::uint64_t max_quantifiers = 3;   // existential + universal combined
  std::uint64_t max_matrix_nodes = 12;
  std::uint64_t max_constant = 2;      // cap for counts in cardinality atoms
  std::uint64_t solver_budget = 20000;  // structures per check_finite_sat call
  std::uint64_t oracle_budget = 20000;  // structures per oracle_sat call
  std::uint64_t eval_budget = 20000;    // steps per structure evaluation
};

struct FuzzDisagreement {
  std::uint64_t index = 0;
  std::string formula;
  std::string detail;
};

// Counters are deterministic for a fixed seed, count and config.
struct FuzzReport {
  std::uint64_t count = 0;
  std::uint64_t sat = 0;
  std::uint64_t unsat = 0;
  std::uint64_t unknown = 0;
  std::uint64_t witness_checks = 0;
  std::vector<FuzzDisagreement> disagreements;

  std::string text() const;
};

// Closed exists*forall* sentence with a random matrix over the generated
// variables. Node count of the matrix stays within cfg.max_matrix_nodes.
SLFormula random_bsr_sentence(Rng& rng, const FuzzConfig& cfg);

// Differential run: for `count` random sentences, compare check_finite_sat
// against the bounded oracle and re-validate every Sat witness. Records a
// disagreement when
//   - a Sat witness fails validation,
//   - the solver reports Sat but the oracle completed that universe size
//     without finding a model,
//   - the solver reports Unsat but the oracle found a model,
//   - the solver reports BoundedUnknown yet the oracle found a model no
//     larger than the size the solver claims to have completed.
FuzzReport fuzz_compare(std::uint64_t seed, std::uint64_t count,
                        const FuzzConfig& cfg = {});

}  // namespace sl1
