#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cellrook/enumerate.hpp"
#include "cellrook/geometry.hpp"
#include "cellrook/rook.hpp"

namespace cellrook {

bool is_palindromic(const SwitchingPolynomial& poly);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;  // failure detail or skip reason
};

/// Outcome of the structural checks for one shape. `checks` always carries
/// the keys theorem, top_class_unique, rook_number_formula,
/// strict_inequality, coverage_lemma, attack_pair, residue_existence.
struct VerificationReport {
  std::string id;
  int rank = 0;
  SwitchingPolynomial poly;
  bool domino_stable = false;
  bool palindromic = false;
  std::map<std::string, CheckResult> checks;

  bool all_passed() const;
  std::vector<std::string> failed_checks() const;
  std::string to_json() const;  // one line, for JSON-lines report streams
};

/// Runs every check applicable to P. Check failures are recorded in the
/// report, not thrown.
VerificationReport verify(const CellCollection& P,
                          AlignmentMode mode = AlignmentMode::Run);

struct CorpusOptions {
  AlignmentMode alignment = AlignmentMode::Run;
  bool audit_alignment = false;  // also evaluate the other alignment mode
  bool keep_going = false;       // collect failures instead of aborting
  int jobs = 1;
  // Check names that count as failures; empty selects all of them.
  std::vector<std::string> checks;
  // Called for every shape's report; must be thread-safe when jobs > 1.
  std::function<void(const CellCollection&, const VerificationReport&)>
      on_report;
};

struct CorpusSummary {
  std::uint64_t total = 0;
  std::uint64_t stable = 0;
  std::uint64_t palindromic = 0;
  std::uint64_t failed_shapes = 0;
  std::uint64_t nongrid_residue_shapes = 0;
  std::uint64_t alignment_disagreements = 0;
  std::vector<std::string> counterexamples;  // grid texts of failing shapes
  std::map<std::string, std::uint64_t> check_failures;
};

/// Verifies every given shape. Unless keep_going is set, the first failed
/// check aborts with CounterexampleError carrying the shape's grid text.
CorpusSummary verify_corpus(const std::vector<CellCollection>& shapes,
                            const CorpusOptions& options = {});

/// Enumerates the whole rank-n universe and verifies it, distributing
/// subtrees of the enumeration across the worker pool. Aggregates are
/// independent of the parallel schedule.
CorpusSummary verify_corpus(int rank, Universe universe,
                            const CorpusOptions& options = {});

}  // namespace cellrook
