// Claim census: a fixed catalog of classification claims about line graphs
// of annihilator graphs, a per-ring classifier that checks computed
// invariants against those claims, and a suite runner that writes
// deterministic JSON/CSV reports with certificates.
#ifndef RTL_CENSUS_HPP
#define RTL_CENSUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtl/book.hpp"
#include "rtl/embed.hpp"
#include "rtl/graph.hpp"

namespace rtl {

enum class ClaimKind {
  kPlanar,
  kOuterplanar,
  kOuterplanarityIndex,
  kInnerVertexNumber,
  kGenus,
  kCrosscap,
  kBookThickness,
};
std::string claim_kind_name(ClaimKind kind);

// kEqual: the invariant equals value. kAtLeast: the invariant is >= value.
enum class ClaimRelation { kEqual, kAtLeast };

// One classification claim about one ring. Planarity and outerplanarity are
// encoded as value 1 (holds) or 0 (fails). source names the claim group the
// entry was transcribed from; note records transcription caveats such as
// suspected misprints; expected_discrepancy marks entries transcribed
// literally even though the computed invariant is known to disagree.
struct ClaimEntry {
  std::string expr;
  ClaimKind kind = ClaimKind::kPlanar;
  ClaimRelation relation = ClaimRelation::kEqual;
  int value = 0;
  std::string source;
  std::string note;
  bool expected_discrepancy = false;
};

// The full transcribed claim table, in source order. Stable across calls.
const std::vector<ClaimEntry>& claim_catalog();

// verdict is "match", "mismatch", or "undecided-at-budget"; computed renders
// the invariant actually established ("planar", "3", "1..2", "1..", or
// "unavailable" when the computation errored or was not requested).
struct ClaimVerdictRecord {
  ClaimEntry claim;
  std::string verdict;
  std::string computed;
};

// Which optional invariants classify_ring should compute. Planarity and
// outerplanarity are always computed; the peeling layers (outerplanarity
// index and inner vertex number) only apply to planar inputs.
struct InvariantRequest {
  bool layers = false;
  bool genus = false;
  bool crosscap = false;
  bool book = false;
};

// Everything computed for one ring, plus verdicts for every catalog claim
// naming it. Construction or solver failures land in error (claims that
// needed the failed value stay undecided); the batch never aborts.
struct ClassificationRecord {
  std::string expr;
  std::string canonical;
  std::string error;
  int order = 0;
  bool local = false;
  int ag_vertices = 0;
  int ag_edges = 0;
  int line_vertices = 0;
  int line_edges = 0;
  std::optional<bool> planar;
  std::string planar_obstruction;  // "K5" or "K3,3"
  std::optional<bool> outerplanar;
  std::string outerplanar_obstruction;  // "K4" or "K2,3"
  std::optional<int> opindex;
  std::optional<int> ivn;
  std::optional<BoundedInvariant> genus;
  std::optional<BoundedInvariant> crosscap;
  std::optional<BookResult> book;
  std::vector<ClaimVerdictRecord> verdicts;
  // Certificate payloads keyed by certificate name; the suite runner writes
  // them to files and records the relative paths in certificates.
  std::map<std::string, ordered_json> certificate_payloads;
  std::map<std::string, std::string> certificates;
};

// Builds the ring, derives the line graph of its annihilator graph, computes
// the requested invariants under the budget, and evaluates every catalog
// claim about expr. Deterministic for a fixed node budget with seconds == 0
// or a time budget that never binds.
ClassificationRecord classify_ring(const std::string& expr, const Budget& budget,
                                   const InvariantRequest& request);

enum class Suite { kPlanarity, kGenus, kCrosscap, kBook, kAll };
std::string suite_name(Suite suite);
std::optional<Suite> suite_from_name(const std::string& name);

struct SuiteOptions {
  Suite suite = Suite::kAll;
  Budget budget;                    // per solver call
  std::string profile = "default";  // label recorded in the reports
  int workers = 1;
  std::string report_dir;  // empty: compute only, write nothing
};

// mismatches counts every mismatch verdict; expected_mismatches the subset
// flagged expected_discrepancy in the catalog. findings lists, in report
// order, each claim that mismatched, was expected to, or carries a note.
struct SuiteSummary {
  int rings = 0;
  int claims = 0;
  int matches = 0;
  int mismatches = 0;
  int expected_mismatches = 0;
  int undecided = 0;
  std::vector<std::string> findings;
};

// Classifies every catalog ring carrying a claim of the suite's kinds
// (first-appearance order), in parallel over rings when workers > 1, then
// assembles reports single-threaded in catalog order so the bytes written
// do not depend on the worker count. With report_dir set, writes
// <suite>.json, <suite>.csv, and certificates/rNN-<name>.json.
SuiteSummary run_suite(const SuiteOptions& options,
                       std::vector<ClassificationRecord>* records = nullptr);

}  // namespace rtl

#endif  // RTL_CENSUS_HPP
