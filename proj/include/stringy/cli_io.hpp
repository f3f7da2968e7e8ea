#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stringy/fano.hpp"
#include "stringy/identities.hpp"
#include "stringy/polytope.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

using Json = nlohmann::ordered_json;

struct PolytopeRecord {
  std::size_t index = 0;
  std::size_t source_line = 0;  // 1-based line of the block header
  LatticePolytope polytope;
  std::optional<std::string> label;
};

/// Blocks "a b [label]" followed by a rows of b integers.  a < b: columns are
/// vertices; a >= b: rows are vertices.  Blank lines and '#' lines are skipped.
/// Throws ParseError with the offending line number.
std::vector<PolytopeRecord> parse_polytopes(std::string_view text);

/// Native block format (rows are vertices); parse_polytopes reads it back.
std::string emit_polytopes(const std::vector<PolytopeRecord>& records);

enum class Check { Classify, E3d, EGeneral, Id24, Lw, Cy, Estr };

std::string check_name(Check c);
/// Comma-separated list of classify, e3d, e_general, id24, lw, cy.
/// Throws EmptyCheckSet / InvalidArgument.
std::vector<Check> parse_checks(std::string_view list);

enum class Outcome { Pass, Fail, Skipped };
std::string outcome_name(Outcome o);

struct CheckResult {
  std::size_t index = 0;
  Check check = Check::Classify;
  Outcome outcome = Outcome::Skipped;
  Json report;  // full report, or {"error": ..., "code": ...}
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct ClassificationTally {
  std::size_t canonical = 0;
  std::size_t reflexive = 0;
  std::size_t almost_reflexive = 0;
  std::size_t almost_pseudoreflexive = 0;
  std::size_t pseudoreflexive = 0;
  std::size_t canonical_not_almost_reflexive = 0;
  std::size_t ldp = 0;
};

struct BatchOptions {
  std::vector<Check> checks;
  unsigned jobs = 1;
  /// Subdivision used by the estr check; nullopt picks the closed form when one applies.
  std::optional<SubdivisionStrategy> strategy;
};

struct BatchSummary {
  std::size_t total = 0;
  std::vector<Check> checks;
  std::map<Check, CheckTally> tallies;
  std::optional<ClassificationTally> classification;  // present when classify ran
  std::vector<std::optional<std::string>> labels;     // per record
  std::vector<std::size_t> source_lines;
  std::vector<CheckResult> results;                   // record-major, check-minor
  std::vector<const CheckResult*> failures() const;
  std::size_t failure_count() const;
};

/// One check on one polytope, as the batch driver runs it.
CheckResult run_check(const LatticePolytope& p, Check check, const BatchOptions& options, std::size_t index = 0);

/// Throws EmptyCheckSet.  Per-record errors land in the summary.
BatchSummary run_batch(const std::vector<PolytopeRecord>& records, const BatchOptions& options);

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view name);

std::string emit_report(const BatchSummary& summary, Format format);

Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const StringyEFunction& e);
Json to_json(const ClassificationReport& r);
Json to_json(const Identity24Report& r);
Json to_json(const LibgoberWoodReport& r);

}  // namespace stringy
