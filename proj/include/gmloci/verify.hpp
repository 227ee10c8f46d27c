#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmloci/dsl.hpp"
#include "gmloci/graded_algebra.hpp"
#include "gmloci/interpolation.hpp"
#include "gmloci/oracle.hpp"

namespace gmloci {

enum class PropertyId {
  P1FiberOneDiagonal,
  P2FiberZeroProduct,
  P3GenericGraph,
  P4AffineJIso,
  P5OpenEmbeddings,
  P6ContractingCriterion,
  P7ContractingInterp,
  P8ClosureComparison,
  P9ClosedFunctoriality,
  P10LocalizationLemma,
  P11ContractiveCorollary,
  P12StructureIdentities,
  P13DeformedEquivalence,
  O1PointsetConsistency,
  O2FiberCounts,
};

const std::vector<PropertyId>& all_properties();
// "P1-fiber1-diagonal" etc.
std::string_view to_string(PropertyId id);
// Accepts the full id or its prefix before the first dash ("P1", "O2").
std::optional<PropertyId> parse_property(std::string_view text);

enum class Status { Pass, Fail, Skipped, ResourceLimit, Error };
std::string_view to_string(Status s);

struct ReportEntry {
  std::string op;
  Status status = Status::Pass;
  double elapsed_ms = 0;
  // Machine-readable details: witnesses, verdicts, counts, skip reasons.
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

struct VerificationReport {
  std::string input;
  std::vector<ReportEntry> results;
  double total_ms = 0;

  // 0 all pass or skipped, 1 any failure, 2 input error, 3 resource limit.
  int exit_code() const;
};

struct VerifyOptions {
  std::vector<std::uint32_t> primes{5, 7};
  // Point-set checks enumerate family rings with up to nine variables.
  OracleOptions oracle{100'000'000};
  InterpolationOptions family;
  std::vector<std::string> flags;
  bool parallel = true;
};

ReportEntry run_property(PropertyId id, const GradedAlgebra& a, const VerifyOptions& options);

// Runs `ids` (default: all) and assembles entries in PropertyId order.
VerificationReport run_all(const GradedAlgebra& a, const VerifyOptions& options,
                           const std::vector<PropertyId>& ids = all_properties());

// Error entry for input that failed to parse or validate; parse errors add
// line, column and the expected-token set.
ReportEntry validation_entry(const Error& err);

// Parses `text` and runs the suite with the problem's flags added to
// `options`. Invalid input yields a single "validation" entry with status error.
VerificationReport verify_problem(std::string_view text, const std::string& input_name, VerifyOptions options,
                                  const std::vector<PropertyId>& ids = all_properties());

// Every corpus entry, ops prefixed with "<entry>/".
VerificationReport verify_corpus(const VerifyOptions& options,
                                 const std::vector<PropertyId>& ids = all_properties());

}  // namespace gmloci
