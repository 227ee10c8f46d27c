#pragma once

#include <string>

#include "gmloci/verify.hpp"

namespace gmloci {

enum class Format { Text, Json };

struct RenderOptions {
  Format format = Format::Text;
  // Off for byte-stable output (golden files, determinism checks).
  bool timings = true;
};

// Text: one status line per entry, indented details, and a summary line.
// Json: {"input", "results": [{"op", "status", "detail"}], "timings_ms"} on a
// single line; "input" is omitted when empty and "timings_ms" when timings are off.
std::string render(const VerificationReport& report, const RenderOptions& options = {});

nlohmann::ordered_json to_json(const VerificationReport& report, bool timings);

}  // namespace gmloci
