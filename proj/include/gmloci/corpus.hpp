#pragma once

#include <string>
#include <vector>

#include "gmloci/dsl.hpp"
#include "gmloci/graded_algebra.hpp"

namespace gmloci {

struct CorpusEntry {
  std::string name;
  std::string text;  // problem-file source
  ProblemFile problem;

  GradedAlgebra algebra() const { return GradedAlgebra(problem.ring, problem.generators); }
};

// Built-in examples, compiled from the files under corpus/.
const std::vector<CorpusEntry>& corpus();

}  // namespace gmloci
