#include "gmloci/corpus.hpp"

#include "corpus_data.inc"

namespace gmloci {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& [name, text] : kCorpusSources) {
      out.push_back(CorpusEntry{name, text, parse_problem(text)});
    }
    return out;
  }();
  return entries;
}

}  // namespace gmloci
