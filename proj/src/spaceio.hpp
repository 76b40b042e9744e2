#pragma once

#include <optional>
#include <string>

#include "diagrams.hpp"

namespace stratih::io {

// Space files: JSON with "name", "dimension", "vertices" (labels),
// "top_simplices" (vertex label lists; faces generated by closure),
// "skeleta" (skeleton index -> generating simplices), optional
// "orientation_hint" ({"simplex": [...], "sign": +-1}).
// Throws std::invalid_argument with a pointer to the offending entry.
StratifiedComplex space_from_json(const std::string& text);
StratifiedComplex space_from_file(const std::string& path);
// Canonical form: emit(parse(emit(parse(f)))) == emit(parse(f)).
std::string space_to_json(const StratifiedComplex& x);

struct RunConfig {
  FieldSpec field = FieldSpec::rationals();
  std::string perversity = "zero";  // name | "grid" | inline {"stratum": value}
  std::vector<int> degrees;         // empty: all
  int subdiv_limit = 2;
  std::string format = "tsv";  // tsv | json
  std::uint64_t seed = 0;
  int trials = 1000;  // signcalc battery size
};
RunConfig config_from_json(const std::string& text);

Perversity parse_perversity(const StratifiedComplex& x, const std::string& spec);
// expands "grid" to the corpus grid; otherwise a single entry
std::vector<Perversity> perversity_list(const StratifiedComplex& x,
                                        const std::string& spec, std::uint64_t seed);

std::string reports_json(const std::vector<diagrams::DiagramReport>& reports);

}  // namespace stratih::io
