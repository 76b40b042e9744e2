#pragma once

#include <cstdint>

#include "corpus.hpp"
#include "products.hpp"

namespace stratih::diagrams {

enum class Status { kExact, kUpToSign, kDefect, kSkipped };
std::string status_str(Status s);

struct Row {
  std::string key;
  Status status = Status::kSkipped;
  std::string detail;
};

struct DiagramReport {
  std::string space;
  std::string field;
  std::string diagram;
  std::string perversities;
  std::vector<Row> rows;

  bool pass() const;  // true when no row is a defect witness
  std::string sort_key() const;
  std::string tsv() const;
};

// dim I_p H^i = dim I^p H_i = dim I^{Dp} H_{n-i} for all i
DiagramReport check_duality_ranks(PairingEngine& eng, const Perversity& p);

// nu(a)(b) = kappa((-1)^{in} a cap Gamma)(b) for all basis pairs, all i
DiagramReport check_triangle_identity(PairingEngine& eng, const Perversity& p);

// duality(a cup b) against the duality-transported intersection product;
// the observed per-bidegree sign must be constant and match the transfer
// prediction (+1 for the Dold-style transport behind the signed duality maps),
// and the transported product must show the degree-(-n) commutation defect
DiagramReport check_cube_backface(PairingEngine& eng, const Perversity& p,
                                  const Perversity& q, const Perversity& r);

// homology of the cone against the truncation oracle over apex values
DiagramReport check_cone_formula(const StratifiedComplex& link,
                                 const std::vector<int>& apex_values,
                                 const FieldSpec& f);

// intersection homology dimensions before/after one barycentric subdivision
DiagramReport check_subdivision_stability(const StratifiedComplex& x,
                                          const Perversity& p, const FieldSpec& f);

// all four GM perversities, their duals, and two seeded random general
// perversities with their duals; deduplicated, deterministic order
std::vector<Perversity> perversity_grid(const StratifiedComplex& x,
                                        std::uint64_t seed);

struct RunOptions {
  std::uint64_t seed = 0;
  int threads = 0;        // 0: hardware concurrency
  bool with_products = true;
  bool with_subdivision = true;
};

// every check over the whole corpus; jobs run on a small work queue and the
// reports are merged in deterministic order
std::vector<DiagramReport> run_corpus_checks(const RunOptions& options);

std::string reports_tsv(const std::vector<DiagramReport>& reports);

}  // namespace stratih::diagrams
