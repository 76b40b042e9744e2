#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparse.hpp"

namespace stratih {

// Vertex indices in strictly increasing order.
using Simplex = std::vector<int>;

std::string simplex_str(const Simplex& s);

// A connected component of X^level - X^(level-1).
struct Stratum {
  int level = 0;
  int codim = 0;
  bool singular = false;
  std::vector<std::pair<int, int>> members;  // (dim, index), sorted
};

struct ValidationReport {
  bool valid = true;
  bool flag_like = true;
  bool closed = true;  // no free (n-1)-faces
  std::vector<std::string> problems;
  std::vector<std::string> warnings;
  std::string str() const;
};

// A finite simplicial complex with a filtration by skeleta. Immutable after
// build(); all derived data (levels, strata) computed once.
class StratifiedComplex {
 public:
  // top_simplices are closed under faces here; skeleta maps a skeleton index
  // i to generating simplices of X^i (closed under faces as well). Throws
  // std::invalid_argument on structurally malformed input; geometric
  // conditions are reported by validate() instead.
  static StratifiedComplex build(int dimension, std::vector<std::string> vertex_labels,
                                 std::vector<Simplex> top_simplices,
                                 const std::map<int, std::vector<Simplex>>& skeleta);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // optional seed for the orientation search: (top simplex, +-1)
  const std::optional<std::pair<Simplex, int>>& orientation_hint() const {
    return orientation_hint_;
  }
  void set_orientation_hint(Simplex s, int sign);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

  int simplex_count(int d) const;
  const Simplex& simplex(int d, int idx) const { return simplices_[d][idx]; }
  const std::vector<Simplex>& simplices(int d) const { return simplices_[d]; }
  // -1 when the simplex is not part of the complex
  int index_of(const Simplex& s) const;
  const std::vector<Simplex>& top_simplices() const { return top_; }

  // minimal i with the simplex contained in X^i (== dim() off the skeleta)
  int level(int d, int idx) const { return levels_[d][idx]; }
  bool in_boundary_skeleton(int d, int idx) const { return levels_[d][idx] < dim_; }

  const std::vector<Stratum>& strata() const { return strata_; }
  int stratum_of(int d, int idx) const { return stratum_of_[d][idx]; }
  std::vector<int> singular_strata() const;
  bool trivially_filtered() const;

  long euler_characteristic() const;
  bool connected() const;

  // Strict mode demands a closed pseudomanifold; with allow_boundary,
  // (n-1)-simplices with a single coface are reported but legal (cones).
  ValidationReport validate(bool allow_boundary = false) const;

  // Full simplicial boundary matrix: (d-1)-simplices by d-simplices.
  SparseMatrix boundary_matrix(int d, const FieldSpec& f) const;

 private:
  std::string name_ = "space";
  std::optional<std::pair<Simplex, int>> orientation_hint_;
  int dim_ = 0;
  std::vector<std::string> vertex_labels_;
  std::vector<std::vector<Simplex>> simplices_;     // by dimension, sorted
  std::vector<std::map<Simplex, int>> index_;       // by dimension
  std::vector<Simplex> top_;                        // the generating set, sorted
  std::vector<std::vector<int>> levels_;
  std::vector<Stratum> strata_;
  std::vector<std::vector<int>> stratum_of_;
};

// Orientation of the top-dimensional simplices relative to their canonical
// (sorted) vertex order.
struct Orientation {
  Vec signs;  // one +-1 per n-simplex
};

// Signs making the sum of all n-simplices a cycle of the coefficient-zeroed
// boundary, or nullopt when X is not orientable over f.
// Requires a valid connected complex.
std::optional<Orientation> find_fundamental_cycle(const StratifiedComplex& x,
                                                  const FieldSpec& f);

StratifiedComplex cone(const StratifiedComplex& link);
StratifiedComplex suspension(const StratifiedComplex& link);
// Staircase triangulation of |X| x |Y|; both factors must be trivially
// filtered. Throws std::invalid_argument otherwise.
StratifiedComplex product(const StratifiedComplex& x, const StratifiedComplex& y);

struct Subdivision {
  StratifiedComplex complex;
  // new vertex -> (dim, index) of the original simplex it is the barycenter of
  std::vector<std::pair<int, int>> vertex_origin;
};
Subdivision barycentric_subdivide(const StratifiedComplex& x);

}  // namespace stratih
