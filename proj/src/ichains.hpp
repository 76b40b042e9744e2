#pragma once

#include <memory>
#include <optional>

#include "perversity.hpp"

namespace stratih {

// Allowability condition for a single simplex: every face whose interior
// lies in a singular stratum S satisfies dim(face) <= d - codim(S) + p(S).
bool allowable(const StratifiedComplex& x, int d, int idx, const Perversity& p);

// Simplicial boundary with the coefficient of every simplex contained in
// X^{n-1} set to zero. Input and output in global simplex coordinates.
Vec nongm_boundary(const StratifiedComplex& x, const FieldSpec& f, int d,
                   const Vec& chain);
// The same as a matrix (d-simplices to (d-1)-simplices).
SparseMatrix nongm_boundary_matrix(const StratifiedComplex& x, const FieldSpec& f, int d);

// Homology of a tower of boundary matrices boundary[i]: C_i -> C_{i-1}
// (boundary[0] has zero rows), with explicit representatives and coordinates.
class ChainComplexHomology {
 public:
  explicit ChainComplexHomology(std::vector<SparseMatrix> boundary);

  int top_degree() const { return static_cast<int>(boundary_.size()) - 1; }
  int dim(int degree) const;
  std::vector<int> dims() const;
  const std::vector<Vec>& representatives(int degree) const { return reps_[degree]; }
  bool is_cycle(int degree, const Vec& v) const;
  // coordinates of a cycle in the representative basis
  Vec project(int degree, const Vec& cycle) const;

 private:
  std::vector<SparseMatrix> boundary_;
  std::vector<std::vector<Vec>> reps_;
  std::vector<int> image_rank_;
  std::vector<std::unique_ptr<RowEchelon>> projector_;  // of [image | reps]
};

// Basis presentation of the non-GM intersection chain complex
// I_i = { xi in span(allowable i-simplices off X^{n-1}) :
//         nongm_boundary(xi) allowable }.
class IChainComplex {
 public:
  static IChainComplex build(const StratifiedComplex& x, const Perversity& p,
                             const FieldSpec& f);

  const StratifiedComplex& space() const { return *space_; }
  const Perversity& perversity() const { return perversity_; }
  const FieldSpec& field() const { return field_; }

  int dim(int i) const;                            // dim I_i
  const std::vector<int>& admissible(int i) const { return admissible_[i]; }
  // global-coordinate columns spanning I_i
  const SparseMatrix& basis(int i) const { return basis_[i]; }
  // boundary I_i -> I_{i-1} in the computed bases
  const SparseMatrix& boundary(int i) const { return boundary_[i]; }
  const std::vector<SparseMatrix>& boundaries() const { return boundary_; }

  Vec to_global(int i, const Vec& coords) const;
  // membership test; coordinates in the I_i basis when the chain lies in I_i
  std::optional<Vec> from_global(int i, const Vec& global) const;

 private:
  const StratifiedComplex* space_;
  Perversity perversity_;
  FieldSpec field_;
  std::vector<std::vector<int>> admissible_;
  std::vector<SparseMatrix> basis_;
  std::vector<SparseMatrix> boundary_;
  std::vector<std::shared_ptr<RowEchelon>> basis_solver_;

  IChainComplex(const StratifiedComplex& x, Perversity p, FieldSpec f)
      : space_(&x), perversity_(std::move(p)), field_(f) {}
};

ChainComplexHomology homology(const IChainComplex& c);

// Homology of I(X)/I(X - closed star of the vertex), the chains supported on
// the full subcomplex away from the vertex forming the subcomplex.
ChainComplexHomology relative_homology(const IChainComplex& c, int vertex);

// Predicted intersection homology of the cone on the link: the link's
// groups strictly below degree dim(link) - apex_value, zero at and above.
std::vector<int> cone_formula_oracle(const StratifiedComplex& link,
                                     const Perversity& link_perversity,
                                     int apex_value, const FieldSpec& f);

// Stratum-correspondence helpers for spaces built by cone()/suspension():
// the link keeps its vertex indices, so its strata match by membership.
Perversity restrict_to_link(const StratifiedComplex& coned,
                            const Perversity& p,
                            const StratifiedComplex& link);
int apex_stratum(const StratifiedComplex& coned, int apex_vertex);

// Transfer of a perversity along barycentric subdivision: the stratum of a
// flag simplex is the stratum of its largest original simplex.
Perversity transfer_to_subdivision(const Subdivision& sd,
                                   const StratifiedComplex& original,
                                   const Perversity& p);

}  // namespace stratih
