#pragma once

#include <memory>

#include "aw.hpp"

namespace stratih {

// The dual complex Hom(I_*, F) in the dual bases, with cohomology,
// and deterministic lifts into global reduced cochains.
class ICochainComplex {
 public:
  explicit ICochainComplex(const IChainComplex& c);

  const IChainComplex& chains() const { return *c_; }
  int dim(int i) const { return c_->dim(i); }
  // (d a)(x) = (-1)^{|a|+1} a(bd' x) in the dual bases
  const SparseMatrix& coboundary(int i) const { return cob_[i]; }

  int cohomology_dim(int i) const;
  const std::vector<Vec>& cocycle_reps(int i) const { return coreps_[i]; }
  bool is_cocycle(int i, const Vec& a) const;
  Vec project(int i, const Vec& cocycle) const;  // cohomology coordinates

  // dual-coordinate cochain evaluated on a basis-coordinate chain
  Fq pair(int i, const Vec& cochain, const Vec& chain) const;

  // deterministic lift into a global cochain vanishing on X^{n-1}, off the
  // pivot support extended by zero; restrict() is its left inverse
  Vec lift(int i, const Vec& dual_coords) const;
  Vec restrict(int i, const Vec& global_cochain) const;
  // basis of the global reduced cochains annihilating I_i (lift ambiguity)
  const std::vector<Vec>& annihilator(int i) const { return annihilator_[i]; }

 private:
  const IChainComplex* c_;
  int n_;
  std::vector<SparseMatrix> cob_;
  std::unique_ptr<ChainComplexHomology> reversed_;
  std::vector<std::vector<Vec>> coreps_;
  std::vector<std::vector<int>> pivot_rows_;
  std::vector<std::unique_ptr<RowEchelon>> lift_solver_;
  std::vector<std::vector<Vec>> annihilator_;
};

// A chain-level result that must certify membership in an intersection chain
// complex before it descends to homology.
struct CapClass {
  bool ok = false;
  bool lift_independent = true;
  std::string reason;
  Vec chain;   // global reduced chain
  Vec coords;  // homology coordinates (when ok)
};

struct NuValue {
  bool ok = false;
  std::string reason;
  Fq value;
};

struct CupClass {
  bool ok = false;
  std::string reason;
  Vec cocycle;  // dual coordinates in the target block
  Vec coords;   // cohomology coordinates (when ok)
};

// Products, evaluation maps and duality on one space over one field, with
// per-perversity blocks cached by the perversity table.
class PairingEngine {
 public:
  PairingEngine(const StratifiedComplex& x, FieldSpec f);

  const StratifiedComplex& space() const { return *x_; }
  const FieldSpec& field() const { return f_; }
  const AwProducts& aw() const { return aw_; }

  bool oriented() const { return gamma_.has_value(); }
  const Vec& gamma() const;  // global fundamental cycle

  struct Block {
    IChainComplex chains;
    ChainComplexHomology hom;
    ICochainComplex coch;
    explicit Block(IChainComplex c)
        : chains(std::move(c)), hom(homology(chains)), coch(chains) {}
  };
  Block& block(const Perversity& p);

  // augmentation is an isomorphism on I^t H_0 (fails on non-normal spaces)
  bool aug_is_iso();

  // the evaluation pairing matrix [cocycle_c(cycle_h)]: the universal
  // coefficient map H^i -> Hom(H_i, F); kappa is (-1)^i times it
  SparseMatrix uct_pairing(const Perversity& p, int i);

  // (-1)^{in} (lift a) cap Gamma as a class in I^{Dp}H_{n-i} (sign optional)
  CapClass cap_with_gamma(const Perversity& p, int i, const Vec& cocycle,
                          bool sign_in);
  // full duality matrix H^i(p) -> H_{n-i}(Dp); ok only if every basis column
  // certifies
  struct DualityMatrix {
    bool ok = false;
    bool lift_independent = true;
    std::string reason;
    SparseMatrix m;
  };
  DualityMatrix duality_matrix(const Perversity& p, int i, bool sign_in);

  // nu(a)(b) = (-1)^{ij+n} aug((b cup a) cap Gamma) for complementary p, Dp
  NuValue nu(const Perversity& p, int i, const Vec& alpha_cocycle,
             const Vec& beta_cocycle);

  // class of (lift a cup lift b) restricted to the r-block
  CupClass cup_class(const Perversity& p, const Perversity& q, const Perversity& r,
                     int i, int j, const Vec& alpha_cocycle, const Vec& beta_cocycle);

  // x pf y = (a cup b) cap Gamma with a cap Gamma = x, b cap Gamma = y,
  // for x in H_{n-i}(Dp), y in H_{n-j}(Dq), landing in H_{n-i-j}(Dr)
  CapClass intersection_product(const Perversity& p, const Perversity& q,
                                const Perversity& r, int i, int j,
                                const Vec& x_coords, const Vec& y_coords);

 private:
  const StratifiedComplex* x_;
  FieldSpec f_;
  AwProducts aw_;
  std::optional<Vec> gamma_;
  std::map<std::map<int, int>, std::unique_ptr<Block>> blocks_;
  std::map<std::tuple<std::map<int, int>, int, bool>, DualityMatrix> duality_cache_;

  CapClass cap_chain_into(Block& target, int i, const Vec& global_cochain,
                          bool sign_in);
};

// Appendix-style double dual f(x)(a) = (-1)^{|a|} a(x): both sides of the
// degree-0 chain-map identity, evaluated concretely. Testing code asserts
// dd_of_boundary == dd_boundary_of for random pairs.
Fq double_dual_apply(const AwProducts& aw, int chain_degree, const Vec& chain,
                     int cochain_degree, const Vec& cochain);
Fq double_dual_of_boundary(const AwProducts& aw, int chain_degree, const Vec& chain,
                           const Vec& cochain);
Fq double_dual_boundary_of(const AwProducts& aw, int chain_degree, const Vec& chain,
                           const Vec& cochain);

}  // namespace stratih
