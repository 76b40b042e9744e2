#pragma once

#include "ichains.hpp"

namespace stratih {

// Front-face/back-face product conventions. The shipped default is the one
// convention (of the sixteen) under which, with the coboundary rule
// (d a)(x) = (-1)^{|a|+1} a(bd' x), the unit laws, the Leibniz rule, the
// augmentation identity aug(a cap x) = a(x), the associativity
// (a cup b) cap xi = a cap (b cap xi), and the cap boundary formula all hold
// exactly at chain level; a dedicated test enumerates all candidates.
struct AwSigns {
  bool cup_koszul = true;      // factor (-1)^{ij} on cup
  bool cup_alpha_front = true; // first cochain reads the front face
  bool cap_koszul = true;      // factor (-1)^{j(m-j)} on cap
  bool cap_alpha_back = true;  // cochain reads the back face, chain keeps front
};

// Chain-level products on the full simplicial (co)chains of a fixed complex,
// in global simplex coordinates per degree. Cochains intended for the
// coefficient-zeroed theory must vanish on simplices inside X^{n-1}; the
// reduce() helper projects onto that subspace.
class AwProducts {
 public:
  AwProducts(const StratifiedComplex& x, FieldSpec f);

  const StratifiedComplex& space() const { return *x_; }
  const FieldSpec& field() const { return f_; }

  Vec cup(int i, const Vec& a, int j, const Vec& b,
          const AwSigns& signs = AwSigns()) const;
  Vec cap(int j, const Vec& a, int m, const Vec& xi,
          const AwSigns& signs = AwSigns()) const;

  // coboundary dual to the coefficient-zeroed boundary
  Vec coboundary(int i, const Vec& a) const;
  Vec boundary(int m, const Vec& xi) const;  // coefficient-zeroed

  Fq evaluate(const Vec& a, const Vec& xi) const;
  // sum of coefficients of 0-simplices (those off X^{n-1} carry the chain)
  Fq aug(const Vec& zero_chain) const;
  Vec reduce(int d, const Vec& chain) const;
  Vec unit_cochain() const;  // constant 1 on vertices off X^{n-1}

 private:
  const StratifiedComplex* x_;
  FieldSpec f_;
  // face index tables: face of the simplex spanned by the first/last j+1 vertices
  std::vector<std::vector<std::vector<int>>> front_, back_;
  std::vector<SparseMatrix> nongm_bd_;
};

}  // namespace stratih
