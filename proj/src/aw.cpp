#include "aw.hpp"

namespace stratih {

AwProducts::AwProducts(const StratifiedComplex& x, FieldSpec f) : x_(&x), f_(f) {
  int n = x.dim();
  front_.resize(n + 1);
  back_.resize(n + 1);
  for (int d = 0; d <= n; ++d) {
    front_[d].resize(d + 1);
    back_[d].resize(d + 1);
    for (int j = 0; j <= d; ++j) {
      front_[d][j].resize(x.simplex_count(d));
      back_[d][j].resize(x.simplex_count(d));
      for (int idx = 0; idx < x.simplex_count(d); ++idx) {
        const Simplex& s = x.simplex(d, idx);
        Simplex fr(s.begin(), s.begin() + j + 1);
        Simplex bk(s.end() - (j + 1), s.end());
        front_[d][j][idx] = x.index_of(fr);
        back_[d][j][idx] = x.index_of(bk);
      }
    }
  }
  nongm_bd_.resize(n + 1);
  for (int d = 0; d <= n; ++d) nongm_bd_[d] = nongm_boundary_matrix(x, f, d);
}

Vec AwProducts::cup(int i, const Vec& a, int j, const Vec& b, const AwSigns& signs) const {
  int d = i + j;
  if (d > x_->dim()) return Vec();
  Vec out = zero_vec(f_, x_->simplex_count(d));
  bool negate = signs.cup_koszul && (i % 2) && (j % 2);
  for (int idx = 0; idx < x_->simplex_count(d); ++idx) {
    int a_face = signs.cup_alpha_front ? front_[d][i][idx] : back_[d][i][idx];
    int b_face = signs.cup_alpha_front ? back_[d][j][idx] : front_[d][j][idx];
    Fq v = a[a_face] * b[b_face];
    if (v.is_zero()) continue;
    out[idx] = negate ? -v : v;
  }
  return out;
}

Vec AwProducts::cap(int j, const Vec& a, int m, const Vec& xi, const AwSigns& signs) const {
  if (j > m) throw std::invalid_argument("cap: cochain degree exceeds chain degree");
  int r = m - j;
  Vec out = zero_vec(f_, x_->simplex_count(r));
  bool negate = signs.cap_koszul && (j % 2) && (r % 2);
  for (int idx = 0; idx < x_->simplex_count(m); ++idx) {
    if (xi[idx].is_zero()) continue;
    int a_face = signs.cap_alpha_back ? back_[m][j][idx] : front_[m][j][idx];
    int keep = signs.cap_alpha_back ? front_[m][r][idx] : back_[m][r][idx];
    Fq v = a[a_face] * xi[idx];
    if (v.is_zero()) continue;
    out[keep] += negate ? -v : v;
  }
  return out;
}

Vec AwProducts::coboundary(int i, const Vec& a) const {
  if (i + 1 > x_->dim()) return Vec();
  Vec out = nongm_bd_[i + 1].apply_transpose(a);
  if (i % 2 == 0)  // (-1)^{i+1}
    for (auto& v : out) v = -v;
  return out;
}

Vec AwProducts::boundary(int m, const Vec& xi) const {
  if (m < 1) return Vec();
  return nongm_bd_[m].apply(xi);
}

Fq AwProducts::evaluate(const Vec& a, const Vec& xi) const {
  if (a.size() != xi.size()) throw std::invalid_argument("evaluate: degree mismatch");
  Fq acc = Fq::zero(f_);
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * xi[k];
  return acc;
}

Fq AwProducts::aug(const Vec& zero_chain) const {
  Fq acc = Fq::zero(f_);
  for (int idx = 0; idx < x_->simplex_count(0); ++idx) {
    if (x_->in_boundary_skeleton(0, idx)) continue;
    acc += zero_chain[idx];
  }
  return acc;
}

Vec AwProducts::reduce(int d, const Vec& chain) const {
  Vec out = chain;
  for (int idx = 0; idx < x_->simplex_count(d); ++idx)
    if (x_->in_boundary_skeleton(d, idx)) out[idx] = Fq::zero(f_);
  return out;
}

Vec AwProducts::unit_cochain() const {
  Vec out = zero_vec(f_, x_->simplex_count(0));
  for (int idx = 0; idx < x_->simplex_count(0); ++idx)
    if (!x_->in_boundary_skeleton(0, idx)) out[idx] = Fq::one(f_);
  return out;
}

}  // namespace stratih
