#include "products.hpp"

namespace stratih {

ICochainComplex::ICochainComplex(const IChainComplex& c)
    : c_(&c), n_(c.space().dim()) {
  const FieldSpec& f = c.field();
  cob_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    if (i == n_) {
      cob_[i] = SparseMatrix(0, c.dim(i), f);
    } else {
      cob_[i] = c.boundary(i + 1).transpose();
      if (i % 2 != 0) cob_[i] = cob_[i].scaled(-Fq::one(f));  // (-1)^{i+1}
    }
  }
  // cohomology through the reversed tower E_k = C^{n-k}
  std::vector<SparseMatrix> tower(n_ + 1);
  for (int k = 0; k <= n_; ++k) tower[k] = cob_[n_ - k];
  reversed_ = std::make_unique<ChainComplexHomology>(tower);
  coreps_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) coreps_[i] = reversed_->representatives(n_ - i);

  pivot_rows_.resize(n_ + 1);
  lift_solver_.resize(n_ + 1);
  annihilator_.resize(n_ + 1);
  const StratifiedComplex& x = c.space();
  for (int i = 0; i <= n_; ++i) {
    const SparseMatrix& b = c.basis(i);
    pivot_rows_[i] = column_space_basis(b.transpose());
    lift_solver_[i] = std::make_unique<RowEchelon>(
        b.select_rows(pivot_rows_[i]).transpose());

    std::vector<int> reduced_rows;
    for (int r = 0; r < x.simplex_count(i); ++r)
      if (!x.in_boundary_skeleton(i, r)) reduced_rows.push_back(r);
    auto ker = kernel_basis(b.select_rows(reduced_rows).transpose());
    for (const auto& k : ker) {
      Vec g = zero_vec(c.field(), x.simplex_count(i));
      for (std::size_t t = 0; t < reduced_rows.size(); ++t) g[reduced_rows[t]] = k[t];
      annihilator_[i].push_back(std::move(g));
    }
  }
}

int ICochainComplex::cohomology_dim(int i) const {
  if (i < 0 || i > n_) return 0;
  return reversed_->dim(n_ - i);
}

bool ICochainComplex::is_cocycle(int i, const Vec& a) const {
  return is_zero_vec(cob_[i].apply(a));
}

Vec ICochainComplex::project(int i, const Vec& cocycle) const {
  return reversed_->project(n_ - i, cocycle);
}

Fq ICochainComplex::pair(int i, const Vec& cochain, const Vec& chain) const {
  if (cochain.size() != chain.size())
    throw std::invalid_argument("pair: dimension mismatch in degree " +
                                std::to_string(i));
  Fq acc = Fq::zero(c_->field());
  for (std::size_t k = 0; k < chain.size(); ++k) acc += cochain[k] * chain[k];
  return acc;
}

Vec ICochainComplex::lift(int i, const Vec& dual_coords) const {
  auto sol = lift_solver_[i]->solve(dual_coords);
  if (!sol) throw std::logic_error("cochain lift failed");
  Vec g = zero_vec(c_->field(), c_->space().simplex_count(i));
  for (std::size_t k = 0; k < pivot_rows_[i].size(); ++k) g[pivot_rows_[i][k]] = (*sol)[k];
  return g;
}

Vec ICochainComplex::restrict(int i, const Vec& global_cochain) const {
  return c_->basis(i).apply_transpose(global_cochain);
}

PairingEngine::PairingEngine(const StratifiedComplex& x, FieldSpec f)
    : x_(&x), f_(f), aw_(x, f) {
  try {
    auto ori = find_fundamental_cycle(x, f);
    if (ori) {
      Vec g = zero_vec(f, x.simplex_count(x.dim()));
      for (int i = 0; i < x.simplex_count(x.dim()); ++i) g[i] = ori->signs[i];
      gamma_ = std::move(g);
    }
  } catch (const std::invalid_argument&) {
    // disconnected input: no fundamental class
  }
}

const Vec& PairingEngine::gamma() const {
  if (!gamma_) throw std::logic_error("space is not oriented over this field");
  return *gamma_;
}

PairingEngine::Block& PairingEngine::block(const Perversity& p) {
  auto it = blocks_.find(p.values());
  if (it != blocks_.end()) return *it->second;
  auto blk = std::make_unique<Block>(IChainComplex::build(*x_, p, f_));
  auto [pos, inserted] = blocks_.emplace(p.values(), std::move(blk));
  (void)inserted;
  return *pos->second;
}

bool PairingEngine::aug_is_iso() {
  auto& top = block(Perversity::top(*x_));
  if (top.hom.dim(0) != 1) return false;
  Vec rep = top.chains.to_global(0, top.hom.representatives(0)[0]);
  return !aw_.aug(rep).is_zero();
}

SparseMatrix PairingEngine::uct_pairing(const Perversity& p, int i) {
  Block& b = block(p);
  int rows = b.coch.cohomology_dim(i);
  int cols = b.hom.dim(i);
  SparseMatrix m(rows, cols, f_);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.set(r, c, b.coch.pair(i, b.coch.cocycle_reps(i)[r], b.hom.representatives(i)[c]));
  return m;
}

CapClass PairingEngine::cap_chain_into(Block& target, int i,
                                       const Vec& global_cochain, bool sign_in) {
  int n = x_->dim();
  CapClass out;
  Vec chain = aw_.reduce(n - i, aw_.cap(i, global_cochain, n, gamma()));
  if (sign_in && (i % 2) && (n % 2))
    for (auto& v : chain) v = -v;
  out.chain = chain;
  auto coords = target.chains.from_global(n - i, chain);
  if (!coords) {
    out.reason = "capped chain is not allowable for the target perversity";
    return out;
  }
  if (!target.hom.is_cycle(n - i, *coords)) {
    out.reason = "capped chain is not a cycle of the coefficient-zeroed boundary";
    return out;
  }
  out.coords = target.hom.project(n - i, *coords);
  out.ok = true;
  return out;
}

CapClass PairingEngine::cap_with_gamma(const Perversity& p, int i, const Vec& cocycle,
                                       bool sign_in) {
  Block& source = block(p);
  Block& target = block(p.dual());
  Vec lifted = source.coch.lift(i, cocycle);
  CapClass main = cap_chain_into(target, i, lifted, sign_in);
  if (!main.ok) return main;
  for (const auto& eta : source.coch.annihilator(i)) {
    CapClass pert = cap_chain_into(target, i, eta, false);
    if (!pert.ok || !is_zero_vec(pert.coords)) {
      main.lift_independent = false;
      main.ok = false;
      main.reason = "cap with the fundamental class depends on the cochain lift";
      return main;
    }
  }
  return main;
}

PairingEngine::DualityMatrix PairingEngine::duality_matrix(const Perversity& p, int i,
                                                           bool sign_in) {
  auto key = std::make_tuple(p.values(), i, sign_in);
  auto hit = duality_cache_.find(key);
  if (hit != duality_cache_.end()) return hit->second;
  Block& source = block(p);
  Block& target = block(p.dual());
  int n = x_->dim();
  DualityMatrix out;
  out.m = SparseMatrix(target.hom.dim(n - i), source.coch.cohomology_dim(i), f_);
  out.ok = true;
  for (int c = 0; c < source.coch.cohomology_dim(i); ++c) {
    CapClass col = cap_with_gamma(p, i, source.coch.cocycle_reps(i)[c], sign_in);
    out.lift_independent = out.lift_independent && col.lift_independent;
    if (!col.ok) {
      out.ok = false;
      out.reason = col.reason;
      duality_cache_.emplace(key, out);
      return out;
    }
    for (int r = 0; r < out.m.rows(); ++r) out.m.set(r, c, col.coords[r]);
  }
  duality_cache_.emplace(key, out);
  return out;
}

NuValue PairingEngine::nu(const Perversity& p, int i, const Vec& alpha_cocycle,
                          const Vec& beta_cocycle) {
  NuValue out;
  int n = x_->dim();
  int j = n - i;
  Block& pb = block(p);
  Block& qb = block(p.dual());
  Vec alpha = pb.coch.lift(i, alpha_cocycle);
  Vec beta = qb.coch.lift(j, beta_cocycle);

  auto value_of = [&](const Vec& a, const Vec& b) {
    Vec cup = aw_.cup(j, b, i, a);  // (beta cup alpha), degree n
    Vec capped = aw_.cap(n, cup, n, gamma());
    Fq v = aw_.aug(capped);
    if ((i * j + n) % 2 != 0) v = -v;
    return v;
  };
  out.value = value_of(alpha, beta);
  out.ok = true;
  if (!aug_is_iso()) {
    out.ok = false;
    out.reason = "augmentation is not an isomorphism on I^t H_0 "
                 "(non-normal or disconnected regular part); value informational";
  }
  for (const auto& eta : pb.coch.annihilator(i))
    if (out.ok && value_of(eta, beta) != Fq::zero(f_)) {
      out.ok = false;
      out.reason = "pairing ill-defined for these lifts";
    }
  for (const auto& eta : qb.coch.annihilator(j))
    if (out.ok && value_of(alpha, eta) != Fq::zero(f_)) {
      out.ok = false;
      out.reason = "pairing ill-defined for these lifts";
    }
  return out;
}

CupClass PairingEngine::cup_class(const Perversity& p, const Perversity& q,
                                  const Perversity& r, int i, int j,
                                  const Vec& alpha_cocycle, const Vec& beta_cocycle) {
  CupClass out;
  if (!cup_compatible(p, q, r)) {
    out.reason = "perversities do not satisfy D(r) >= D(p) + D(q)";
    return out;
  }
  Block& pb = block(p);
  Block& qb = block(q);
  Block& rb = block(r);
  Vec alpha = pb.coch.lift(i, alpha_cocycle);
  Vec beta = qb.coch.lift(j, beta_cocycle);
  Vec full = aw_.cup(i, alpha, j, beta);
  Vec restricted = rb.coch.restrict(i + j, full);
  if (!rb.coch.is_cocycle(i + j, restricted)) {
    out.reason = "cup product does not restrict to a cocycle";
    return out;
  }
  auto check_zero_class = [&](const Vec& a, int da, const Vec& b, int db) {
    Vec c = rb.coch.restrict(da + db, aw_.cup(da, a, db, b));
    return rb.coch.is_cocycle(da + db, c) && is_zero_vec(rb.coch.project(da + db, c));
  };
  for (const auto& eta : pb.coch.annihilator(i))
    if (!check_zero_class(eta, i, beta, j)) {
      out.reason = "cup class depends on the first cochain lift";
      return out;
    }
  for (const auto& eta : qb.coch.annihilator(j))
    if (!check_zero_class(alpha, i, eta, j)) {
      out.reason = "cup class depends on the second cochain lift";
      return out;
    }
  out.cocycle = restricted;
  out.coords = rb.coch.project(i + j, restricted);
  out.ok = true;
  return out;
}

CapClass PairingEngine::intersection_product(const Perversity& p, const Perversity& q,
                                             const Perversity& r, int i, int j,
                                             const Vec& x_coords, const Vec& y_coords) {
  CapClass out;
  if (!cup_compatible(p, q, r)) {
    out.reason = "perversities do not satisfy D(r) >= D(p) + D(q)";
    return out;
  }
  auto up = duality_matrix(p, i, /*sign_in=*/false);
  auto uq = duality_matrix(q, j, /*sign_in=*/false);
  if (!up.ok || !uq.ok) {
    out.reason = up.ok ? uq.reason : up.reason;
    return out;
  }
  auto alpha_h = solve(up.m, x_coords);
  auto beta_h = solve(uq.m, y_coords);
  if (!alpha_h || !beta_h) {
    out.reason = "class is not in the image of the duality map";
    return out;
  }
  Block& pb = block(p);
  Block& qb = block(q);
  auto combine = [&](Block& blk, int deg, const Vec& coords) {
    Vec c = zero_vec(f_, blk.coch.dim(deg));
    for (std::size_t k = 0; k < coords.size(); ++k)
      c = add(c, scale(coords[k], blk.coch.cocycle_reps(deg)[k]));
    return c;
  };
  Vec alpha = pb.coch.lift(i, combine(pb, i, *alpha_h));
  Vec beta = qb.coch.lift(j, combine(qb, j, *beta_h));
  Block& target = block(r.dual());
  CapClass main = cap_chain_into(target, i + j, aw_.cup(i, alpha, j, beta),
                                 /*sign_in=*/false);
  if (!main.ok) return main;
  for (const auto& eta : pb.coch.annihilator(i)) {
    CapClass pert =
        cap_chain_into(target, i + j, aw_.cup(i, eta, j, beta), false);
    if (!pert.ok || !is_zero_vec(pert.coords)) {
      main.ok = false;
      main.lift_independent = false;
      main.reason = "intersection product depends on the first lift";
      return main;
    }
  }
  for (const auto& eta : qb.coch.annihilator(j)) {
    CapClass pert =
        cap_chain_into(target, i + j, aw_.cup(i, alpha, j, eta), false);
    if (!pert.ok || !is_zero_vec(pert.coords)) {
      main.ok = false;
      main.lift_independent = false;
      main.reason = "intersection product depends on the second lift";
      return main;
    }
  }
  return main;
}

Fq double_dual_apply(const AwProducts& aw, int chain_degree, const Vec& chain,
                     int cochain_degree, const Vec& cochain) {
  if (cochain_degree != chain_degree) return Fq::zero(aw.field());
  Fq v = aw.evaluate(cochain, chain);
  return cochain_degree % 2 == 0 ? v : -v;
}

Fq double_dual_of_boundary(const AwProducts& aw, int chain_degree, const Vec& chain,
                           const Vec& cochain) {
  // f(bd x)(a) = (-1)^{|a|} a(bd x) with |a| = chain_degree - 1
  Fq v = aw.evaluate(cochain, aw.boundary(chain_degree, chain));
  return (chain_degree - 1) % 2 == 0 ? v : -v;
}

Fq double_dual_boundary_of(const AwProducts& aw, int chain_degree, const Vec& chain,
                           const Vec& cochain) {
  // (d f(x))(a) = (-1)^{|f(x)|+1} f(x)(d a) = -(d a)(x)
  return -aw.evaluate(aw.coboundary(chain_degree - 1, cochain), chain);
}

}  // namespace stratih
