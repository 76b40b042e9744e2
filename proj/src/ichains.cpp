#include "ichains.hpp"

#include <algorithm>

namespace stratih {

bool allowable(const StratifiedComplex& x, int d, int idx, const Perversity& p) {
  const Simplex& s = x.simplex(d, idx);
  int k = static_cast<int>(s.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Simplex f;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    int fd = static_cast<int>(f.size()) - 1;
    int sid = x.stratum_of(fd, x.index_of(f));
    const Stratum& st = x.strata()[sid];
    if (!st.singular) continue;
    if (fd > d - st.codim + p(sid)) return false;
  }
  return true;
}

Vec nongm_boundary(const StratifiedComplex& x, const FieldSpec& f, int d,
                   const Vec& chain) {
  if (d < 1) return Vec();
  Vec out = x.boundary_matrix(d, f).apply(chain);
  for (int i = 0; i < x.simplex_count(d - 1); ++i)
    if (x.in_boundary_skeleton(d - 1, i)) out[i] = Fq::zero(f);
  return out;
}

SparseMatrix nongm_boundary_matrix(const StratifiedComplex& x, const FieldSpec& f,
                                   int d) {
  SparseMatrix m = x.boundary_matrix(d, f);
  if (d < 1) return m;
  SparseMatrix out(m.rows(), m.cols(), f);
  for (int r = 0; r < m.rows(); ++r) {
    if (x.in_boundary_skeleton(d - 1, r)) continue;
    for (const auto& [c, v] : m.row(r)) out.set(r, c, v);
  }
  return out;
}

ChainComplexHomology::ChainComplexHomology(std::vector<SparseMatrix> boundary)
    : boundary_(std::move(boundary)) {
  int n = top_degree();
  if (n < 0) throw std::invalid_argument("empty chain complex");
  FieldSpec f = boundary_[0].field();
  reps_.resize(n + 1);
  image_rank_.assign(n + 1, 0);
  projector_.resize(n + 1);

  for (int i = 0; i <= n; ++i) {
    int dim_ci = boundary_[i].cols();
    std::vector<Vec> cycles = kernel_basis(boundary_[i]);
    std::vector<Vec> image;
    if (i < n) {
      RowEchelon re(boundary_[i + 1]);
      for (int c : re.pivot_cols()) image.push_back(boundary_[i + 1].column(c));
    }
    image_rank_[i] = static_cast<int>(image.size());

    // select cycle representatives extending the image basis
    std::vector<Vec> candidates = image;
    candidates.insert(candidates.end(), cycles.begin(), cycles.end());
    SparseMatrix all = SparseMatrix::from_columns(dim_ci, candidates, f);
    RowEchelon re_all(all);
    for (int c : re_all.pivot_cols())
      if (c >= image_rank_[i]) reps_[i].push_back(candidates[c]);

    std::vector<Vec> proj_cols = image;
    proj_cols.insert(proj_cols.end(), reps_[i].begin(), reps_[i].end());
    projector_[i] = std::make_unique<RowEchelon>(
        SparseMatrix::from_columns(dim_ci, proj_cols, f));
  }
}

int ChainComplexHomology::dim(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return static_cast<int>(reps_[degree].size());
}

std::vector<int> ChainComplexHomology::dims() const {
  std::vector<int> out;
  for (int i = 0; i <= top_degree(); ++i) out.push_back(dim(i));
  return out;
}

bool ChainComplexHomology::is_cycle(int degree, const Vec& v) const {
  return is_zero_vec(boundary_[degree].apply(v));
}

Vec ChainComplexHomology::project(int degree, const Vec& cycle) const {
  if (!is_cycle(degree, cycle))
    throw std::invalid_argument("projecting a non-cycle to homology");
  auto sol = projector_[degree]->solve(cycle);
  if (!sol) throw std::logic_error("cycle outside the cycle space");
  Vec out(sol->begin() + image_rank_[degree], sol->end());
  return out;
}

IChainComplex IChainComplex::build(const StratifiedComplex& x, const Perversity& p,
                                   const FieldSpec& f) {
  IChainComplex c(x, p, f);
  int n = x.dim();
  c.admissible_.resize(n + 1);
  c.basis_.resize(n + 1);
  c.boundary_.resize(n + 1);
  c.basis_solver_.resize(n + 1);

  std::vector<std::vector<bool>> is_admissible(n + 1);
  for (int i = 0; i <= n; ++i) {
    is_admissible[i].assign(x.simplex_count(i), false);
    for (int idx = 0; idx < x.simplex_count(i); ++idx) {
      if (x.in_boundary_skeleton(i, idx)) continue;
      if (!allowable(x, i, idx, p)) continue;
      is_admissible[i][idx] = true;
      c.admissible_[i].push_back(idx);
    }
  }

  for (int i = 0; i <= n; ++i) {
    SparseMatrix bd = nongm_boundary_matrix(x, f, i);
    // rows: reduced (i-1)-simplices that are NOT allowable; a chain is in I_i
    // iff its boundary vanishes on those rows
    std::vector<int> bad_rows;
    if (i >= 1)
      for (int r = 0; r < x.simplex_count(i - 1); ++r)
        if (!x.in_boundary_skeleton(i - 1, r) && !is_admissible[i - 1][r])
          bad_rows.push_back(r);

    int na = static_cast<int>(c.admissible_[i].size());
    std::vector<int> adm_pos(x.simplex_count(i), -1);
    for (int col = 0; col < na; ++col) adm_pos[c.admissible_[i][col]] = col;
    SparseMatrix bad = bd.select_rows(bad_rows);
    SparseMatrix cond(static_cast<int>(bad_rows.size()), na, f);
    for (int rr = 0; rr < static_cast<int>(bad_rows.size()); ++rr)
      for (const auto& [gc, v] : bad.row(rr))
        if (adm_pos[gc] >= 0) cond.set(rr, adm_pos[gc], v);
    std::vector<Vec> ker = kernel_basis(cond);
    // columns in global simplex coordinates
    std::vector<Vec> cols;
    for (const auto& k : ker) {
      Vec g = zero_vec(f, x.simplex_count(i));
      for (int col = 0; col < na; ++col) g[c.admissible_[i][col]] = k[col];
      cols.push_back(std::move(g));
    }
    c.basis_[i] = SparseMatrix::from_columns(x.simplex_count(i), cols, f);
    c.basis_solver_[i] = std::make_shared<RowEchelon>(c.basis_[i]);
  }

  for (int i = 0; i <= n; ++i) {
    int rows_dim = i >= 1 ? c.basis_[i - 1].cols() : 0;
    SparseMatrix d(rows_dim, c.basis_[i].cols(), f);
    if (i >= 1) {
      SparseMatrix db = nongm_boundary_matrix(x, f, i).multiply(c.basis_[i]);
      for (int col = 0; col < c.basis_[i].cols(); ++col) {
        auto coords = c.basis_solver_[i - 1]->solve(db.column(col));
        if (!coords)
          throw std::logic_error("intersection chain boundary left the subcomplex");
        for (int r = 0; r < rows_dim; ++r) d.set(r, col, (*coords)[r]);
      }
    }
    c.boundary_[i] = std::move(d);
  }
  return c;
}

int IChainComplex::dim(int i) const {
  if (i < 0 || i > space_->dim()) return 0;
  return basis_[i].cols();
}

Vec IChainComplex::to_global(int i, const Vec& coords) const {
  return basis_[i].apply(coords);
}

std::optional<Vec> IChainComplex::from_global(int i, const Vec& global) const {
  if (i < 0 || i > space_->dim()) return std::nullopt;
  return basis_solver_[i]->solve(global);
}

ChainComplexHomology homology(const IChainComplex& c) {
  return ChainComplexHomology(c.boundaries());
}

ChainComplexHomology relative_homology(const IChainComplex& c, int vertex) {
  const StratifiedComplex& x = c.space();
  const FieldSpec& f = c.field();
  int n = x.dim();
  if (vertex < 0 || vertex >= x.vertex_count())
    throw std::invalid_argument("relative_homology: bad vertex");

  // vertices of the closed star of the vertex
  std::vector<bool> in_star(x.vertex_count(), false);
  in_star[vertex] = true;
  for (int d = 1; d <= n; ++d)
    for (const auto& s : x.simplices(d))
      if (std::find(s.begin(), s.end(), vertex) != s.end())
        for (int v : s) in_star[v] = true;
  auto outside = [&](const Simplex& s) {
    return std::all_of(s.begin(), s.end(), [&](int v) { return !in_star[v]; });
  };

  // per degree: quotient coordinates = I_i basis coords modulo the subspace
  // supported on the full subcomplex away from the star
  std::vector<std::vector<int>> quot_idx(n + 1);      // selected basis coords
  std::vector<std::unique_ptr<RowEchelon>> split(n + 1);
  std::vector<int> sub_rank(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    int dim_i = c.dim(i);
    // subspace: kernel of the rows on simplices meeting the star
    std::vector<int> star_rows;
    for (int r = 0; r < x.simplex_count(i); ++r)
      if (!outside(x.simplex(i, r))) star_rows.push_back(r);
    std::vector<Vec> sub = kernel_basis(c.basis(i).select_rows(star_rows));
    sub_rank[i] = static_cast<int>(sub.size());

    std::vector<Vec> cols = sub;
    for (int e = 0; e < dim_i; ++e) {
      Vec unit = zero_vec(f, dim_i);
      unit[e] = Fq::one(f);
      cols.push_back(std::move(unit));
    }
    SparseMatrix m = SparseMatrix::from_columns(dim_i, cols, f);
    auto re = std::make_unique<RowEchelon>(m);
    for (int piv : re->pivot_cols())
      if (piv >= sub_rank[i]) quot_idx[i].push_back(piv - sub_rank[i]);
    split[i] = std::move(re);
  }

  auto project_quotient = [&](int i, const Vec& coords) {
    auto sol = split[i]->solve(coords);
    if (!sol) throw std::logic_error("quotient projection failed");
    Vec out = zero_vec(f, static_cast<int>(quot_idx[i].size()));
    for (int k = 0; k < static_cast<int>(quot_idx[i].size()); ++k)
      out[k] = (*sol)[sub_rank[i] + quot_idx[i][k]];
    return out;
  };

  std::vector<SparseMatrix> tower(n + 1);
  for (int i = 0; i <= n; ++i) {
    int rows_dim = i >= 1 ? static_cast<int>(quot_idx[i - 1].size()) : 0;
    SparseMatrix d(rows_dim, static_cast<int>(quot_idx[i].size()), f);
    for (int col = 0; i >= 1 && col < static_cast<int>(quot_idx[i].size()); ++col) {
      Vec e = zero_vec(f, c.dim(i));
      e[quot_idx[i][col]] = Fq::one(f);
      Vec db = c.boundary(i).apply(e);
      Vec q = project_quotient(i - 1, db);
      for (int r = 0; r < rows_dim; ++r) d.set(r, col, q[r]);
    }
    tower[i] = std::move(d);
  }
  return ChainComplexHomology(std::move(tower));
}

std::vector<int> cone_formula_oracle(const StratifiedComplex& link,
                                     const Perversity& link_perversity,
                                     int apex_value, const FieldSpec& f) {
  int n = link.dim() + 1;
  auto h = homology(IChainComplex::build(link, link_perversity, f));
  std::vector<int> out(n + 1, 0);
  int cutoff = n - 1 - apex_value;
  for (int i = 0; i <= n; ++i)
    if (i < cutoff) out[i] = h.dim(i);
  return out;
}

int apex_stratum(const StratifiedComplex& coned, int apex_vertex) {
  Simplex v = {apex_vertex};
  int idx = coned.index_of(v);
  if (idx < 0) throw std::invalid_argument("apex vertex not in complex");
  return coned.stratum_of(0, idx);
}

Perversity restrict_to_link(const StratifiedComplex& coned, const Perversity& p,
                            const StratifiedComplex& link) {
  std::map<int, int> values;
  for (int sid : link.singular_strata()) {
    auto [d, i] = link.strata()[sid].members.front();
    const Simplex& s = link.simplex(d, i);
    int ci = coned.index_of(s);
    if (ci < 0) throw std::invalid_argument("link simplex missing from cone");
    values[sid] = p(coned.stratum_of(d, ci));
  }
  return Perversity(link, std::move(values));
}

Perversity transfer_to_subdivision(const Subdivision& sd,
                                   const StratifiedComplex& original,
                                   const Perversity& p) {
  std::map<int, int> values;
  for (int sid : sd.complex.singular_strata()) {
    auto [d, i] = sd.complex.strata()[sid].members.front();
    const Simplex& flag = sd.complex.simplex(d, i);
    // largest original simplex among the flag's barycenter vertices
    std::pair<int, int> best{-1, -1};
    for (int v : flag) {
      auto orig = sd.vertex_origin[v];
      if (orig.first > best.first) best = orig;
    }
    int osid = original.stratum_of(best.first, best.second);
    if (!original.strata()[osid].singular)
      throw std::logic_error("subdivision stratum transfer hit a regular stratum");
    values[sid] = p(osid);
  }
  return Perversity(sd.complex, std::move(values), p.label());
}

}  // namespace stratih
