#include "simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace stratih {

std::string simplex_str(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  os << (valid ? "valid" : "invalid");
  for (const auto& p : problems) os << "\nproblem: " << p;
  for (const auto& w : warnings) os << "\nwarning: " << w;
  return os.str();
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_simplex(const Simplex& s, int vertex_count) {
  if (s.empty()) throw std::invalid_argument("empty simplex");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= vertex_count)
      throw std::invalid_argument("vertex index out of range in " + simplex_str(s));
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("simplex vertices not strictly increasing: " + simplex_str(s));
  }
}

// all nonempty proper and improper faces
std::vector<Simplex> all_faces(const Simplex& s) {
  std::vector<Simplex> out;
  int k = static_cast<int>(s.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Simplex f;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

StratifiedComplex StratifiedComplex::build(int dimension,
                                           std::vector<std::string> vertex_labels,
                                           std::vector<Simplex> top_simplices,
                                           const std::map<int, std::vector<Simplex>>& skeleta) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  StratifiedComplex x;
  x.dim_ = dimension;
  x.vertex_labels_ = std::move(vertex_labels);

  for (auto& s : top_simplices) check_simplex(s, x.vertex_count());
  std::sort(top_simplices.begin(), top_simplices.end());
  top_simplices.erase(std::unique(top_simplices.begin(), top_simplices.end()),
                      top_simplices.end());
  x.top_ = top_simplices;

  // closure under faces
  std::vector<std::set<Simplex>> by_dim(dimension + 1);
  for (const auto& t : top_simplices) {
    if (static_cast<int>(t.size()) - 1 > dimension)
      throw std::invalid_argument("simplex exceeds declared dimension: " + simplex_str(t));
    for (auto& f : all_faces(t)) {
      int d = static_cast<int>(f.size()) - 1;
      by_dim[d].insert(std::move(f));
    }
  }
  x.simplices_.resize(dimension + 1);
  x.index_.resize(dimension + 1);
  for (int d = 0; d <= dimension; ++d) {
    x.simplices_[d].assign(by_dim[d].begin(), by_dim[d].end());
    for (int i = 0; i < static_cast<int>(x.simplices_[d].size()); ++i)
      x.index_[d][x.simplices_[d][i]] = i;
  }

  // skeleton levels: minimal i with the simplex inside X^i
  x.levels_.resize(dimension + 1);
  for (int d = 0; d <= dimension; ++d)
    x.levels_[d].assign(x.simplices_[d].size(), dimension);
  for (const auto& [i, gens] : skeleta) {
    if (i < 0 || i >= dimension)
      throw std::invalid_argument("skeleton index out of range: " + std::to_string(i));
    for (const auto& g : gens) {
      check_simplex(g, x.vertex_count());
      if (x.index_of(g) < 0)
        throw std::invalid_argument("skeleton generator not in complex: " + simplex_str(g));
      for (auto& f : all_faces(g)) {
        int d = static_cast<int>(f.size()) - 1;
        int& lv = x.levels_[d][x.index_[d].at(f)];
        lv = std::min(lv, i);
      }
    }
  }

  // strata: components of X^i - X^(i-1), joined through same-level face pairs
  std::vector<int> offset(dimension + 2, 0);
  for (int d = 0; d <= dimension; ++d)
    offset[d + 1] = offset[d] + static_cast<int>(x.simplices_[d].size());
  UnionFind uf(offset[dimension + 1]);
  for (int d = 0; d <= dimension; ++d) {
    for (int i = 0; i < static_cast<int>(x.simplices_[d].size()); ++i) {
      int lv = x.levels_[d][i];
      for (auto& f : all_faces(x.simplices_[d][i])) {
        int fd = static_cast<int>(f.size()) - 1;
        if (fd == d) continue;
        int fi = x.index_[fd].at(f);
        if (x.levels_[fd][fi] == lv) uf.unite(offset[d] + i, offset[fd] + fi);
      }
    }
  }
  std::map<int, int> root_to_stratum;
  x.stratum_of_.resize(dimension + 1);
  for (int d = 0; d <= dimension; ++d)
    x.stratum_of_[d].assign(x.simplices_[d].size(), -1);
  for (int d = 0; d <= dimension; ++d) {
    for (int i = 0; i < static_cast<int>(x.simplices_[d].size()); ++i) {
      int root = uf.find(offset[d] + i);
      auto it = root_to_stratum.find(root);
      int sid;
      if (it == root_to_stratum.end()) {
        sid = static_cast<int>(x.strata_.size());
        root_to_stratum.emplace(root, sid);
        Stratum s;
        s.level = x.levels_[d][i];
        s.codim = dimension - s.level;
        s.singular = s.codim >= 1;
        x.strata_.push_back(std::move(s));
      } else {
        sid = it->second;
      }
      x.strata_[sid].members.emplace_back(d, i);
      x.stratum_of_[d][i] = sid;
    }
  }
  // canonical stratum order: by (level, first member)
  std::vector<int> order(x.strata_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& sa = x.strata_[a];
    const auto& sb = x.strata_[b];
    if (sa.level != sb.level) return sa.level < sb.level;
    return sa.members.front() < sb.members.front();
  });
  std::vector<int> newid(x.strata_.size());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) newid[order[k]] = k;
  std::vector<Stratum> sorted;
  for (int k : order) sorted.push_back(std::move(x.strata_[k]));
  x.strata_ = std::move(sorted);
  for (auto& perdim : x.stratum_of_)
    for (auto& s : perdim) s = newid[s];
  return x;
}

int StratifiedComplex::simplex_count(int d) const {
  if (d < 0 || d > dim_) return 0;
  return static_cast<int>(simplices_[d].size());
}

int StratifiedComplex::index_of(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dim_) return -1;
  auto it = index_[d].find(s);
  return it == index_[d].end() ? -1 : it->second;
}

std::vector<int> StratifiedComplex::singular_strata() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(strata_.size()); ++i)
    if (strata_[i].singular) out.push_back(i);
  return out;
}

bool StratifiedComplex::trivially_filtered() const {
  for (int d = 0; d <= dim_; ++d)
    for (int lv : levels_[d])
      if (lv < dim_) return false;
  return true;
}

long StratifiedComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dim_; ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices_[d].size());
  return chi;
}

bool StratifiedComplex::connected() const {
  if (vertex_count() == 0) return true;
  UnionFind uf(vertex_count());
  for (const auto& t : top_)
    for (std::size_t i = 1; i < t.size(); ++i) uf.unite(t[0], t[i]);
  int root = uf.find(0);
  bool seen_any = false;
  std::vector<bool> used(vertex_count(), false);
  for (const auto& t : top_)
    for (int v : t) used[v] = true;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!used[v]) continue;
    if (!seen_any) {
      root = uf.find(v);
      seen_any = true;
    } else if (uf.find(v) != root) {
      return false;
    }
  }
  return true;
}

ValidationReport StratifiedComplex::validate(bool allow_boundary) const {
  ValidationReport rep;
  auto problem = [&](const std::string& msg) {
    rep.valid = false;
    rep.problems.push_back(msg);
  };

  if (simplex_count(dim_) == 0 && dim_ > 0)
    problem("no simplex of the declared dimension " + std::to_string(dim_));

  // skeleta are subcomplexes: faces never sit in a higher skeleton
  for (int d = 0; d <= dim_; ++d)
    for (int i = 0; i < simplex_count(d); ++i)
      for (auto& f : [&] {
             std::vector<Simplex> fs;
             const Simplex& s = simplices_[d][i];
             for (std::size_t k = 0; k < s.size() && s.size() > 1; ++k) {
               Simplex g = s;
               g.erase(g.begin() + static_cast<long>(k));
               fs.push_back(std::move(g));
             }
             return fs;
           }()) {
        int fd = d - 1;
        int fi = index_[fd].at(f);
        if (levels_[fd][fi] > levels_[d][i])
          problem("skeleton not closed under faces at " + simplex_str(f));
      }

  // skeleton dimensions: X^i may not contain simplices of dimension > i
  for (int d = 0; d <= dim_; ++d)
    for (int i = 0; i < simplex_count(d); ++i)
      if (levels_[d][i] < d)
        problem("simplex " + simplex_str(simplices_[d][i]) + " of dimension " +
                std::to_string(d) + " assigned to skeleton " +
                std::to_string(levels_[d][i]));

  // purity: every simplex is a face of a top-dimensional simplex
  {
    std::vector<std::vector<bool>> covered(dim_ + 1);
    for (int d = 0; d <= dim_; ++d) covered[d].assign(simplex_count(d), false);
    for (int i = 0; i < simplex_count(dim_); ++i) {
      for (auto& f : all_faces(simplices_[dim_][i])) {
        int fd = static_cast<int>(f.size()) - 1;
        covered[fd][index_[fd].at(f)] = true;
      }
    }
    for (int d = 0; d <= dim_; ++d)
      for (int i = 0; i < simplex_count(d); ++i)
        if (!covered[d][i])
          problem("not pure: " + simplex_str(simplices_[d][i]) +
                  " is not a face of any " + std::to_string(dim_) + "-simplex");
  }

  // pseudomanifold conditions
  if (dim_ >= 1) {
    std::vector<int> coface_count(simplex_count(dim_ - 1), 0);
    for (int i = 0; i < simplex_count(dim_); ++i) {
      const Simplex& s = simplices_[dim_][i];
      if (in_boundary_skeleton(dim_, i))
        problem("top simplex " + simplex_str(s) + " lies in X^" +
                std::to_string(levels_[dim_][i]));
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(k));
        ++coface_count[index_[dim_ - 1].at(f)];
      }
    }
    for (int i = 0; i < simplex_count(dim_ - 1); ++i) {
      if (in_boundary_skeleton(dim_ - 1, i)) continue;
      if (coface_count[i] == 2) continue;
      if (coface_count[i] == 1) {
        rep.closed = false;
        if (allow_boundary)
          rep.warnings.push_back("boundary face: " +
                                 simplex_str(simplices_[dim_ - 1][i]));
        else
          problem("pseudomanifold condition fails: " +
                  simplex_str(simplices_[dim_ - 1][i]) + " has 1 coface");
      } else {
        problem("pseudomanifold condition fails: " +
                simplex_str(simplices_[dim_ - 1][i]) + " has " +
                std::to_string(coface_count[i]) + " cofaces");
      }
    }
  }

  // flag-likeness (reported, not a validity failure)
  for (int d = 0; d <= dim_ && rep.flag_like; ++d) {
    for (int i = 0; i < simplex_count(d) && rep.flag_like; ++i) {
      const Simplex& s = simplices_[d][i];
      for (int lv = 0; lv < dim_; ++lv) {
        Simplex w;
        for (int v : s)
          if (levels_[0][index_[0].at({v})] <= lv) w.push_back(v);
        if (w.empty() || w == s) continue;
        int wd = static_cast<int>(w.size()) - 1;
        if (levels_[wd][index_[wd].at(w)] > lv) {
          rep.flag_like = false;
          rep.warnings.push_back(
              "not flag-like: " + simplex_str(s) + " meets X^" + std::to_string(lv) +
              " in more than the face " + simplex_str(w) +
              "; one barycentric subdivision repairs this");
          break;
        }
      }
    }
  }
  return rep;
}

SparseMatrix StratifiedComplex::boundary_matrix(int d, const FieldSpec& f) const {
  if (d < 1 || d > dim_) return SparseMatrix(d == 0 ? 0 : simplex_count(d - 1), simplex_count(d), f);
  SparseMatrix m(simplex_count(d - 1), simplex_count(d), f);
  for (int i = 0; i < simplex_count(d); ++i) {
    const Simplex& s = simplices_[d][i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      m.add_to(index_[d - 1].at(face), i,
               k % 2 == 0 ? Fq::one(f) : -Fq::one(f));
    }
  }
  return m;
}

void StratifiedComplex::set_orientation_hint(Simplex s, int sign) {
  if (static_cast<int>(s.size()) != dim_ + 1 || index_of(s) < 0)
    throw std::invalid_argument("orientation hint must name a top simplex");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("orientation hint sign must be +-1");
  orientation_hint_ = {std::move(s), sign};
}

std::optional<Orientation> find_fundamental_cycle(const StratifiedComplex& x,
                                                  const FieldSpec& f) {
  if (!x.connected())
    throw std::invalid_argument("fundamental cycle: input must be connected; "
                                "handle components separately");
  int n = x.dim();
  int tops = x.simplex_count(n);
  if (tops == 0) return std::nullopt;
  if (n == 0) {
    Orientation ori;
    ori.signs = Vec(tops, Fq::one(f));
    return ori;
  }

  // facet -> list of (top simplex, position of dropped vertex)
  std::map<Simplex, std::vector<std::pair<int, int>>> facets;
  for (int i = 0; i < tops; ++i) {
    const Simplex& s = x.simplex(n, i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      facets[face].emplace_back(i, static_cast<int>(k));
    }
  }

  std::vector<int> sign(tops, 0);
  int seed_idx = 0, seed_sign = 1;
  if (x.orientation_hint()) {
    seed_idx = x.index_of(x.orientation_hint()->first);
    seed_sign = x.orientation_hint()->second;
  }
  sign[seed_idx] = seed_sign;
  std::vector<int> queue = {seed_idx};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    const Simplex& s = x.simplex(n, cur);
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      int fd = n - 1;
      int fi = x.index_of(face);
      if (fd >= 0 && x.in_boundary_skeleton(fd, fi)) continue;  // coefficient zeroed
      const auto& cof = facets.at(face);
      if (cof.size() != 2) return std::nullopt;  // invalid as a pseudomanifold
      for (auto [other, pos] : cof) {
        if (other == cur) continue;
        // cancellation: (-1)^k sign[cur] + (-1)^pos sign[other] == 0
        int need = ((k + pos) % 2 == 0) ? -sign[cur] : sign[cur];
        if (sign[other] == 0) {
          sign[other] = need;
          queue.push_back(other);
        } else if (sign[other] != need && !(f.prime == 2)) {
          return std::nullopt;  // not orientable over this field
        }
      }
    }
  }
  for (int s : sign)
    if (s == 0) return std::nullopt;  // should not happen for valid connected input

  Orientation ori;
  ori.signs = zero_vec(f, tops);
  for (int i = 0; i < tops; ++i) ori.signs[i] = Fq::from_int(f, sign[i]);

  // verify the coefficient-zeroed boundary vanishes
  if (n >= 1) {
    SparseMatrix bd = x.boundary_matrix(n, f);
    Vec b = bd.apply(ori.signs);
    for (int i = 0; i < x.simplex_count(n - 1); ++i)
      if (!x.in_boundary_skeleton(n - 1, i) && !b[i].is_zero()) return std::nullopt;
  }
  return ori;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, const std::string& base) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(base)) return base;
  for (int k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!used(cand)) return cand;
  }
}

// shared by cone and suspension: link simplices shift one skeleton level up,
// apexes form new minimal strata
StratifiedComplex coned_space(const StratifiedComplex& link,
                              const std::vector<std::string>& apex_bases) {
  int nl = link.dim();
  int n = nl + 1;
  std::vector<std::string> labels = link.vertex_labels();
  std::vector<int> apex;
  for (const auto& base : apex_bases) {
    labels.push_back(fresh_label(labels, base));
    apex.push_back(static_cast<int>(labels.size()) - 1);
  }

  std::vector<Simplex> tops;
  std::vector<Simplex> maximal = link.top_simplices();
  for (const auto& t : maximal) {
    for (int a : apex) {
      Simplex s = t;
      s.push_back(a);  // apexes are the largest indices
      tops.push_back(std::move(s));
    }
  }

  std::map<int, std::vector<Simplex>> skeleta;
  for (int a : apex) skeleta[0].push_back({a});
  for (int d = 0; d <= nl; ++d)
    for (int i = 0; i < link.simplex_count(d); ++i) {
      int lv = link.level(d, i);
      if (lv + 1 >= n) continue;
      Simplex s = link.simplex(d, i);
      skeleta[lv + 1].push_back(s);
      for (int a : apex) {
        Simplex c = s;
        c.push_back(a);
        skeleta[lv + 1].push_back(c);
      }
    }
  return StratifiedComplex::build(n, std::move(labels), std::move(tops), skeleta);
}

}  // namespace

StratifiedComplex cone(const StratifiedComplex& link) {
  auto x = coned_space(link, {"apex"});
  x.set_name("cone(" + link.name() + ")");
  return x;
}

StratifiedComplex suspension(const StratifiedComplex& link) {
  auto x = coned_space(link, {"apexN", "apexS"});
  x.set_name("susp(" + link.name() + ")");
  return x;
}

StratifiedComplex product(const StratifiedComplex& x, const StratifiedComplex& y) {
  if (!x.trivially_filtered() || !y.trivially_filtered())
    throw std::invalid_argument(
        "unsupported stratified product: factors must be trivially filtered");
  int ny = y.vertex_count();
  std::vector<std::string> labels;
  for (const auto& lx : x.vertex_labels())
    for (const auto& ly : y.vertex_labels()) labels.push_back(lx + "*" + ly);
  auto vid = [&](int u, int v) { return u * ny + v; };

  std::vector<Simplex> tops;
  for (const auto& sx : x.top_simplices()) {
    for (const auto& sy : y.top_simplices()) {
      int p = static_cast<int>(sx.size()) - 1;
      int q = static_cast<int>(sy.size()) - 1;
      // monotone staircase paths from (0,0) to (p,q)
      std::vector<std::pair<Simplex, std::pair<int, int>>> partial;
      partial.push_back({{vid(sx[0], sy[0])}, {0, 0}});
      while (!partial.empty()) {
        auto [path, pos] = partial.back();
        partial.pop_back();
        auto [a, b] = pos;
        if (a == p && b == q) {
          tops.push_back(path);
          continue;
        }
        if (a < p) {
          Simplex next = path;
          next.push_back(vid(sx[a + 1], sy[b]));
          partial.push_back({std::move(next), {a + 1, b}});
        }
        if (b < q) {
          Simplex next = path;
          next.push_back(vid(sx[a], sy[b + 1]));
          partial.push_back({std::move(next), {a, b + 1}});
        }
      }
    }
  }
  auto out = StratifiedComplex::build(x.dim() + y.dim(), std::move(labels),
                                      std::move(tops), {});
  out.set_name(x.name() + "x" + y.name());
  return out;
}

Subdivision barycentric_subdivide(const StratifiedComplex& x) {
  int n = x.dim();
  // one new vertex per original simplex, ordered by (dim, index)
  std::vector<std::pair<int, int>> origin;
  std::vector<std::vector<int>> vertex_of(n + 1);
  std::vector<std::string> labels;
  for (int d = 0; d <= n; ++d) {
    vertex_of[d].resize(x.simplex_count(d));
    for (int i = 0; i < x.simplex_count(d); ++i) {
      const Simplex& s = x.simplex(d, i);
      std::string lab;
      if (d == 0) {
        lab = x.vertex_labels()[s[0]];
      } else {
        lab = "b(";
        for (std::size_t k = 0; k < s.size(); ++k)
          lab += (k ? "." : "") + x.vertex_labels()[s[k]];
        lab += ")";
      }
      vertex_of[d][i] = static_cast<int>(labels.size());
      labels.push_back(lab);
      origin.emplace_back(d, i);
    }
  }

  // flags within a simplex: all chains of nonempty faces ordered by inclusion
  // (selected per top simplex as full permutation flags for the generators)
  std::vector<Simplex> tops;
  for (const auto& t : x.top_simplices()) {
    int k = static_cast<int>(t.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Simplex flag;
      Simplex face;
      for (int j = 0; j < k; ++j) {
        face.push_back(t[perm[j]]);
        std::sort(face.begin(), face.end());
        int d = j;
        flag.push_back(vertex_of[d][x.index_of(face)]);
      }
      std::sort(flag.begin(), flag.end());
      tops.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // skeleta: the subdivision of X^i is generated by the full flags of the
  // simplices of level <= i
  std::map<int, std::vector<Simplex>> skeleta;
  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i < x.simplex_count(d); ++i) {
      int lv = x.level(d, i);
      if (lv >= n) continue;
      const Simplex& s = x.simplex(d, i);
      int k = static_cast<int>(s.size());
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Simplex flag;
        Simplex face;
        for (int j = 0; j < k; ++j) {
          face.push_back(s[perm[j]]);
          std::sort(face.begin(), face.end());
          flag.push_back(vertex_of[j][x.index_of(face)]);
        }
        std::sort(flag.begin(), flag.end());
        skeleta[lv].push_back(std::move(flag));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  Subdivision out{StratifiedComplex::build(n, std::move(labels), std::move(tops), skeleta),
                  std::move(origin)};
  out.complex.set_name("sd(" + x.name() + ")");
  return out;
}

}  // namespace stratih
