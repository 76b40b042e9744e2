#include "diagrams.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "ichains.hpp"

namespace stratih::diagrams {

std::string status_str(Status s) {
  switch (s) {
    case Status::kExact: return "exact-commute";
    case Status::kUpToSign: return "commute-up-to-sign";
    case Status::kDefect: return "defect-witness";
    case Status::kSkipped: return "skipped-with-reason";
  }
  return "?";
}

bool DiagramReport::pass() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const Row& r) { return r.status == Status::kDefect; });
}

std::string DiagramReport::sort_key() const {
  return diagram + "|" + space + "|" + field + "|" + perversities;
}

std::string DiagramReport::tsv() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << diagram << '\t' << space << '\t' << field << '\t' << perversities << '\t'
       << r.key << '\t' << status_str(r.status) << '\t' << r.detail << '\n';
  return os.str();
}

namespace {

std::string pair_label(const Perversity& p, const Perversity& q) {
  return p.str() + "," + q.str();
}

}  // namespace

DiagramReport check_duality_ranks(PairingEngine& eng, const Perversity& p) {
  DiagramReport rep;
  rep.space = eng.space().name();
  rep.field = eng.field().name();
  rep.diagram = "duality-ranks";
  rep.perversities = p.str();
  int n = eng.space().dim();
  if (!eng.oriented()) {
    rep.rows.push_back({"all", Status::kSkipped, "space is not oriented over " +
                                                     eng.field().name()});
    return rep;
  }
  if (!eng.space().validate(true).closed) {
    rep.rows.push_back({"all", Status::kSkipped,
                        "not a closed pseudomanifold; duality needs compact "
                        "oriented without boundary"});
    return rep;
  }
  auto& pb = eng.block(p);
  auto& db = eng.block(p.dual());
  for (int i = 0; i <= n; ++i) {
    int hi = pb.hom.dim(i);
    int ci = pb.coch.cohomology_dim(i);
    int hd = db.hom.dim(n - i);
    std::ostringstream detail;
    detail << "dim I_pH^" << i << " = " << ci << ", dim I^pH_" << i << " = " << hi
           << ", dim I^{Dp}H_" << (n - i) << " = " << hd;
    Row row{"degree " + std::to_string(i),
            (ci == hi && hi == hd) ? Status::kExact : Status::kDefect, detail.str()};
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

DiagramReport check_triangle_identity(PairingEngine& eng, const Perversity& p) {
  DiagramReport rep;
  rep.space = eng.space().name();
  rep.field = eng.field().name();
  rep.diagram = "triangle-I";
  rep.perversities = pair_label(p, p.dual());
  int n = eng.space().dim();
  if (!eng.oriented() || !eng.space().validate(true).closed) {
    rep.rows.push_back({"all", Status::kSkipped, "needs a closed oriented space"});
    return rep;
  }
  if (!eng.aug_is_iso()) {
    rep.rows.push_back({"all", Status::kSkipped,
                        "augmentation is not an isomorphism (non-normal space); "
                        "informational only"});
    return rep;
  }
  auto& pb = eng.block(p);
  auto& qb = eng.block(p.dual());
  for (int i = 0; i <= n; ++i) {
    int j = n - i;
    if (pb.coch.cohomology_dim(i) == 0 || qb.coch.cohomology_dim(j) == 0) continue;
    bool all_exact = true;
    std::string reason;
    int pairs = 0;
    for (int a = 0; a < pb.coch.cohomology_dim(i) && reason.empty(); ++a) {
      const Vec& alpha = pb.coch.cocycle_reps(i)[a];
      auto dual = eng.cap_with_gamma(p, i, alpha, true);
      if (!dual.ok) {
        reason = dual.reason;
        break;
      }
      auto xc = qb.chains.from_global(j, dual.chain);
      if (!xc) {
        reason = "capped chain left the dual complex";
        break;
      }
      for (int b = 0; b < qb.coch.cohomology_dim(j); ++b) {
        const Vec& beta = qb.coch.cocycle_reps(j)[b];
        auto nu = eng.nu(p, i, alpha, beta);
        if (!nu.ok) {
          reason = nu.reason;
          break;
        }
        Fq rhs = qb.coch.pair(j, beta, *xc);
        if (j % 2) rhs = -rhs;           // kappa sign (-1)^{|x|}
        if ((i * n) % 2) rhs = -rhs;     // duality sign (-1)^{in}
        ++pairs;
        if (nu.value != rhs) all_exact = false;
      }
    }
    Row row;
    row.key = "degree " + std::to_string(i);
    if (!reason.empty()) {
      row.status = Status::kSkipped;
      row.detail = reason;
    } else if (all_exact) {
      row.status = Status::kExact;
      row.detail = "nu = kappa o duality on " + std::to_string(pairs) + " basis pairs";
    } else {
      row.status = Status::kDefect;
      row.detail = "nu differs from kappa o duality";
    }
    rep.rows.push_back(std::move(row));
  }
  if (rep.rows.empty())
    rep.rows.push_back({"all", Status::kExact, "no complementary pairs in any degree"});
  return rep;
}

DiagramReport check_cube_backface(PairingEngine& eng, const Perversity& p,
                                  const Perversity& q, const Perversity& r) {
  DiagramReport rep;
  rep.space = eng.space().name();
  rep.field = eng.field().name();
  rep.diagram = "cube-backface";
  rep.perversities = p.str() + "," + q.str() + "," + r.str();
  int n = eng.space().dim();
  if (!eng.oriented() || !eng.space().validate(true).closed) {
    rep.rows.push_back({"all", Status::kSkipped, "needs a closed oriented space"});
    return rep;
  }
  if (!cup_compatible(p, q, r)) {
    rep.rows.push_back({"all", Status::kSkipped, "D(r) >= D(p) + D(q) fails"});
    return rep;
  }
  auto& pb = eng.block(p);
  auto& qb = eng.block(q);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      if (pb.coch.cohomology_dim(i) == 0 || qb.coch.cohomology_dim(j) == 0) continue;
      auto& rb = eng.block(r);
      if (rb.coch.cohomology_dim(i + j) == 0) continue;
      std::string key = "degrees (" + std::to_string(i) + "," + std::to_string(j) + ")";
      std::string reason;
      std::optional<int> observed;  // +1 or -1
      bool constant = true;
      int pairs = 0;
      for (int a = 0; a < pb.coch.cohomology_dim(i) && reason.empty(); ++a) {
        for (int b = 0; b < qb.coch.cohomology_dim(j) && reason.empty(); ++b) {
          const Vec& alpha = pb.coch.cocycle_reps(i)[a];
          const Vec& beta = qb.coch.cocycle_reps(j)[b];
          // route 1: cup then signed duality
          auto cup = eng.cup_class(p, q, r, i, j, alpha, beta);
          if (!cup.ok) { reason = cup.reason; break; }
          auto lhs = eng.cap_with_gamma(r, i + j, cup.cocycle, true);
          if (!lhs.ok) { reason = lhs.reason; break; }
          // route 2: signed dualities then transported intersection
          auto dx = eng.cap_with_gamma(p, i, alpha, true);
          auto dy = eng.cap_with_gamma(q, j, beta, true);
          if (!dx.ok || !dy.ok) { reason = dx.ok ? dy.reason : dx.reason; break; }
          auto rhs = eng.intersection_product(p, q, r, i, j, dx.coords, dy.coords);
          if (!rhs.ok) { reason = rhs.reason; break; }
          if (is_zero_vec(lhs.coords) && is_zero_vec(rhs.coords)) continue;
          ++pairs;
          if (lhs.coords == rhs.coords) {
            if (observed && *observed != 1) constant = false;
            observed = 1;
          } else if (lhs.coords == scale(-Fq::one(eng.field()), rhs.coords)) {
            if (observed && *observed != -1) constant = false;
            observed = -1;
          } else {
            constant = false;
          }
        }
      }
      Row row;
      row.key = key;
      if (!reason.empty()) {
        row.status = Status::kSkipped;
        row.detail = reason;
      } else if (pairs == 0) {
        row.status = Status::kExact;
        row.detail = "all products vanish";
      } else if (!constant) {
        row.status = Status::kDefect;
        row.detail = "observed sign is not constant in the class arguments";
      } else if (*observed == 1) {
        row.status = Status::kExact;
        row.detail = "observed sign +1 on " + std::to_string(pairs) +
                     " pairs; matches the Dold-transfer prediction";
      } else {
        row.status = Status::kDefect;
        row.detail = "observed sign -1; the transfer prediction is +1";
      }
      rep.rows.push_back(std::move(row));
    }
  }
  // the transported product shows the degree-(-n) commutation defect
  {
    bool comm_ok = true;
    int checked = 0;
    std::string reason;
    for (int i = 0; i <= n && reason.empty(); ++i)
      for (int j = 0; i + j <= n && reason.empty(); ++j) {
        if (!cup_compatible(p, q, r) || !cup_compatible(q, p, r)) continue;
        auto dp = eng.duality_matrix(p, i, true);
        auto dq = eng.duality_matrix(q, j, true);
        if (!dp.ok || !dq.ok) continue;
        for (int a = 0; a < dp.m.cols(); ++a)
          for (int b = 0; b < dq.m.cols(); ++b) {
            Vec x = dp.m.column(a);
            Vec y = dq.m.column(b);
            auto xy = eng.intersection_product(p, q, r, i, j, x, y);
            auto yx = eng.intersection_product(q, p, r, j, i, y, x);
            if (!xy.ok || !yx.ok) { reason = xy.ok ? yx.reason : xy.reason; break; }
            // bullet commutativity: (-1)^{(|x|-n)(|y|-n)} with |x| = i-n
            Vec expect = ((static_cast<long>(i) - 2 * n) * (static_cast<long>(j) - 2 * n)) % 2 == 0
                             ? yx.coords
                             : scale(-Fq::one(eng.field()), yx.coords);
            ++checked;
            if (xy.coords != expect) comm_ok = false;
          }
      }
    Row row;
    row.key = "transported commutativity";
    if (!reason.empty()) {
      row.status = Status::kSkipped;
      row.detail = reason;
    } else {
      row.status = comm_ok ? Status::kExact : Status::kDefect;
      row.detail = comm_ok ? "defect (-1)^((i-n)(j-n)) verified on " +
                                 std::to_string(checked) + " pairs"
                           : "commutation defect does not match the prediction";
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

DiagramReport check_cone_formula(const StratifiedComplex& link,
                                 const std::vector<int>& apex_values,
                                 const FieldSpec& f) {
  DiagramReport rep;
  rep.space = "cone(" + link.name() + ")";
  rep.field = f.name();
  rep.diagram = "cone-formula";
  auto c = cone(link);
  std::ostringstream ps;
  for (std::size_t k = 0; k < apex_values.size(); ++k)
    ps << (k ? "," : "") << apex_values[k];
  rep.perversities = "apex:" + ps.str();
  for (int v : apex_values) {
    std::map<int, int> values;
    for (int sid : c.singular_strata()) values[sid] = v;
    Perversity p(c, std::move(values));
    auto direct = homology(IChainComplex::build(c, p, f)).dims();
    auto predicted = cone_formula_oracle(link, restrict_to_link(c, p, link), v, f);
    std::ostringstream detail;
    detail << "computed";
    for (int d : direct) detail << ' ' << d;
    detail << " | predicted";
    for (int d : predicted) detail << ' ' << d;
    rep.rows.push_back({"apex value " + std::to_string(v),
                        direct == predicted ? Status::kExact : Status::kDefect,
                        detail.str()});
  }
  return rep;
}

DiagramReport check_subdivision_stability(const StratifiedComplex& x,
                                          const Perversity& p, const FieldSpec& f) {
  DiagramReport rep;
  rep.space = x.name();
  rep.field = f.name();
  rep.diagram = "subdivision-stability";
  rep.perversities = p.str();
  if (!x.validate(true).flag_like) {
    rep.rows.push_back({"all", Status::kSkipped,
                        "triangulation is not flag-like; diagnostics only"});
    return rep;
  }
  auto before = homology(IChainComplex::build(x, p, f)).dims();
  auto sd = barycentric_subdivide(x);
  auto psd = transfer_to_subdivision(sd, x, p);
  auto after = homology(IChainComplex::build(sd.complex, psd, f)).dims();
  std::ostringstream detail;
  detail << "before";
  for (int d : before) detail << ' ' << d;
  detail << " | after";
  for (int d : after) detail << ' ' << d;
  rep.rows.push_back({"all degrees", before == after ? Status::kExact : Status::kDefect,
                      detail.str()});
  return rep;
}

std::vector<Perversity> perversity_grid(const StratifiedComplex& x,
                                        std::uint64_t seed) {
  std::vector<Perversity> out;
  if (x.singular_strata().empty()) {
    out.push_back(Perversity(x, {}, "trivial"));
    return out;
  }
  std::vector<Perversity> candidates;
  for (auto name : {GmName::kZero, GmName::kLowerMiddle, GmName::kUpperMiddle,
                    GmName::kTop}) {
    candidates.push_back(Perversity::gm(name, x));
    candidates.push_back(Perversity::gm(name, x).dual());
  }
  std::mt19937_64 eng(seed ^ 0x5851f42d4c957f2dull);
  for (int t = 0; t < 2; ++t) {
    std::map<int, int> values;
    for (int sid : x.singular_strata()) {
      int codim = x.strata()[sid].codim;
      values[sid] = static_cast<int>(eng() % static_cast<std::uint64_t>(codim + 3)) - 2;
    }
    Perversity p(x, std::move(values), "random" + std::to_string(t));
    candidates.push_back(p.dual());
    candidates.push_back(std::move(p));
  }
  std::set<std::map<int, int>> seen;
  for (auto& p : candidates)
    if (seen.insert(p.values()).second) out.push_back(std::move(p));
  return out;
}

namespace {

void run_jobs(std::vector<std::function<DiagramReport()>>& jobs,
              std::vector<DiagramReport>& out, int threads) {
  out.resize(jobs.size());
  if (threads <= 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<int>(threads, static_cast<int>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      out[k] = jobs[k]();
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<DiagramReport> run_corpus_checks(const RunOptions& options) {
  std::vector<std::function<DiagramReport()>> jobs;
  const FieldSpec rationals = FieldSpec::rationals();
  const FieldSpec f2 = FieldSpec::mod(2);

  auto spaces = std::make_shared<std::vector<StratifiedComplex>>(corpus::all_spaces());
  for (const auto& x : *spaces) {
    FieldSpec f = x.name() == "rp2" ? f2 : rationals;
    auto grid = perversity_grid(x, options.seed);
    for (const auto& p : grid) {
      jobs.push_back([spaces, &x, f, p] {
        PairingEngine eng(x, f);
        return check_duality_ranks(eng, p);
      });
      if (options.with_subdivision && x.dim() <= 2)
        jobs.push_back([spaces, &x, p, f] {
          return check_subdivision_stability(x, p, f);
        });
    }
    if (options.with_subdivision && x.dim() == 3) {
      // one representative perversity for the expensive 3-dimensional case
      jobs.push_back([spaces, &x, f] {
        auto p = x.singular_strata().empty()
                     ? Perversity(x, {}, "trivial")
                     : Perversity::gm(GmName::kLowerMiddle, x);
        return check_subdivision_stability(x, p, f);
      });
    }
    if (options.with_products) {
      std::vector<Perversity> tri;
      if (x.singular_strata().empty()) {
        tri.push_back(Perversity(x, {}, "trivial"));
      } else {
        tri.push_back(Perversity::gm(GmName::kLowerMiddle, x));
        tri.push_back(Perversity::zero(x));
      }
      for (const auto& p : tri)
        jobs.push_back([spaces, &x, f, p] {
          PairingEngine eng(x, f);
          return check_triangle_identity(eng, p);
        });
      jobs.push_back([spaces, &x, f] {
        PairingEngine eng(x, f);
        if (x.singular_strata().empty()) {
          auto p = Perversity(x, {}, "trivial");
          return check_cube_backface(eng, p, p, p);
        }
        auto m = Perversity::gm(GmName::kLowerMiddle, x);
        auto n = Perversity::gm(GmName::kUpperMiddle, x);
        return check_cube_backface(eng, m, n, Perversity::zero(x));
      });
    }
  }
  jobs.push_back([] {
    return check_cone_formula(corpus::circle(3), {-1, 0, 1, 2}, FieldSpec::rationals());
  });
  jobs.push_back([] {
    return check_cone_formula(corpus::torus7(), {0, 1, 2}, FieldSpec::rationals());
  });
  jobs.push_back([] {
    auto s0 = StratifiedComplex::build(0, {"p", "q"}, {{0}, {1}}, {});
    s0.set_name("s0");
    return check_cone_formula(s0, {0}, FieldSpec::rationals());
  });

  std::vector<DiagramReport> reports;
  run_jobs(jobs, reports, options.threads);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const DiagramReport& a, const DiagramReport& b) {
                     return a.sort_key() < b.sort_key();
                   });
  return reports;
}

std::string reports_tsv(const std::vector<DiagramReport>& reports) {
  std::ostringstream os;
  os << "diagram\tspace\tfield\tperversities\tcase\tstatus\tdetail\n";
  for (const auto& r : reports) os << r.tsv();
  return os.str();
}

}  // namespace stratih::diagrams
