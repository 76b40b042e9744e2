#pragma once

#include <cstdint>
#include <functional>

#include "sparse.hpp"

namespace stratih::signcalc {

// Cohomologically indexed complex with finite support [lo, hi] and a
// degree +1 differential.
class GradedComplex {
 public:
  GradedComplex(FieldSpec f, int lo, std::vector<int> dims);

  FieldSpec field() const { return f_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int degree) const;
  const SparseMatrix& d(int degree) const;  // degree -> degree + 1
  void set_d(int degree, SparseMatrix m);
  bool has_nonzero_differential() const;
  void check_d_squared() const;  // throws when d^2 != 0

 private:
  FieldSpec f_;
  int lo_;
  std::vector<int> dims_;
  std::vector<SparseMatrix> d_;
  SparseMatrix empty_;
};

struct Element {
  int degree = 0;
  Vec v;
};

// Unital, associative, graded-commutative differential graded algebra with
// explicit structure tables.
class Algebra {
 public:
  GradedComplex cx;
  Element unit;
  // product of basis vectors by degree pair
  Vec multiply(int i, const Vec& a, int j, const Vec& b) const;
  void set_table(int i, int j, SparseMatrix m);  // (dim_i * dim_j) -> dim_{i+j}
  const SparseMatrix* table(int i, int j) const;

  explicit Algebra(GradedComplex c) : cx(std::move(c)) {}

 private:
  std::map<std::pair<int, int>, SparseMatrix> tables_;
};

Algebra exterior_algebra(FieldSpec f, const std::vector<int>& odd_degrees);
// F[t]/(t^m) tensor the line on dt, with d(t^k) = k t^{k-1} dt
Algebra truncated_de_rham(FieldSpec f, int truncation);
Algebra tensor(const Algebra& a, const Algebra& b);

// A degree-n chain isomorphism f: A -> B built by conjugating the shift of
// A's differential by random degree-0 isomorphisms, so that
// d_B f = (-1)^n f d_A holds by construction. Carries the transported
// products of the appendix on signs.
class TransferInstance {
 public:
  TransferInstance(Algebra a, int n, std::vector<SparseMatrix> f_by_degree);

  const Algebra& a() const { return a_; }
  const GradedComplex& b() const { return b_; }
  int n() const { return n_; }

  Vec f(int deg_a, const Vec& v) const;
  Vec g(int deg_b, const Vec& v) const;
  Element unit_b() const;  // f(1)

  // Q  = f P (f (x) f)^{-1}:          (-1)^{n + n|a|} f(g(a) g(b))
  Vec q(int i, const Vec& a, int j, const Vec& b) const;
  // Q' = f P (g (x) g):               (-1)^{n|a|}     f(g(a) g(b))
  Vec qprime(int i, const Vec& a, int j, const Vec& b) const;
  // the classical transfer (also the failed chain-map fix Q''): f(g(a) g(b))
  Vec bullet(int i, const Vec& a, int j, const Vec& b) const;
  // product on B[n] via the shifts: strictly unital/associative/commutative;
  // degrees are shifted-complex degrees, coordinates are B coordinates
  Vec shifted_r(int i_shifted, const Vec& a, int j_shifted, const Vec& b) const;
  Element shifted_unit() const;

  // differentials
  Vec db(int deg_b, const Vec& v) const;
  Vec db_shifted(int deg_shifted, const Vec& v) const;  // (-1)^n d_B

 private:
  Algebra a_;
  GradedComplex b_;
  int n_;
  std::vector<SparseMatrix> f_, g_;  // indexed by A-degree - lo
};

// deterministic generator for the law battery
TransferInstance random_instance(std::uint64_t seed, int n, const FieldSpec& f);

struct LawReport {
  std::string law;
  bool pass = true;
  long trials = 0;
  std::string witness;  // filled when a law fails or exhibits its defect
};

// Runs every sign law of the appendix over `instances` random instances per
// n in ns. All checks exact.
std::vector<LawReport> run_sign_laws(std::uint64_t seed, int instances,
                                     const std::vector<int>& ns, const FieldSpec& f);

// Exhaustive defect table of a transported product on small bases:
// measured associativity / commutativity / unit defects and chain-map status.
struct DefectReport {
  std::string product;
  bool chain_map = false;
  bool associative_exact = false;
  std::string associativity_defect;  // e.g. "(-1)^(n+n|a|)"
  std::string commutativity_defect;
  std::string left_unit, right_unit;
  std::string str() const;
};
DefectReport defect_report(const TransferInstance& t, const std::string& which);

}  // namespace stratih::signcalc
