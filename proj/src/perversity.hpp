#pragma once

#include <map>
#include <string>

#include "simplicial.hpp"

namespace stratih {

enum class GmName { kZero, kLowerMiddle, kUpperMiddle, kTop };

// Integer function on the singular strata of a fixed complex. General
// perversities: values are unrestricted.
class Perversity {
 public:
  // values keyed by stratum id; must cover exactly the singular strata
  Perversity(const StratifiedComplex& x, std::map<int, int> values,
             std::string label = "");

  static Perversity zero(const StratifiedComplex& x) { return gm(GmName::kZero, x); }
  static Perversity top(const StratifiedComplex& x) { return gm(GmName::kTop, x); }
  static Perversity gm(GmName name, const StratifiedComplex& x);
  static int gm_value(GmName name, int codim);
  static std::string gm_label(GmName name);

  const std::string& label() const { return label_; }
  const std::map<int, int>& values() const { return values_; }
  int operator()(int stratum_id) const;
  bool same_space(const Perversity& o) const;

  Perversity dual() const;
  bool leq(const Perversity& o) const;  // pointwise on singular strata

  std::string str() const;

 private:
  const StratifiedComplex* space_;
  std::map<int, int> values_;
  std::string label_;
};

bool is_complementary(const Perversity& p, const Perversity& q);
// The cup-product condition D(r) >= D(p) + D(q), pointwise.
bool cup_compatible(const Perversity& p, const Perversity& q, const Perversity& r);

}  // namespace stratih
