#include "perversity.hpp"

#include <sstream>

namespace stratih {

Perversity::Perversity(const StratifiedComplex& x, std::map<int, int> values,
                       std::string label)
    : space_(&x), values_(std::move(values)), label_(std::move(label)) {
  for (const auto& [sid, v] : values_) {
    if (sid < 0 || sid >= static_cast<int>(x.strata().size()))
      throw std::invalid_argument("perversity: unknown stratum " + std::to_string(sid));
    if (!x.strata()[sid].singular)
      throw std::invalid_argument("perversity assigned to a regular stratum");
  }
  for (int sid : x.singular_strata())
    if (!values_.count(sid))
      throw std::invalid_argument("perversity missing singular stratum " +
                                  std::to_string(sid));
}

int Perversity::gm_value(GmName name, int codim) {
  int k = codim - 2;
  switch (name) {
    case GmName::kZero:
      return 0;
    case GmName::kLowerMiddle:
      // floor((codim-2)/2) also for codim 1
      return k >= 0 ? k / 2 : (k - 1) / 2;
    case GmName::kUpperMiddle:
      return k >= 0 ? (k + 1) / 2 : k / 2;
    case GmName::kTop:
      return k;
  }
  return 0;
}

std::string Perversity::gm_label(GmName name) {
  switch (name) {
    case GmName::kZero: return "zero";
    case GmName::kLowerMiddle: return "lower-middle";
    case GmName::kUpperMiddle: return "upper-middle";
    case GmName::kTop: return "top";
  }
  return "?";
}

Perversity Perversity::gm(GmName name, const StratifiedComplex& x) {
  std::map<int, int> values;
  for (int sid : x.singular_strata())
    values[sid] = gm_value(name, x.strata()[sid].codim);
  return Perversity(x, std::move(values), gm_label(name));
}

int Perversity::operator()(int stratum_id) const {
  auto it = values_.find(stratum_id);
  if (it == values_.end())
    throw std::invalid_argument("perversity undefined on stratum " +
                                std::to_string(stratum_id));
  return it->second;
}

bool Perversity::same_space(const Perversity& o) const { return space_ == o.space_; }

Perversity Perversity::dual() const {
  std::map<int, int> values;
  for (const auto& [sid, v] : values_)
    values[sid] = space_->strata()[sid].codim - 2 - v;
  std::string label = label_.empty() ? "" : "D(" + label_ + ")";
  if (label_ == "zero") label = "top";
  else if (label_ == "top") label = "zero";
  else if (label_ == "lower-middle") label = "upper-middle";
  else if (label_ == "upper-middle") label = "lower-middle";
  return Perversity(*space_, std::move(values), label);
}

bool Perversity::leq(const Perversity& o) const {
  if (!same_space(o)) throw std::invalid_argument("perversities on different spaces");
  for (const auto& [sid, v] : values_)
    if (v > o.values_.at(sid)) return false;
  return true;
}

std::string Perversity::str() const {
  if (!label_.empty()) return label_;
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [sid, v] : values_) {
    os << (first ? "" : ",") << sid << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool is_complementary(const Perversity& p, const Perversity& q) {
  if (!p.same_space(q)) throw std::invalid_argument("perversities on different spaces");
  return p.dual().values() == q.values();
}

bool cup_compatible(const Perversity& p, const Perversity& q, const Perversity& r) {
  if (!p.same_space(q) || !p.same_space(r))
    throw std::invalid_argument("perversities on different spaces");
  auto dp = p.dual(), dq = q.dual(), dr = r.dual();
  for (const auto& [sid, v] : dr.values())
    if (v < dp.values().at(sid) + dq.values().at(sid)) return false;
  return true;
}

}  // namespace stratih
