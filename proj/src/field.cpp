#include "field.hpp"

namespace stratih {

std::string FieldSpec::name() const {
  if (is_rational()) return "q";
  return "p:" + std::to_string(prime);
}

FieldSpec FieldSpec::mod(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31))
    throw std::invalid_argument("field modulus out of range: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("field modulus not prime: " + std::to_string(p));
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  std::string t = text;
  if (t.rfind("p:", 0) == 0) t = t.substr(2);
  try {
    std::size_t pos = 0;
    unsigned long long p = std::stoull(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(text);
    return mod(p);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse field spec: " + text);
  }
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended euclid on signed values; p < 2^31 so this is safe
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

Fq Fq::zero(const FieldSpec& f) {
  Fq x;
  x.field_ = f;
  return x;
}

Fq Fq::one(const FieldSpec& f) { return from_int(f, 1); }

Fq Fq::from_int(const FieldSpec& f, long v) {
  Fq x;
  x.field_ = f;
  if (f.is_rational()) {
    x.q_ = v;
  } else {
    long long m = static_cast<long long>(v) % static_cast<long long>(f.prime);
    if (m < 0) m += static_cast<long long>(f.prime);
    x.r_ = static_cast<std::uint64_t>(m);
  }
  return x;
}

Fq Fq::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Fq x;
  x.field_ = FieldSpec::rationals();
  x.q_ = mpq_class(num, den);
  x.q_.canonicalize();
  return x;
}

Fq Fq::rational(const mpq_class& q) {
  Fq x;
  x.field_ = FieldSpec::rationals();
  x.q_ = q;
  x.q_.canonicalize();
  return x;
}

Fq Fq::residue(std::uint64_t p, long v) { return from_int(FieldSpec{p}, v); }

bool Fq::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Fq::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Fq::check_same_field(const Fq& o) const {
  if (field_ != o.field_) throw std::logic_error("mixed-field arithmetic");
}

Fq Fq::operator-() const {
  Fq x = *this;
  if (field_.is_rational())
    x.q_ = -q_;
  else if (r_ != 0)
    x.r_ = field_.prime - r_;
  return x;
}

Fq Fq::operator+(const Fq& o) const {
  check_same_field(o);
  Fq x = *this;
  if (field_.is_rational()) {
    x.q_ = q_ + o.q_;
  } else {
    std::uint64_t s = r_ + o.r_;
    x.r_ = s >= field_.prime ? s - field_.prime : s;
  }
  return x;
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
  check_same_field(o);
  Fq x = *this;
  if (field_.is_rational())
    x.q_ = q_ * o.q_;
  else
    x.r_ = (r_ * o.r_) % field_.prime;
  return x;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

Fq Fq::inverse() const {
  Fq x = *this;
  if (field_.is_rational()) {
    if (sgn(q_) == 0) throw std::domain_error("division by zero");
    x.q_ = 1 / q_;
  } else {
    x.r_ = mod_inverse(r_, field_.prime);
  }
  return x;
}

bool Fq::operator==(const Fq& o) const {
  check_same_field(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Fq::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

Fq Fq::parse(const FieldSpec& f, const std::string& text) {
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("cannot parse rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return rational(q);
  }
  try {
    std::size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return from_int(f, v);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse residue: " + text);
  }
}

const mpq_class& Fq::rational_value() const {
  if (!field_.is_rational()) throw std::logic_error("not a rational");
  return q_;
}

std::uint64_t Fq::residue_value() const {
  if (field_.is_rational()) throw std::logic_error("not a residue");
  return r_;
}

}  // namespace stratih
