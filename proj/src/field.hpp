#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratih {

// Coefficient field selector: prime == 0 means the rationals, otherwise
// the prime field F_p. Primes are capped below 2^31 so products of
// residues fit in uint64 without intermediate reduction tricks.
struct FieldSpec {
  std::uint64_t prime = 0;

  bool is_rational() const { return prime == 0; }
  bool operator==(const FieldSpec& o) const { return prime == o.prime; }
  bool operator!=(const FieldSpec& o) const { return prime != o.prime; }

  std::string name() const;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec mod(std::uint64_t p);
  // Accepts "q", "Q", "p:65537", or a bare prime like "2".
  static FieldSpec parse(const std::string& text);
};

// An exact field element. Rationals are kept canonical (lowest terms,
// positive denominator) by GMP; residues are kept in [0, p).
class Fq {
 public:
  Fq() = default;  // rational zero

  static Fq zero(const FieldSpec& f);
  static Fq one(const FieldSpec& f);
  static Fq from_int(const FieldSpec& f, long v);
  static Fq rational(long num, long den = 1);
  static Fq rational(const mpq_class& q);
  static Fq residue(std::uint64_t p, long v);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Fq operator-() const;
  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }
  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  Fq inverse() const;

  // "a/b" for rationals (plain "a" when b == 1), decimal residue for F_p.
  std::string str() const;
  // Inverse of str(); also accepts integers for either field.
  static Fq parse(const FieldSpec& f, const std::string& text);

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

 private:
  FieldSpec field_;
  mpq_class q_;          // used when field_.prime == 0
  std::uint64_t r_ = 0;  // used when field_.prime != 0

  void check_same_field(const Fq& o) const;
};

// Modular inverse in F_p, p prime; throws on 0.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace stratih
