#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"

// Seeded randomness for property tests. mt19937_64 output is pinned by the
// standard; we avoid std distributions because their algorithms are not.
namespace testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (eng_() & 1) != 0; }

  stratih::Fq scalar(const stratih::FieldSpec& f) {
    if (f.is_rational()) {
      long num = range(-6, 6);
      long den = range(1, 4);
      return stratih::Fq::rational(num, den);
    }
    return stratih::Fq::from_int(f, range(0, static_cast<long>(f.prime) - 1));
  }

  stratih::Fq nonzero_scalar(const stratih::FieldSpec& f) {
    for (;;) {
      auto x = scalar(f);
      if (!x.is_zero()) return x;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testutil
