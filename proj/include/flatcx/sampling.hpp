#pragma once

#include <cstdint>
#include <random>

#include "flatcx/linalg.hpp"

namespace flatcx {

// Seeded generator for test inputs. Only raw mt19937_64 output is used so
// sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Rational rational(long bound, long max_den) {
    return Rational(integer(-bound, bound), integer(1, max_den));
  }

  RMatrix integer_matrix(Index rows, Index cols, long bound) {
    RMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = Rational(integer(-bound, bound));
    }
    return m;
  }

  // Rejection-sampled until the determinant is nonzero.
  RMatrix invertible_matrix(Index n, long bound) {
    for (;;) {
      RMatrix m = integer_matrix(n, n, bound);
      if (!determinant(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flatcx
