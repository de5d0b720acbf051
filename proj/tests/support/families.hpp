#pragma once

// Seeded random instances shared by the unit tests and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

#include "flatcx/catalog.hpp"
#include "flatcx/complex_structure.hpp"
#include "flatcx/connection.hpp"
#include "flatcx/lie_algebra.hpp"
#include "flatcx/sampling.hpp"

namespace flatcx::testing {

struct Instance {
  std::string label;
  LieAlgebra algebra;
  LinearComplexStructure j;
};

// aff(R): [e1,e2] = e2
inline LieAlgebra aff_r() { return LieAlgebra::from_brackets(2, {{0, 1, {{1, Rational(1)}}}}); }

// [e1,e2] = e3, [e4,e1] = e1, [e4,e2] = -e2; solvable of derived length 3.
inline LieAlgebra d4() {
  return LieAlgebra::from_brackets(4, {{0, 1, {{2, Rational(1)}}},
                                       {0, 3, {{0, Rational(-1)}}},
                                       {1, 3, {{1, Rational(1)}}}});
}

// R acting on the Heisenberg algebra by a derivation D with
// D e1 = a e1 + c e2 + p e3, D e2 = b e1 + d e2 + q e3, D e3 = (a+d) e3.
inline LieAlgebra heisenberg_extension(long a, long b, long c, long d, long p, long q) {
  const auto r = [](long v) { return Rational(v); };
  std::vector<BracketEntry> br = {{0, 1, {{2, r(1)}}}};
  // [e1,e4] = -D e1, [e2,e4] = -D e2, [e3,e4] = -D e3
  br.push_back({0, 3, {{0, r(-a)}, {1, r(-c)}, {2, r(-p)}}});
  br.push_back({1, 3, {{0, r(-b)}, {1, r(-d)}, {2, r(-q)}}});
  br.push_back({2, 3, {{2, r(-(a + d))}}});
  return LieAlgebra::from_brackets(4, br);
}

inline LieAlgebra random_heisenberg_extension(Sampler& s) {
  const long a = s.integer(-2, 2), b = s.integer(-2, 2), c = s.integer(-2, 2), d = s.integer(-2, 2);
  return heisenberg_extension(a, b, c, d, s.integer(-1, 1), s.integer(-1, 1));
}

inline LieAlgebra so3_plus_r() { return direct_sum(so3_algebra(), LieAlgebra(1)); }

inline LieAlgebra aff_r_squared() { return direct_sum(aff_r(), aff_r()); }

// Dimension-4 algebras with J's known to be abelian or bi-invariant where
// such exist, in a fixed order.
struct PoolEntry {
  std::string name;
  LieAlgebra algebra;
};

inline std::vector<PoolEntry> pool4(std::uint64_t seed) {
  Sampler s(seed);
  return {{"kt4", kt4_algebra()},
          {"aff_c", aff_c_algebra()},
          {"abelian4", LieAlgebra(4)},
          {"d4", d4()},
          {"aff_r_squared", aff_r_squared()},
          {"so3_plus_r", so3_plus_r()},
          {"heisenberg_extension", random_heisenberg_extension(s)}};
}

// Automorphism of kt4 as the matrix whose columns are the images of e1..e4.
inline RMatrix random_kt4_automorphism(Sampler& s) {
  RMatrix gl2;
  do {
    gl2 = s.integer_matrix(2, 2, 2);
  } while ((gl2(0, 0) * gl2(1, 1) - gl2(0, 1) * gl2(1, 0)).is_zero());
  const Rational det = gl2(0, 0) * gl2(1, 1) - gl2(0, 1) * gl2(1, 0);
  long lambda = 0;
  while (lambda == 0) lambda = s.integer(-2, 2);
  RMatrix p = RMatrix::Zero(4, 4);
  p.block(0, 0, 2, 2) = gl2;
  p(2, 0) = Rational(s.integer(-2, 2));
  p(3, 0) = Rational(s.integer(-2, 2));
  p(2, 1) = Rational(s.integer(-2, 2));
  p(3, 1) = Rational(s.integer(-2, 2));
  p(2, 2) = det;
  p(2, 3) = Rational(s.integer(-2, 2));
  p(3, 3) = Rational(lambda);
  return p;
}

// Automorphism of aff(R) + aff(R): e1 -> e1 + t e2, e2 -> u e2 on each
// factor, optionally swapping the factors.
inline RMatrix random_aff_r_squared_automorphism(Sampler& s) {
  RMatrix p = RMatrix::Zero(4, 4);
  for (Index f = 0; f < 2; ++f) {
    long u = 0;
    while (u == 0) u = s.integer(-2, 2);
    p(2 * f, 2 * f) = Rational(1);
    p(2 * f + 1, 2 * f) = Rational(s.integer(-2, 2));
    p(2 * f + 1, 2 * f + 1) = Rational(u);
  }
  if (s.integer(0, 1) == 1) {
    RMatrix swap = RMatrix::Zero(4, 4);
    swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = Rational(1);
    p = swap * p;
  }
  return p;
}

// phi J phi^-1 for an automorphism phi keeps J's algebraic type.
inline LinearComplexStructure transport(const LinearComplexStructure& j, const RMatrix& phi) {
  return LinearComplexStructure(RMatrix(phi * j.matrix() * inverse(phi)));
}

// `count` complex structures on `entry.algebra`: even draws are random
// conjugates of J0, odd draws transport a distinguished J by a random
// automorphism when the algebra has one.
inline std::vector<Instance> random_structures(const PoolEntry& entry, int count, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Instance> out;
  const LinearComplexStructure pairs = LinearComplexStructure::from_pairs(4, {{0, 1}, {2, 3}});
  for (int k = 0; k < count; ++k) {
    const std::string label = entry.name + "#" + std::to_string(k);
    if (k % 2 == 0 || entry.name == "so3_plus_r" || entry.name == "d4" || entry.name == "heisenberg_extension") {
      out.push_back({label, entry.algebra, random_complex_structure(4, seed * 1000 + static_cast<std::uint64_t>(k))});
    } else if (entry.name == "kt4") {
      out.push_back({label, entry.algebra, transport(kt4_j(), random_kt4_automorphism(s))});
    } else if (entry.name == "aff_r_squared") {
      out.push_back({label, entry.algebra, transport(pairs, random_aff_r_squared_automorphism(s))});
    } else if (entry.name == "aff_c") {
      const LinearComplexStructure jbi = aff_c_j();
      out.push_back({label, entry.algebra, s.integer(0, 1) == 0 ? jbi : LinearComplexStructure(RMatrix(-jbi.matrix()))});
    } else {
      out.push_back({label, entry.algebra, random_complex_structure(4, seed * 1000 + static_cast<std::uint64_t>(k))});
    }
  }
  return out;
}

// The same structure written in a random basis.
inline Instance rebase(const Instance& in, Sampler& s) {
  const RMatrix p = s.invertible_matrix(in.algebra.dim(), 2);
  return {in.label + "@basis", change_basis(in.algebra, p), conjugate(in.j, p)};
}

inline BilinearMap<Rational> random_gamma(Index n, Sampler& s) {
  BilinearMap<Rational> gamma(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) gamma(i, j, k) = s.rational(3, 3);
    }
  }
  return gamma;
}

// A Lie algebra of the given even dimension drawn from direct sums of
// small pieces, in a random basis.
inline LieAlgebra random_algebra(Index dim, Sampler& s) {
  std::vector<LieAlgebra> pieces;
  if (dim == 2) {
    pieces = {aff_r(), LieAlgebra(2)};
  } else if (dim == 4) {
    const auto pool = pool4(static_cast<std::uint64_t>(s.integer(0, 1 << 20)));
    for (const auto& p : pool) pieces.push_back(p.algebra);
  } else {
    pieces = {direct_sum(kt4_algebra(), aff_r()), direct_sum(aff_c_algebra(), aff_r()),
              direct_sum(so3_algebra(), so3_algebra()), direct_sum(d4(), LieAlgebra(2))};
  }
  const LieAlgebra& base = pieces[static_cast<std::size_t>(s.integer(0, static_cast<long>(pieces.size()) - 1))];
  return change_basis(base, s.invertible_matrix(dim, 2));
}

}  // namespace flatcx::testing
