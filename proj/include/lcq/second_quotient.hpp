#pragma once

// D/(D,G) for G = pi_1(X), D = (G,G), computed as the cokernel of
//   mu : H_2(X,Z) -> Alt^2(H^1(X,Z)),  mu(s)(a,b) = s cap (a ^ b).
// Alt^2 is coordinatised by alt2_basis(h1_rank). When H_1 has torsion the
// cokernel is only the image of a surjection with finite kernel.

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/exterior.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace lcq {

struct SpaceData {
  std::string name;
  std::size_t h1_rank = 0;
  bool h1_torsion_free = true;
  std::size_t h2_rank = 0;
  // Exactly one of these is set.
  std::optional<IntMatrix> mu;  // C(h1_rank,2) x h2_rank
  std::optional<IntMatrix> cup; // h2_rank x C(h1_rank,2)

  friend bool operator==(const SpaceData &, const SpaceData &) = default;
};

enum class Exactness { Exact, UpToFiniteKernel };

inline const char *to_string(Exactness e) {
  return e == Exactness::Exact ? "exact" : "up_to_finite_kernel";
}

struct SecondQuotientResult {
  AbelianGroup group;
  Exactness exactness = Exactness::Exact;

  friend bool operator==(const SecondQuotientResult &,
                         const SecondQuotientResult &) = default;
};

// Throws InputError naming the first violated shape constraint.
inline void validate(const SpaceData &space) {
  const std::size_t alt = choose2(space.h1_rank);
  if (space.mu.has_value() == space.cup.has_value())
    throw InputError(space.name +
                     ": exactly one of 'mu' and 'cup' must be given");
  if (space.mu) {
    if (space.mu->rows() != alt || space.mu->cols() != space.h2_rank)
      throw InputError(space.name + ": mu is " + space.mu->shape() +
                       ", expected " + std::to_string(alt) + "x" +
                       std::to_string(space.h2_rank) +
                       " (C(h1_rank,2) x h2_rank)");
  } else if (space.cup->rows() != space.h2_rank || space.cup->cols() != alt) {
    throw InputError(space.name + ": cup is " + space.cup->shape() +
                     ", expected " + std::to_string(space.h2_rank) + "x" +
                     std::to_string(alt) + " (h2_rank x C(h1_rank,2))");
  }
}

// Over Q, mu is the transpose of the cup product.
inline IntMatrix mu_from_cup(const SpaceData &space) {
  if (!space.cup)
    throw InputError(space.name + ": no cup matrix to transpose");
  return space.cup->transpose();
}

inline IntMatrix mu_matrix(const SpaceData &space) {
  validate(space);
  return space.mu ? *space.mu : mu_from_cup(space);
}

inline SecondQuotientResult second_lcs_quotient(const SpaceData &space) {
  return {cokernel(mu_matrix(space)), space.h1_torsion_free
                                          ? Exactness::Exact
                                          : Exactness::UpToFiniteKernel};
}

// dim_Q D/(D,G) (x) Q = C(h1_rank,2) - rank mu.
inline std::size_t rational_rank(const SpaceData &space) {
  return choose2(space.h1_rank) - rank(mu_matrix(space));
}

// dim_Q ker(c : Lambda^2 H^1 -> H^2) = C(h1_rank,2) - rank c.
inline std::size_t ker_cup_dim(const SpaceData &space) {
  validate(space);
  const IntMatrix c = space.cup ? *space.cup : space.mu->transpose();
  return choose2(space.h1_rank) - rank(c);
}

} // namespace lcq
