#pragma once

// Random instances for property checks. Deterministic given the engine.

#include "lcq/exterior.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/nilpotent.hpp"
#include "lcq/second_quotient.hpp"

#include <cstddef>
#include <random>
#include <string>

namespace lcq::random {

using Engine = std::mt19937_64;

inline long uniform(Engine &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix matrix(Engine &rng, std::size_t rows, std::size_t cols,
                        long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = uniform(rng, lo, hi);
  return m;
}

// Product of random elementary operations; |det| = 1.
inline IntMatrix unimodular(Engine &rng, std::size_t n,
                            std::size_t ops = 0) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0)
    return u;
  if (ops == 0)
    ops = 3 * n;
  for (std::size_t k = 0; k < ops; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    switch (uniform(rng, 0, 5)) {
    case 0:
      u.swap_rows(i, j);
      break;
    case 1:
      u.negate_row(i);
      break;
    default:
      if (i != j)
        u.add_row_multiple(i, j, uniform(rng, -2, 2));
    }
  }
  return u;
}

inline ExtElement ext_element(Engine &rng, std::size_t m, std::size_t k,
                              std::size_t terms, long bound = 3) {
  ExtElement e(m, k);
  const auto basis = lex_tuples(m, k);
  if (basis.empty())
    return e;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto pick =
        static_cast<std::size_t>(uniform(rng, 0, long(basis.size()) - 1));
    e += ExtElement::monomial(m, basis[pick], uniform(rng, -bound, bound));
  }
  return e;
}

inline Class2Element class2(Engine &rng, std::size_t n, long bound = 4) {
  Class2Element x = Class2Element::identity(n);
  for (auto &v : x.a)
    v = uniform(rng, -bound, bound);
  for (auto &v : x.b)
    v = uniform(rng, -bound, bound);
  return x;
}

inline Word word(Engine &rng, std::size_t n, std::size_t max_len) {
  Word w(static_cast<std::size_t>(uniform(rng, 0, long(max_len))));
  for (auto &l : w) {
    const int g = static_cast<int>(uniform(rng, 1, long(n)));
    l = uniform(rng, 0, 1) ? g : -g;
  }
  return w;
}

inline GroupPresentation presentation(Engine &rng, std::size_t max_gens,
                                      std::size_t max_relators,
                                      std::size_t max_len) {
  GroupPresentation p;
  p.generators = static_cast<std::size_t>(uniform(rng, 1, long(max_gens)));
  const auto k = static_cast<std::size_t>(uniform(rng, 0, long(max_relators)));
  for (std::size_t i = 0; i < k; ++i)
    p.relators.push_back(word(rng, p.generators, max_len));
  return p;
}

// Random SpaceData carrying mu (or, with probability 1/2, cup).
inline SpaceData space(Engine &rng, std::size_t max_h1, std::size_t max_h2,
                       long bound) {
  SpaceData s;
  s.h1_rank = static_cast<std::size_t>(uniform(rng, 0, long(max_h1)));
  s.h2_rank = static_cast<std::size_t>(uniform(rng, 0, long(max_h2)));
  s.h1_torsion_free = uniform(rng, 0, 3) != 0;
  s.name = "random-" + std::to_string(s.h1_rank) + "-" +
           std::to_string(s.h2_rank);
  const std::size_t alt = choose2(s.h1_rank);
  IntMatrix m = matrix(rng, alt, s.h2_rank, -bound, bound);
  // Repeated or zeroed columns and rows keep entries in range while making
  // mu rank deficient.
  for (std::size_t c = 1; c < s.h2_rank; ++c)
    if (uniform(rng, 0, 2) == 0) {
      const auto src = static_cast<std::size_t>(uniform(rng, 0, long(c) - 1));
      const long sign = uniform(rng, 0, 1) ? 1 : -1;
      for (std::size_t r = 0; r < alt; ++r)
        m(r, c) = sign * m(r, src);
    }
  for (std::size_t r = 0; r < alt; ++r)
    if (uniform(rng, 0, 3) == 0)
      for (std::size_t c = 0; c < s.h2_rank; ++c)
        m(r, c) = 0;
  if (uniform(rng, 0, 1))
    s.mu = std::move(m);
  else
    s.cup = m.transpose();
  return s;
}

} // namespace lcq::random
