#pragma once

// gamma_2(G)/gamma_3(G) of a finitely presented group, computed in the free
// nilpotent group of class 2, F/gamma_3(F).
//
// Normal form: x_1^{a_1} ... x_n^{a_n} * prod_{i<j} [x_i,x_j]^{b_ij}, with
// the commutators central and [u,v] = u v u^-1 v^-1. Collecting
//   x^a * x^a' = x^{a+a'} * prod_{i<j} [x_i,x_j]^{-a_j a'_i}
// gives the bilinear correction used by nf_mul.

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/exterior.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/lattice.hpp"
#include "lcq/second_quotient.hpp"

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace lcq {

// Words are sequences of signed 1-based generator indices: +i is x_i and -i
// is x_i^-1.
using Word = std::vector<int>;

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  friend bool operator==(const GroupPresentation &,
                         const GroupPresentation &) = default;
};

struct Class2Element {
  std::vector<Integer> a; // exponent sums, length n
  std::vector<Integer> b; // basic commutators, length C(n,2), alt2 order

  static Class2Element identity(std::size_t n) {
    return {std::vector<Integer>(n), std::vector<Integer>(choose2(n))};
  }
  static Class2Element generator(std::size_t n, std::size_t i) {
    Class2Element x = identity(n);
    x.a.at(i) = 1;
    return x;
  }

  std::size_t rank() const noexcept { return a.size(); }
  bool is_identity() const {
    for (const auto &v : a)
      if (v != 0)
        return false;
    for (const auto &v : b)
      if (v != 0)
        return false;
    return true;
  }

  friend bool operator==(const Class2Element &,
                         const Class2Element &) = default;
};

namespace detail {

inline void check_class2(const Class2Element &x, const char *where) {
  if (x.b.size() != choose2(x.a.size()))
    throw DimensionError(std::string(where) +
                         ": commutator part has wrong length");
}

} // namespace detail

// Commutator-part correction from collecting x^a x^a'.
inline std::vector<Integer> collection_correction(const std::vector<Integer> &a,
                                                  const std::vector<Integer> &ap) {
  if (a.size() != ap.size())
    throw DimensionError("collection_correction: ranks differ");
  const std::size_t n = a.size();
  std::vector<Integer> c(choose2(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      c[k] = -a[j] * ap[i];
  return c;
}

// u ^ v in alt2 coordinates: coefficient u_i v_j - u_j v_i at (i,j).
inline std::vector<Integer> wedge_vectors(const std::vector<Integer> &u,
                                          const std::vector<Integer> &v) {
  if (u.size() != v.size())
    throw DimensionError("wedge_vectors: lengths differ");
  const std::size_t n = u.size();
  std::vector<Integer> w(choose2(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      w[k] = u[i] * v[j] - u[j] * v[i];
  return w;
}

inline Class2Element nf_mul(const Class2Element &x, const Class2Element &y) {
  if (x.rank() != y.rank())
    throw DimensionError("nf_mul: ranks " + std::to_string(x.rank()) +
                         " and " + std::to_string(y.rank()) + " differ");
  detail::check_class2(x, "nf_mul");
  detail::check_class2(y, "nf_mul");
  Class2Element z{x.a, x.b};
  for (std::size_t i = 0; i < z.a.size(); ++i)
    z.a[i] += y.a[i];
  const auto corr = collection_correction(x.a, y.a);
  for (std::size_t k = 0; k < z.b.size(); ++k)
    z.b[k] += y.b[k] + corr[k];
  return z;
}

// (a, b)^-1 = (-a, -b + Corr(a, a))
inline Class2Element nf_inverse(const Class2Element &x) {
  detail::check_class2(x, "nf_inverse");
  Class2Element z = x;
  const auto corr = collection_correction(x.a, x.a);
  for (auto &v : z.a)
    v = -v;
  for (std::size_t k = 0; k < z.b.size(); ++k)
    z.b[k] = corr[k] - x.b[k];
  return z;
}

// (a, b)^m = (m a, m b + C(m,2) Corr(a, a)), valid for every integer m.
inline Class2Element nf_pow(const Class2Element &x, const Integer &m) {
  detail::check_class2(x, "nf_pow");
  const Integer pairs = m * (m - 1) / 2;
  const auto corr = collection_correction(x.a, x.a);
  Class2Element z = x;
  for (auto &v : z.a)
    v *= m;
  for (std::size_t k = 0; k < z.b.size(); ++k)
    z.b[k] = m * x.b[k] + pairs * corr[k];
  return z;
}

// x y x^-1 y^-1
inline Class2Element nf_commutator(const Class2Element &x,
                                   const Class2Element &y) {
  return nf_mul(nf_mul(x, y), nf_mul(nf_inverse(x), nf_inverse(y)));
}

inline Class2Element eval_word(const Word &word, std::size_t n) {
  Class2Element z = Class2Element::identity(n);
  for (int letter : word) {
    const auto idx = static_cast<std::size_t>(std::abs(letter));
    if (letter == 0 || idx > n)
      throw InputError("eval_word: letter " + std::to_string(letter) +
                       " out of range for " + std::to_string(n) +
                       " generators");
    Class2Element g = Class2Element::generator(n, idx - 1);
    z = nf_mul(z, letter > 0 ? g : nf_inverse(g));
  }
  return z;
}

// Relator exponent sums as columns: the presentation matrix of G/D.
inline IntMatrix relator_matrix(const GroupPresentation &pres) {
  IntMatrix m(pres.generators, pres.relators.size());
  for (std::size_t k = 0; k < pres.relators.size(); ++k) {
    const auto z = eval_word(pres.relators[k], pres.generators);
    for (std::size_t i = 0; i < pres.generators; ++i)
      m(i, k) = z.a[i];
  }
  return m;
}

// H_1 = G/D.
inline AbelianGroup abelianization(const GroupPresentation &pres) {
  return cokernel(relator_matrix(pres));
}

// Generators of the lattice P of zero-abelian-part elements of the normal
// closure of the relators in F/gamma_3(F), as columns in alt2 coordinates:
//  - a_k ^ e_i for each relator k and generator i (commutator parts of
//    [r_k, x_i]);
//  - the commutator part of prod_k r_k^{c_k}, ascending k, for each c in a
//    basis of the kernel of the relator matrix.
inline IntMatrix relation_lattice(const GroupPresentation &pres) {
  const std::size_t n = pres.generators;
  std::vector<Class2Element> rel;
  rel.reserve(pres.relators.size());
  for (const auto &w : pres.relators)
    rel.push_back(eval_word(w, n));

  std::vector<std::vector<Integer>> gens;
  for (const auto &r : rel)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> e(n);
      e[i] = 1;
      gens.push_back(wedge_vectors(r.a, e));
    }

  IntMatrix a(n, rel.size());
  for (std::size_t k = 0; k < rel.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      a(i, k) = rel[k].a[i];
  const IntMatrix kernel = kernel_basis(a);
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    Class2Element prod = Class2Element::identity(n);
    for (std::size_t k = 0; k < rel.size(); ++k)
      if (kernel(k, c) != 0)
        prod = nf_mul(prod, nf_pow(rel[k], kernel(k, c)));
    gens.push_back(prod.b);
  }

  IntMatrix p(choose2(n), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t r = 0; r < p.rows(); ++r)
      p(r, c) = gens[c][r];
  return p;
}

inline AbelianGroup gamma2_mod_gamma3(const GroupPresentation &pres) {
  return cokernel(relation_lattice(pres));
}

enum class Verdict { Agree, Disagree, NotApplicable };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Agree:
    return "agree";
  case Verdict::Disagree:
    return "DISAGREE";
  case Verdict::NotApplicable:
    return "not-applicable";
  }
  return "?";
}

struct CrossValidation {
  Verdict verdict = Verdict::NotApplicable;
  AbelianGroup formula;
  std::optional<AbelianGroup> oracle;

  bool agrees() const noexcept { return verdict == Verdict::Agree; }
};

// Compares the cokernel formula against the nilpotent quotient. Refuses
// (NotApplicable) when H_1 has torsion, where the formula only gives the
// image of a surjection with finite kernel.
inline CrossValidation cross_validate(const SpaceData &space,
                                      const GroupPresentation &pres) {
  CrossValidation cv;
  cv.formula = second_lcs_quotient(space).group;
  if (!space.h1_torsion_free)
    return cv;
  const AbelianGroup h1 = abelianization(pres);
  if (h1 != AbelianGroup::free(space.h1_rank))
    throw InputError(space.name + ": presentation has H_1 = " +
                     h1.to_string() + ", space data says Z^" +
                     std::to_string(space.h1_rank));
  cv.oracle = gamma2_mod_gamma3(pres);
  cv.verdict = *cv.oracle == cv.formula ? Verdict::Agree : Verdict::Disagree;
  return cv;
}

} // namespace lcq
