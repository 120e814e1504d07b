#pragma once

// The Fano surface F of a smooth cubic threefold, with Albanese variety A of
// dimension 5. The map f = a_* o a^* : H^2(A) -> H^8(A) is cup product with
// [F] = theta^3/3!; under Poincare duality it is the symmetric form
//   b(u, v) = <u ^ v ^ theta^3/3!, [A]>
// on Lambda^2 H^1(A) = Z^45. From |det f| = 4 and |det a^*| = |det a_*| one
// gets |Coker a_*| = 2, hence D/(D,G) = Z/2.

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/exterior.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/lattice.hpp"
#include "lcq/report.hpp"
#include "lcq/second_quotient.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lcq::fano {

// Geometric facts taken as given. None of these is recomputed here.
struct FanoConstants {
  // H^1(A, Z) has rank 2 * genus.
  std::size_t genus = 5;
  // Albanese pullback and pushforward have equal |det|.
  bool det_astar_equals_det_alower = true;
  // Curve C of lines meeting a fixed line: (C^2) = 5, the number of lines
  // meeting two skew lines on a cubic surface.
  long c_self_intersection = 5;
  // [F] = theta^k / k! with k = 3.
  std::size_t class_of_f_power = 3;
  // a_*[C] = 2 * theta^4 / 4!.
  long a_push_c_multiplier = 2;
  std::size_t a_push_c_power = 4;
  // H_1(F, Z) is torsion free.
  bool h1_torsion_free = true;
};

inline const FanoConstants &constants() {
  static const FanoConstants c;
  return c;
}

class BilinearForm {
public:
  explicit BilinearForm(const FanoConstants &c = constants())
      : genus_(c.genus),
        class_of_f_(theta_divided(c.genus, c.class_of_f_power)) {}

  Integer operator()(const ExtElement &u, const ExtElement &v) const {
    return pd_pair(wedge(u, v), class_of_f_);
  }

  IntMatrix gram(const std::vector<ExtElement> &left,
                 const std::vector<ExtElement> &right) const {
    IntMatrix g(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        g(i, j) = (*this)(left[i], right[j]);
    return g;
  }

  std::size_t genus() const noexcept { return genus_; }

private:
  std::size_t genus_;
  ExtElement class_of_f_;
};

// e_i ^ e_j for the pairs of alt2_basis(2g), in order.
inline std::vector<ExtElement> lex_basis(std::size_t genus) {
  std::vector<ExtElement> out;
  for (auto [i, j] : alt2_basis(2 * genus))
    out.push_back(ExtElement::monomial(2 * genus, {i, j}));
  return out;
}

// Spanning family of M: eps_i^eps_j (i<j), delta_i^delta_j (i<j), then
// eps_i^delta_j (i != j), each block lexicographic.
inline std::vector<ExtElement> m_basis(std::size_t genus) {
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = i + 1; j < genus; ++j)
      out.push_back(wedge(epsilon(genus, i), epsilon(genus, j)));
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = i + 1; j < genus; ++j)
      out.push_back(wedge(delta(genus, i), delta(genus, j)));
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = 0; j < genus; ++j)
      if (i != j)
        out.push_back(wedge(epsilon(genus, i), delta(genus, j)));
  return out;
}

// The dual family (-delta_i^delta_j, -eps_i^eps_j, -eps_j^delta_i), matched
// term by term with m_basis.
inline std::vector<ExtElement> m_dual_basis(std::size_t genus) {
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = i + 1; j < genus; ++j)
      out.push_back(-wedge(delta(genus, i), delta(genus, j)));
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = i + 1; j < genus; ++j)
      out.push_back(-wedge(epsilon(genus, i), epsilon(genus, j)));
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = 0; j < genus; ++j)
      if (i != j)
        out.push_back(-wedge(epsilon(genus, j), delta(genus, i)));
  return out;
}

// eps_i ^ delta_i
inline std::vector<ExtElement> n_basis(std::size_t genus) {
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < genus; ++i)
    out.push_back(wedge(epsilon(genus, i), delta(genus, i)));
  return out;
}

inline IntMatrix all_ones(std::size_t n) {
  IntMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e(i, j) = 1;
  return e;
}

// 45x45 matrix of b in the lex basis of Lambda^2(Z^10).
inline IntMatrix build_b_matrix(const FanoConstants &c = constants()) {
  const BilinearForm b(c);
  const auto basis = lex_basis(c.genus);
  return b.gram(basis, basis);
}

inline IntMatrix m_block(const FanoConstants &c = constants()) {
  const auto m = m_basis(c.genus);
  return BilinearForm(c).gram(m, m);
}

inline IntMatrix n_block(const FanoConstants &c = constants()) {
  const auto n = n_basis(c.genus);
  return BilinearForm(c).gram(n, n);
}

// |det f| = |disc b|.
inline Integer det_f(const FanoConstants &c = constants()) {
  return det_abs(build_b_matrix(c));
}

inline Report verify_block_decomposition(const FanoConstants &c = constants()) {
  const BilinearForm b(c);
  const auto m = m_basis(c.genus);
  const auto n = n_basis(c.genus);
  const std::size_t g = c.genus;
  Report r;

  const IntMatrix full = build_b_matrix(c);
  r.add("b symmetric", full == full.transpose(), full.shape());

  const bool spans = m.size() + n.size() == choose2(2 * g);
  r.add("M + N spans Lambda^2", spans,
        std::to_string(m.size()) + " + " + std::to_string(n.size()));

  const IntMatrix cross = b.gram(m, n);
  r.add("M orthogonal to N", cross.is_zero(),
        cross.is_zero() ? "all cross entries 0" : "nonzero cross entry");

  const IntMatrix dual = b.gram(m, m_dual_basis(g));
  r.add("dual basis of M", dual == IntMatrix::identity(m.size()),
        "b(m_k, m*_l) = delta_kl over " + std::to_string(m.size()) + "x" +
            std::to_string(m.size()));

  const Integer det_m = det_abs(b.gram(m, m));
  r.add("M unimodular", det_m == 1, "|det b|_M| = " + det_m.get_str());

  const IntMatrix nb = b.gram(n, n);
  const IntMatrix e_minus_i = all_ones(g) - IntMatrix::identity(g);
  r.add("N block = E - I", nb == e_minus_i, nb.shape());
  const Integer det_n = det(nb);
  r.add("det(E - I) = 4", det_n == 4, "det = " + det_n.get_str());

  const Integer df = det_abs(full);
  const Integer abs_n = abs(det_n);
  r.add("det(M) * det(N) = det f", det_m * abs_n == df,
        det_m.get_str() + " * " + abs_n.get_str() + " = " + df.get_str());
  return r;
}

// For E the all-ones n x n matrix (rank 1, trace n):
// det(E - I) = (-1)^n (1 - tr E). Returns (|det(E - I)|, |(-1)^n (1 - n)|).
inline std::pair<Integer, Integer> rank1_det_identity(std::size_t n) {
  if (n == 0)
    throw InputError("rank1_det_identity: n must be >= 1");
  const IntMatrix e = all_ones(n);
  const Integer direct = det_abs(e - IntMatrix::identity(n));
  Integer formula = Integer(1) - Integer(static_cast<unsigned long>(n));
  if (n % 2 == 1)
    formula = -formula;
  return {direct, abs(formula)};
}

// Coker a_* from |det f| = |det a^*| |det a_*| and |det a^*| = |det a_*|.
// Only a group whose order is squarefree is determined by its order alone,
// so anything else is reported as an inconsistency.
inline SecondQuotientResult
second_quotient_from_discriminant(const Integer &disc,
                                  const FanoConstants &c = constants()) {
  if (!c.det_astar_equals_det_alower)
    throw InconsistencyError(
        "|det a^*| = |det a_*| is not recorded; cannot split |det f|");
  if (disc <= 0)
    throw InconsistencyError("|det f| = " + disc.get_str() +
                             " is not a nonzero index");
  if (!mpz_perfect_square_p(disc.get_mpz_t()))
    throw InconsistencyError("|det f| = " + disc.get_str() +
                             " is not |det a_*|^2 for an integer |det a_*|");
  Integer order;
  mpz_sqrt(order.get_mpz_t(), disc.get_mpz_t());
  Integer rest = order;
  for (Integer p = 2; p * p <= rest; ++p)
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()))
        throw InconsistencyError("Coker a_* has order " + order.get_str() +
                                 ", which does not determine the group");
    }
  AbelianGroup g = order == 1 ? AbelianGroup::trivial()
                              : AbelianGroup{0, {order}};
  return {std::move(g),
          c.h1_torsion_free ? Exactness::Exact : Exactness::UpToFiniteKernel};
}

inline SecondQuotientResult
fano_second_quotient(const FanoConstants &c = constants()) {
  const Integer disc = det_f(c);
  if (disc != 4)
    throw InconsistencyError("|det f| = " + disc.get_str() + ", expected 4");
  return second_quotient_from_discriminant(disc, c);
}

inline Report parity_check(const FanoConstants &c = constants()) {
  const std::size_t g = c.genus;
  Report r;

  const ExtElement divided = theta_divided(g, c.a_push_c_power);
  const ExtElement push_c = Integer(c.a_push_c_multiplier) * divided;
  bool all_even = true;
  std::size_t tested = 0;
  for (const auto &alpha : lex_basis(g)) {
    const Integer v = pd_pair(alpha, push_c);
    ++tested;
    if (!mpz_even_p(v.get_mpz_t()))
      all_even = false;
  }
  r.add("(alpha . a_*[C]) even", all_even,
        std::to_string(tested) + " basis classes of Lambda^2");

  const bool odd = c.c_self_intersection % 2 != 0;
  r.add("(C^2) odd", odd,
        "(C^2) = " + std::to_string(c.c_self_intersection) + ", d([C]) = " +
            std::to_string(((c.c_self_intersection % 2) + 2) % 2));

  // theta^k computed by repeated wedge must be k! times the divided power.
  const ExtElement power = wedge_power(theta(g), c.a_push_c_power);
  Integer fact = 1;
  for (std::size_t i = 2; i <= c.a_push_c_power; ++i)
    fact *= static_cast<unsigned long>(i);
  bool integral = power.term_count() == divided.term_count();
  for (const auto &[key, v] : power.coeffs())
    if (!mpz_divisible_p(v.get_mpz_t(), fact.get_mpz_t()) ||
        v / fact != divided.coefficient(key))
      integral = false;
  bool unit_coeffs = true;
  for (const auto &[key, v] : divided.coeffs())
    if (v != 1)
      unit_coeffs = false;
  r.add("theta^4/4! integral", integral && unit_coeffs,
        std::to_string(divided.term_count()) + " terms, coefficients 1");
  return r;
}

} // namespace lcq::fano
