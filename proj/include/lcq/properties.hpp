#pragma once

// Randomised invariant checks. Each returns one named Check; the first
// counterexample, if any, is described in Check::detail.

#include "lcq/exterior.hpp"
#include "lcq/fano.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/lattice.hpp"
#include "lcq/nilpotent.hpp"
#include "lcq/random.hpp"
#include "lcq/report.hpp"
#include "lcq/second_quotient.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>

namespace lcq::properties {

using random::Engine;
using random::uniform;

namespace detail {

inline Check ok(std::string name, std::size_t trials) {
  return {std::move(name), true, std::to_string(trials) + " trials"};
}

inline Check fail(std::string name, std::size_t trial, const std::string &why) {
  return {std::move(name), false,
          "trial " + std::to_string(trial) + ": " + why};
}

inline bool divisibility_chain(const IntMatrix &d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0)
      return false;
    if (i + 1 < n) {
      const Integer &a = d(i, i), &b = d(i + 1, i + 1);
      if (a == 0 && b != 0)
        return false;
      if (a != 0 && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
        return false;
    }
  }
  return true;
}

// Is v in the Z-span of the columns of k?
inline bool in_lattice(const IntMatrix &k, const std::vector<Integer> &v) {
  IntMatrix ext = k.with_zero_columns(1);
  for (std::size_t r = 0; r < k.rows(); ++r)
    ext(r, k.cols()) = v[r];
  return cokernel(ext) == cokernel(k);
}

} // namespace detail

inline Check snf_decomposition(Engine &rng, std::size_t trials,
                               std::size_t max_dim, long bound = 9) {
  const char *name = "snf: U*A*V = D, unimodular, divisibility chain";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 0, long(max_dim)));
    const auto cols = uniform(rng, 0, 3) == 0
                          ? rows
                          : static_cast<std::size_t>(uniform(rng, 0, long(max_dim)));
    const IntMatrix a = random::matrix(rng, rows, cols, -bound, bound);
    const SmithForm s = snf(a);
    if (!(s.U * a * s.V == s.D))
      return detail::fail(name, t, "U*A*V != D for " + a.shape());
    if (det_abs(s.U) != 1 || det_abs(s.V) != 1)
      return detail::fail(name, t, "U or V not unimodular for " + a.shape());
    if (!s.D.is_diagonal() || !detail::divisibility_chain(s.D))
      return detail::fail(name, t, "D not in Smith form for " + a.shape());
    if (a.is_square()) {
      const Integer d = det_abs(a);
      if (d != 0 && cokernel(a).order() != d)
        return detail::fail(name, t, "|coker| != |det| for " + a.shape());
    }
  }
  return detail::ok(name, trials);
}

inline Check cokernel_basis_invariance(Engine &rng, std::size_t trials,
                                       std::size_t max_dim) {
  const char *name = "cokernel invariant under unimodular change of basis";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 0, long(max_dim)));
    const auto cols = static_cast<std::size_t>(uniform(rng, 0, long(max_dim)));
    const IntMatrix a = random::matrix(rng, rows, cols, -6, 6);
    const IntMatrix b =
        random::unimodular(rng, rows) * a * random::unimodular(rng, cols);
    if (cokernel(a) != cokernel(b))
      return detail::fail(name, t, cokernel(a).to_string() + " vs " +
                                       cokernel(b).to_string());
  }
  return detail::ok(name, trials);
}

// A is built with rows orthogonal to a random v, so v is a kernel vector
// that kernel_basis did not see.
inline Check kernel_saturation(Engine &rng, std::size_t trials,
                               std::size_t max_dim) {
  const char *name = "kernel_basis annihilated and saturated";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, long(max_dim)));
    const auto rows = static_cast<std::size_t>(uniform(rng, 0, long(max_dim)));
    std::vector<Integer> v(cols);
    Integer vv = 0;
    for (auto &x : v) {
      x = uniform(rng, -3, 3);
      vv += x * x;
    }
    IntMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Integer> row(cols);
      Integer rv = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        row[c] = uniform(rng, -4, 4);
        rv += row[c] * v[c];
      }
      for (std::size_t c = 0; c < cols; ++c)
        a(r, c) = vv == 0 ? row[c] : Integer(vv * row[c] - rv * v[c]);
    }
    const IntMatrix k = kernel_basis(a);
    if (!(a * k).is_zero())
      return detail::fail(name, t, "A*K != 0 for " + a.shape());
    if (k.cols() != cols - rank(a))
      return detail::fail(name, t, "kernel dimension mismatch");
    if (!detail::in_lattice(k, v))
      return detail::fail(name, t, "kernel vector outside span of basis");
  }
  return detail::ok(name, trials);
}

inline Check wedge_graded_commutative(Engine &rng, std::size_t trials) {
  const char *name = "wedge: bilinear, graded-commutative, associative";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 7));
    auto deg = [&] { return static_cast<std::size_t>(uniform(rng, 0, long(m))); };
    const auto da = deg(), db = deg(), dc = deg();
    const ExtElement a = random::ext_element(rng, m, da, 4);
    const ExtElement a2 = random::ext_element(rng, m, da, 4);
    const ExtElement b = random::ext_element(rng, m, db, 4);
    const ExtElement c = random::ext_element(rng, m, dc, 4);
    ExtElement ba = wedge(b, a);
    if ((da * db) % 2 == 1)
      ba = -ba;
    if (!(wedge(a, b) == ba))
      return detail::fail(name, t, "a^b != (-1)^{|a||b|} b^a");
    if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c))))
      return detail::fail(name, t, "wedge not associative");
    const Integer k = uniform(rng, -3, 3);
    if (!(wedge(a + k * a2, b) == wedge(a, b) + k * wedge(a2, b)))
      return detail::fail(name, t, "wedge not linear in first argument");
  }
  return detail::ok(name, trials);
}

inline Check divided_power_integrality(std::size_t max_genus) {
  const char *name = "k! * theta^k/k! = theta^k";
  for (std::size_t g = 0; g <= max_genus; ++g) {
    Integer fact = 1;
    ExtElement power = ExtElement::unit(2 * g);
    const ExtElement th = theta(g);
    for (std::size_t k = 0; k <= g; ++k) {
      if (k > 0) {
        fact *= static_cast<unsigned long>(k);
        power = wedge(power, th);
      }
      if (!(fact * theta_divided(g, k) == power))
        return {name, false,
                "g=" + std::to_string(g) + " k=" + std::to_string(k)};
    }
  }
  return {name, true, "0 <= k <= g <= " + std::to_string(max_genus)};
}

inline Check pd_perfect_pairing(std::size_t max_genus) {
  const char *name = "pd_pair perfect on Lambda^k x Lambda^(2g-k)";
  for (std::size_t g = 1; g <= max_genus; ++g)
    for (std::size_t k = 0; k <= 2 * g; ++k) {
      const auto left = lex_tuples(2 * g, k);
      const auto right = lex_tuples(2 * g, 2 * g - k);
      IntMatrix p(left.size(), right.size());
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
          p(i, j) = pd_pair(ExtElement::monomial(2 * g, left[i]),
                            ExtElement::monomial(2 * g, right[j]));
      if (det_abs(p) != 1)
        return {name, false,
                "g=" + std::to_string(g) + " k=" + std::to_string(k)};
    }
  return {name, true, "g <= " + std::to_string(max_genus)};
}

inline Check cup_duality(Engine &rng, std::size_t trials) {
  const char *name = "rational_rank = ker_cup_dim = free rank of Coker mu";
  for (std::size_t t = 0; t < trials; ++t) {
    const SpaceData s = random::space(rng, 8, 10, 5);
    const std::size_t rr = rational_rank(s);
    const std::size_t kc = ker_cup_dim(s);
    const std::size_t fr = second_lcs_quotient(s).group.free_rank();
    if (rr != kc || rr != fr)
      return detail::fail(name, t,
                          s.name + ": " + std::to_string(rr) + ", " +
                              std::to_string(kc) + ", " + std::to_string(fr));
  }
  return detail::ok(name, trials);
}

inline Check second_quotient_basis_invariance(Engine &rng, std::size_t trials) {
  const char *name = "Coker mu invariant under change of basis of H^1, H_2";
  for (std::size_t t = 0; t < trials; ++t) {
    SpaceData s = random::space(rng, 8, 10, 5);
    const SecondQuotientResult before = second_lcs_quotient(s);
    const IntMatrix mu = mu_matrix(s);
    const IntMatrix h1 = random::unimodular(rng, s.h1_rank);
    const IntMatrix h2 = random::unimodular(rng, s.h2_rank);
    s.mu = wedge2_matrix(h1) * mu * h2;
    s.cup.reset();
    if (second_lcs_quotient(s) != before)
      return detail::fail(name, t, s.name);
    s.mu = s.mu->with_zero_columns(static_cast<std::size_t>(uniform(rng, 1, 3)));
    s.h2_rank = s.mu->cols();
    if (second_lcs_quotient(s) != before)
      return detail::fail(name, t, s.name + " with torsion columns");
  }
  return detail::ok(name, trials);
}

inline Check class2_group_axioms(Engine &rng, std::size_t trials) {
  const char *name = "class-2 normal form: group axioms";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto x = random::class2(rng, n), y = random::class2(rng, n),
               z = random::class2(rng, n);
    const auto e = Class2Element::identity(n);
    if (!(nf_mul(nf_mul(x, y), z) == nf_mul(x, nf_mul(y, z))))
      return detail::fail(name, t, "associativity");
    if (!(nf_mul(e, x) == x) || !(nf_mul(x, e) == x))
      return detail::fail(name, t, "identity");
    if (!nf_mul(x, nf_inverse(x)).is_identity() ||
        !nf_mul(nf_inverse(x), x).is_identity())
      return detail::fail(name, t, "inverse");
  }
  return detail::ok(name, trials);
}

inline Check class2_commutators(Engine &rng, std::size_t trials) {
  const char *name = "commutators central and bilinear in abelian parts";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto x = random::class2(rng, n), y = random::class2(rng, n),
               z = random::class2(rng, n);
    const auto c = nf_commutator(x, y);
    const Class2Element expect{std::vector<Integer>(n),
                               wedge_vectors(x.a, y.a)};
    if (!(c == expect))
      return detail::fail(name, t, "[x,y] != (0, a_x ^ a_y)");
    if (!(nf_mul(c, z) == nf_mul(z, c)))
      return detail::fail(name, t, "[x,y] not central");
    const Integer m = uniform(rng, -6, 6);
    Class2Element rep = Class2Element::identity(n);
    const Class2Element step = m >= 0 ? x : nf_inverse(x);
    for (long i = 0; i < std::abs(m.get_si()); ++i)
      rep = nf_mul(rep, step);
    if (!(nf_pow(x, m) == rep))
      return detail::fail(name, t, "power law at m=" + m.get_str());
  }
  return detail::ok(name, trials);
}

// w r w^-1 = [w, r] r, so conjugating shifts the commutator part by
// a_w ^ a_r, an element of the bracket lattice of a_r.
inline Check conjugation_shift(Engine &rng, std::size_t trials) {
  const char *name = "conjugate relators differ by bracket-lattice elements";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const Word r = random::word(rng, n, 6);
    const Word w = random::word(rng, n, 4);
    Word conj = w;
    conj.insert(conj.end(), r.begin(), r.end());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      conj.push_back(-*it);
    const auto er = eval_word(r, n), ec = eval_word(conj, n);
    if (er.a != ec.a)
      return detail::fail(name, t, "abelian parts differ");
    const auto shift = wedge_vectors(eval_word(w, n).a, er.a);
    IntMatrix brackets(choose2(n), n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> e(n);
      e[i] = 1;
      const auto col = wedge_vectors(er.a, e);
      for (std::size_t k = 0; k < col.size(); ++k)
        brackets(k, i) = col[k];
    }
    std::vector<Integer> diff(er.b.size());
    for (std::size_t k = 0; k < diff.size(); ++k)
      diff[k] = ec.b[k] - er.b[k];
    if (diff != shift || !detail::in_lattice(brackets, diff))
      return detail::fail(name, t, "unexpected commutator shift");
  }
  return detail::ok(name, trials);
}

inline Word inverse_word(const Word &w) {
  Word inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    inv.push_back(-*it);
  return inv;
}

inline Check tietze_invariance(Engine &rng, std::size_t trials) {
  const char *name = "gamma2/gamma3 invariant under Tietze moves";
  for (std::size_t t = 0; t < trials; ++t) {
    GroupPresentation p = random::presentation(rng, 3, 3, 6);
    if (p.relators.empty())
      p.relators.push_back(random::word(rng, p.generators, 6));
    const AbelianGroup base = gamma2_mod_gamma3(p);
    const auto k = static_cast<std::size_t>(
        uniform(rng, 0, long(p.relators.size()) - 1));

    GroupPresentation inv = p;
    inv.relators[k] = inverse_word(p.relators[k]);

    GroupPresentation conj = p;
    const int g = static_cast<int>(uniform(rng, 1, long(p.generators)));
    Word c{g};
    c.insert(c.end(), p.relators[k].begin(), p.relators[k].end());
    c.push_back(-g);
    conj.relators[k] = c;

    GroupPresentation prod = p;
    const auto s = static_cast<std::size_t>(
        uniform(rng, 0, long(p.relators.size()) - 1));
    if (s != k)
      prod.relators[k].insert(prod.relators[k].end(), p.relators[s].begin(),
                              p.relators[s].end());

    GroupPresentation shuffled = p;
    std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);

    for (const auto *q : {&inv, &conj, &prod, &shuffled})
      if (gamma2_mod_gamma3(*q) != base)
        return detail::fail(name, t, "moved presentation gives " +
                                         gamma2_mod_gamma3(*q).to_string() +
                                         " vs " + base.to_string());
  }
  return detail::ok(name, trials);
}

inline Check rank1_identity(std::size_t max_n) {
  const char *name = "det(E - I) = (-1)^n (1 - n)";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto [direct, formula] = fano::rank1_det_identity(n);
    if (direct != formula)
      return {name, false, "n=" + std::to_string(n)};
  }
  return {name, true, "n = 1.." + std::to_string(max_n)};
}

// Everything above at reduced sizes.
inline Report run_all(Engine &rng) {
  Report r;
  auto add = [&r](const Check &c) { r.add(c.name, c.passed, c.detail); };
  add(snf_decomposition(rng, 60, 12));
  add(cokernel_basis_invariance(rng, 40, 8));
  add(kernel_saturation(rng, 40, 8));
  add(wedge_graded_commutative(rng, 60));
  add(divided_power_integrality(6));
  add(pd_perfect_pairing(2));
  add(cup_duality(rng, 40));
  add(second_quotient_basis_invariance(rng, 40));
  add(class2_group_axioms(rng, 200));
  add(class2_commutators(rng, 200));
  add(conjugation_shift(rng, 100));
  add(tietze_invariance(rng, 40));
  add(rank1_identity(8));
  return r;
}

} // namespace lcq::properties
