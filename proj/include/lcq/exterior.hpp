#pragma once

// Exterior algebra of a based lattice Z^m, with the symplectic class theta,
// its divided powers, and the top-degree duality pairing.
//
// Indices are 0-based. On a symplectic lattice of genus g the ambient basis
// is interleaved: eps_0, delta_0, eps_1, delta_1, ..., so eps_i has index 2i
// and delta_i has index 2i+1. The orientation form is
// eps_0 ^ delta_0 ^ ... ^ eps_{g-1} ^ delta_{g-1} = e_0 ^ e_1 ^ ... ^ e_{2g-1}.

#include "lcq/error.hpp"
#include "lcq/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lcq {

using IndexTuple = std::vector<std::size_t>;

// Element of Lambda^degree(Z^ambient_rank) as a sparse table over strictly
// increasing index tuples. Zero coefficients are never stored. The degree may
// exceed the ambient rank only for the zero element.
class ExtElement {
public:
  ExtElement(std::size_t ambient_rank, std::size_t degree)
      : rank_(ambient_rank), degree_(degree) {}

  // Multiplicative unit of Lambda^*(Z^m).
  static ExtElement unit(std::size_t ambient_rank) {
    ExtElement e(ambient_rank, 0);
    e.coeffs_[{}] = 1;
    return e;
  }

  // c * e_{i1} ^ ... ^ e_{ik} for an arbitrary index list; the list is sorted
  // with the permutation sign applied, and repeated indices give zero.
  static ExtElement monomial(std::size_t ambient_rank, IndexTuple indices,
                             const Integer &c = 1) {
    ExtElement e(ambient_rank, indices.size());
    for (auto i : indices)
      if (i >= ambient_rank)
        throw DimensionError("ExtElement::monomial: index " +
                             std::to_string(i) + " >= ambient rank " +
                             std::to_string(ambient_rank));
    int sign = sort_sign(indices);
    if (sign != 0 && c != 0)
      e.coeffs_[std::move(indices)] = sign * c;
    return e;
  }

  static ExtElement generator(std::size_t ambient_rank, std::size_t i) {
    return monomial(ambient_rank, {i});
  }

  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<IndexTuple, Integer> &coeffs() const noexcept {
    return coeffs_;
  }
  std::size_t term_count() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Integer coefficient(const IndexTuple &key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  ExtElement &operator+=(const ExtElement &o) {
    check_same_space(o, "+");
    for (const auto &[k, v] : o.coeffs_)
      accumulate(k, v);
    return *this;
  }
  ExtElement &operator-=(const ExtElement &o) {
    check_same_space(o, "-");
    for (const auto &[k, v] : o.coeffs_)
      accumulate(k, -v);
    return *this;
  }
  friend ExtElement operator+(ExtElement a, const ExtElement &b) {
    return a += b;
  }
  friend ExtElement operator-(ExtElement a, const ExtElement &b) {
    return a -= b;
  }
  friend ExtElement operator*(const Integer &c, ExtElement a) {
    if (c == 0) {
      a.coeffs_.clear();
      return a;
    }
    for (auto &[k, v] : a.coeffs_)
      v *= c;
    return a;
  }
  friend ExtElement operator-(ExtElement a) { return Integer(-1) * a; }

  friend bool operator==(const ExtElement &a, const ExtElement &b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ &&
           a.coeffs_ == b.coeffs_;
  }

  friend std::ostream &operator<<(std::ostream &os, const ExtElement &e) {
    if (e.is_zero())
      return os << '0';
    bool first = true;
    for (const auto &[k, v] : e.coeffs_) {
      os << (first ? "" : " + ") << v << "*(";
      for (std::size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << k[i];
      os << ')';
      first = false;
    }
    return os;
  }

  // Sign of the permutation sorting `idx` ascending (idx is sorted in
  // place); 0 if an index repeats.
  static int sort_sign(IndexTuple &idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
      for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i - 1] == idx[i])
        return 0;
    return sign;
  }

private:
  friend ExtElement wedge(const ExtElement &, const ExtElement &);

  void check_same_space(const ExtElement &o, const char *op) const {
    if (rank_ != o.rank_ || degree_ != o.degree_)
      throw DimensionError(std::string("ExtElement ") + op +
                           ": operands live in different spaces");
  }

  void accumulate(const IndexTuple &k, const Integer &v) {
    auto [it, inserted] = coeffs_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        coeffs_.erase(it);
    }
  }

  std::size_t rank_;
  std::size_t degree_;
  std::map<IndexTuple, Integer> coeffs_;
};

inline ExtElement wedge(const ExtElement &a, const ExtElement &b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("wedge: ambient ranks " +
                         std::to_string(a.ambient_rank()) + " and " +
                         std::to_string(b.ambient_rank()) + " differ");
  ExtElement out(a.ambient_rank(), a.degree() + b.degree());
  if (out.degree() > out.ambient_rank())
    return out;
  IndexTuple merged;
  for (const auto &[ka, va] : a.coeffs())
    for (const auto &[kb, vb] : b.coeffs()) {
      merged = ka;
      merged.insert(merged.end(), kb.begin(), kb.end());
      const int sign = ExtElement::sort_sign(merged);
      if (sign == 0)
        continue;
      Integer v = va * vb;
      if (sign < 0)
        v = -v;
      out.accumulate(merged, v);
    }
  return out;
}

inline ExtElement wedge_power(const ExtElement &a, std::size_t k) {
  ExtElement p = ExtElement::unit(a.ambient_rank());
  for (std::size_t i = 0; i < k; ++i)
    p = wedge(p, a);
  return p;
}

// Position of a basis vector on a symplectic lattice.
struct SymplecticBasisLabel {
  enum class Kind { Epsilon, Delta };

  std::size_t genus;
  std::size_t index; // 0..genus-1
  Kind kind;

  std::size_t ambient_index() const {
    if (index >= genus)
      throw DimensionError("SymplecticBasisLabel: index " +
                           std::to_string(index) + " >= genus " +
                           std::to_string(genus));
    return 2 * index + (kind == Kind::Delta ? 1 : 0);
  }

  static SymplecticBasisLabel from_ambient(std::size_t genus, std::size_t i) {
    if (i >= 2 * genus)
      throw DimensionError("SymplecticBasisLabel: ambient index out of range");
    return {genus, i / 2, i % 2 ? Kind::Delta : Kind::Epsilon};
  }
};

inline ExtElement epsilon(std::size_t genus, std::size_t i) {
  return ExtElement::generator(
      2 * genus,
      SymplecticBasisLabel{genus, i, SymplecticBasisLabel::Kind::Epsilon}
          .ambient_index());
}

inline ExtElement delta(std::size_t genus, std::size_t i) {
  return ExtElement::generator(
      2 * genus,
      SymplecticBasisLabel{genus, i, SymplecticBasisLabel::Kind::Delta}
          .ambient_index());
}

// theta = sum_i eps_i ^ delta_i
inline ExtElement theta(std::size_t genus) {
  ExtElement t(2 * genus, 2);
  for (std::size_t i = 0; i < genus; ++i)
    t += ExtElement::monomial(2 * genus, {2 * i, 2 * i + 1});
  return t;
}

// theta^k / k!, built directly as the sum over k-subsets S of {0..g-1} of
// the wedge of (eps_i ^ delta_i), i in S. Zero when k > g.
inline ExtElement theta_divided(std::size_t genus, std::size_t k) {
  ExtElement out(2 * genus, 2 * k);
  if (k > genus)
    return out;
  std::vector<bool> pick(genus, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    IndexTuple key;
    for (std::size_t i = 0; i < genus; ++i)
      if (pick[i]) {
        key.push_back(2 * i);
        key.push_back(2 * i + 1);
      }
    out += ExtElement::monomial(2 * genus, std::move(key));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Coefficient of the orientation form in a ^ b. deg a + deg b must be the
// ambient rank, which must be even.
inline Integer pd_pair(const ExtElement &a, const ExtElement &b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionError("pd_pair: ambient ranks differ");
  const std::size_t m = a.ambient_rank();
  if (m % 2 != 0)
    throw DimensionError("pd_pair: ambient rank " + std::to_string(m) +
                         " is odd");
  if (a.degree() + b.degree() != m)
    throw DimensionError("pd_pair: degrees " + std::to_string(a.degree()) +
                         " + " + std::to_string(b.degree()) + " != " +
                         std::to_string(m));
  IndexTuple top(m);
  for (std::size_t i = 0; i < m; ++i)
    top[i] = i;
  return wedge(a, b).coefficient(top);
}

// All strictly increasing k-tuples in {0..m-1}, lexicographic.
inline std::vector<IndexTuple> lex_tuples(std::size_t m, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > m)
    return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i)
    t[i] = i;
  for (;;) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == m - k + (i - 1))
      --i;
    if (i == 0)
      break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j)
      t[j] = t[j - 1] + 1;
  }
  return out;
}

// Coordinates on Lambda^2(Z^m): the C(m,2) pairs (i,j), i<j, lexicographic.
// Every matrix over Lambda^2 in this library uses this ordering.
inline std::vector<std::pair<std::size_t, std::size_t>>
alt2_basis(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      out.emplace_back(i, j);
  return out;
}

// Lex position of the pair (i,j), i<j, in alt2_basis(m).
inline std::size_t alt2_index(std::size_t m, std::size_t i, std::size_t j) {
  if (!(i < j && j < m))
    throw DimensionError("alt2_index: need i < j < m");
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

inline std::size_t choose2(std::size_t m) { return m * (m ? m - 1 : 0) / 2; }

// Coordinates of a degree-k element in the lex basis of Lambda^k.
inline std::vector<Integer> to_coordinates(const ExtElement &e) {
  const auto basis = lex_tuples(e.ambient_rank(), e.degree());
  std::vector<Integer> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out[i] = e.coefficient(basis[i]);
  return out;
}

// Matrix of Lambda^2(u) in the alt2_basis coordinates, for a square u acting
// on Z^m. Column (i,j) holds (u e_i) ^ (u e_j).
inline IntMatrix wedge2_matrix(const IntMatrix &u) {
  if (!u.is_square())
    throw DimensionError("wedge2_matrix: matrix is not square");
  const std::size_t m = u.rows();
  const auto basis = alt2_basis(m);
  IntMatrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [i, j] = basis[col];
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const auto [p, q] = basis[row];
      out(row, col) = u(p, i) * u(q, j) - u(q, i) * u(p, j);
    }
  }
  return out;
}

} // namespace lcq
