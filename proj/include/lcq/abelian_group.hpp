#pragma once

#include "lcq/error.hpp"
#include "lcq/int_matrix.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace lcq {

// Finitely generated abelian group Z^free_rank x Z/d1 x ... x Z/dt in
// invariant-factor form: every d >= 2 and d_i | d_{i+1}. Two values compare
// equal iff the groups are isomorphic.
class AbelianGroup {
public:
  AbelianGroup() = default;

  AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2)
        throw InputError("AbelianGroup: invariant factor " +
                         torsion_[i].get_str() + " is < 2");
      if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(),
                                    torsion_[i - 1].get_mpz_t()))
        throw InputError("AbelianGroup: " + torsion_[i - 1].get_str() +
                         " does not divide " + torsion_[i].get_str());
    }
  }

  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroup trivial() { return {}; }
  static AbelianGroup cyclic(long order) {
    if (order == 0)
      return free(1);
    if (order == 1)
      return trivial();
    return {0, {Integer(order)}};
  }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer> &torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept {
    return free_rank_ == 0 && torsion_.empty();
  }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  // Order of a finite group; 0 stands for "infinite".
  Integer order() const {
    if (free_rank_ > 0)
      return 0;
    Integer o = 1;
    for (const auto &d : torsion_)
      o *= d;
    return o;
  }

  // "Z^r x Z/d1 x ... x Z/dt", or "0" for the trivial group.
  std::string to_string() const {
    if (is_trivial())
      return "0";
    std::string s;
    if (free_rank_ > 0)
      s = "Z^" + std::to_string(free_rank_);
    for (const auto &d : torsion_) {
      if (!s.empty())
        s += " x ";
      s += "Z/" + d.get_str();
    }
    return s;
  }

  friend bool operator==(const AbelianGroup &a, const AbelianGroup &b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

  friend std::ostream &operator<<(std::ostream &os, const AbelianGroup &g) {
    return os << g.to_string();
  }

private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

} // namespace lcq
