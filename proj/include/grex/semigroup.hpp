#pragma once

// Numerical semigroups H = <a_1..a_l> and their relative ideals E + H, with
// the invariants used by the canonical-ideal criteria: Frobenius number,
// gaps, Apery sets, pseudo-Frobenius numbers, colon calculus, canonical
// ideal, the two routes of the surjection criterion, nearly-Gorenstein and
// self-canonical-dual checks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grex {

class SemigroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalSemigroup {
 public:
  // Minimalizes the generators; throws unless gcd = 1.
  explicit NumericalSemigroup(std::vector<int64_t> gens);

  const std::vector<int64_t>& gens() const { return gens_; }
  int64_t frobenius() const { return frobenius_; }
  const std::vector<int64_t>& gaps() const { return gaps_; }

  // Membership for any integer (negative ints are never members).
  bool contains(int64_t x) const;

  std::vector<int64_t> apery(int64_t m) const;
  const std::vector<int64_t>& pseudo_frobenius() const { return pf_; }
  int type() const { return int(pf_.size()); }

  int64_t multiplicity() const { return gens_.front(); }
  int embdim() const { return int(gens_.size()); }
  bool minimal_multiplicity() const { return multiplicity() == embdim(); }
  bool symmetric() const { return pf_.size() == 1 && pf_[0] == frobenius_; }

 private:
  std::vector<int64_t> gens_;
  std::vector<bool> member_;  // table for 0..table_max
  int64_t table_max_ = 0;
  int64_t frobenius_ = -1;
  std::vector<int64_t> gaps_;
  std::vector<int64_t> pf_;
};

// E + H for a finite set E of integers, normalized so that no generator lies
// in another generator + H.
class RelativeIdeal {
 public:
  RelativeIdeal(const NumericalSemigroup* h, std::vector<int64_t> gens);

  const NumericalSemigroup& semigroup() const { return *h_; }
  const std::vector<int64_t>& gens() const { return gens_; }
  int64_t min() const { return gens_.front(); }
  bool contains(int64_t z) const;
  bool operator==(const RelativeIdeal& o) const { return gens_ == o.gens_; }
  bool operator!=(const RelativeIdeal& o) const { return !(*this == o); }
  RelativeIdeal translated(int64_t c) const;
  std::string str() const;

 private:
  const NumericalSemigroup* h_;
  std::vector<int64_t> gens_;  // normalized, sorted
};

RelativeIdeal rel_add(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal rel_colon(const RelativeIdeal& a, const RelativeIdeal& b);

// H itself and its maximal ideal M(H) = {h in H : h > 0} as relative ideals.
RelativeIdeal unit_ideal(const NumericalSemigroup& h);
RelativeIdeal maximal_ideal(const NumericalSemigroup& h);

// K = {F(H) - z : z not in H} (gaps reflected at the Frobenius number).
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);

struct SurjectionReport {
  bool verdict = false;
  bool via_pf = false;     // every f in PF(H) has f + a_i = a_j
  bool via_colon = false;  // (2M - M) = M
};

// Both routes are computed; disagreement is an implementation bug.
SurjectionReport surjection_criterion(const NumericalSemigroup& h);

bool nearly_gorenstein(const NumericalSemigroup& h);
bool self_dual_check(const NumericalSemigroup& h);

}  // namespace grex
