#include "grex/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grex {

NumericalSemigroup::NumericalSemigroup(std::vector<int64_t> gens) {
  if (gens.empty()) throw SemigroupError("semigroup needs at least one generator");
  for (int64_t g : gens)
    if (g <= 0) throw SemigroupError("semigroup generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  int64_t g = 0;
  for (int64_t a : gens) g = std::gcd(g, a);
  if (g != 1) throw SemigroupError("gcd of semigroup generators must be 1");

  // membership table by dynamic programming over the raw generators
  table_max_ = gens.back() * gens.front() + gens.back() + 1;
  member_.assign(size_t(table_max_) + 1, false);
  member_[0] = true;
  for (int64_t x = 1; x <= table_max_; ++x)
    for (int64_t a : gens) {
      if (a > x) break;
      if (member_[size_t(x - a)]) { member_[size_t(x)] = true; break; }
    }

  frobenius_ = -1;
  for (int64_t x = table_max_; x >= 0; --x)
    if (!member_[size_t(x)]) { frobenius_ = x; break; }
  for (int64_t x = 1; x < frobenius_ + 1; ++x)
    if (!member_[size_t(x)]) gaps_.push_back(x);

  // minimality: drop any generator lying in the semigroup of the others
  for (int64_t a : gens) {
    bool redundant = false;
    std::vector<int64_t> others;
    for (int64_t b : gens)
      if (b != a) others.push_back(b);
    if (!others.empty()) {
      std::vector<bool> tab(size_t(a) + 1, false);
      tab[0] = true;
      for (int64_t x = 1; x <= a; ++x)
        for (int64_t b : others) {
          if (b > x) break;
          if (tab[size_t(x - b)]) { tab[size_t(x)] = true; break; }
        }
      redundant = tab[size_t(a)];
    }
    if (!redundant) gens_.push_back(a);
  }

  for (int64_t f : gaps_) {
    bool pf = true;
    for (int64_t a : gens_)
      if (!contains(f + a)) { pf = false; break; }
    if (pf) pf_.push_back(f);
  }
}

bool NumericalSemigroup::contains(int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return member_[size_t(x)];
}

std::vector<int64_t> NumericalSemigroup::apery(int64_t m) const {
  if (m <= 0 || !contains(m)) throw SemigroupError("apery: m must be a nonzero element of H");
  std::vector<int64_t> ap(size_t(m), -1);
  for (int64_t r = 0; r < m; ++r)
    for (int64_t x = r;; x += m)
      if (contains(x)) { ap[size_t(r)] = x; break; }
  return ap;
}

RelativeIdeal::RelativeIdeal(const NumericalSemigroup* h, std::vector<int64_t> gens) : h_(h) {
  if (gens.empty()) throw SemigroupError("relative ideal needs at least one generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int64_t e : gens) {
    bool covered = false;
    for (int64_t e2 : gens_)
      if (h_->contains(e - e2)) { covered = true; break; }
    if (!covered) gens_.push_back(e);
  }
}

bool RelativeIdeal::contains(int64_t z) const {
  for (int64_t e : gens_)
    if (h_->contains(z - e)) return true;
  return false;
}

RelativeIdeal RelativeIdeal::translated(int64_t c) const {
  std::vector<int64_t> g = gens_;
  for (int64_t& x : g) x += c;
  return RelativeIdeal(h_, std::move(g));
}

std::string RelativeIdeal::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ") + H";
  return os.str();
}

RelativeIdeal rel_add(const RelativeIdeal& a, const RelativeIdeal& b) {
  std::vector<int64_t> gens;
  for (int64_t x : a.gens())
    for (int64_t y : b.gens()) gens.push_back(x + y);
  return RelativeIdeal(&a.semigroup(), std::move(gens));
}

// (A - B) = {z : z + B <= A}. Since A is stable under adding H, it is enough
// to require z + e in A for every generator e of B (any element of B is
// e + h, and z + e in A forces z + e + h in A). Every accepted z satisfies
// z >= min(A) - max(gens B), and every z with z + min(gens B) > FA is
// accepted, where FA = max(A-min(A) gaps) + min(A) bounds the last integer
// missing from A; so the scan below is exhaustive.
RelativeIdeal rel_colon(const RelativeIdeal& a, const RelativeIdeal& b) {
  const NumericalSemigroup& h = a.semigroup();
  int64_t fa = a.min() + h.frobenius();  // a contains every z > fa
  int64_t lo = a.min() - b.gens().back();
  int64_t hi = fa - b.gens().front() + 1;
  std::vector<int64_t> gens;
  for (int64_t z = lo; z <= hi; ++z) {
    bool ok = true;
    for (int64_t e : b.gens())
      if (!a.contains(z + e)) { ok = false; break; }
    if (ok) gens.push_back(z);
  }
  if (gens.empty()) gens.push_back(hi + 1);  // colon always contains large z
  return RelativeIdeal(&h, std::move(gens));
}

RelativeIdeal unit_ideal(const NumericalSemigroup& h) { return RelativeIdeal(&h, {0}); }

RelativeIdeal maximal_ideal(const NumericalSemigroup& h) {
  if (h.gens().front() == 1) return RelativeIdeal(&h, {1});
  return RelativeIdeal(&h, h.gens());
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  std::vector<int64_t> gens;
  int64_t f = h.frobenius();
  for (int64_t x = 0; x <= f + 1; ++x)
    if (!h.contains(f - x)) gens.push_back(x);
  if (gens.empty()) gens.push_back(0);
  return RelativeIdeal(&h, std::move(gens));
}

SurjectionReport surjection_criterion(const NumericalSemigroup& h) {
  SurjectionReport rep;
  rep.via_pf = true;
  for (int64_t f : h.pseudo_frobenius()) {
    bool hit = false;
    for (int64_t ai : h.gens()) {
      for (int64_t aj : h.gens())
        if (f + ai == aj) { hit = true; break; }
      if (hit) break;
    }
    if (!hit) { rep.via_pf = false; break; }
  }
  RelativeIdeal m = maximal_ideal(h);
  rep.via_colon = (rel_colon(rel_add(m, m), m) == m);
  if (rep.via_pf != rep.via_colon)
    throw std::logic_error("surjection criterion: PF route and colon route disagree");
  rep.verdict = rep.via_pf;
  return rep;
}

bool nearly_gorenstein(const NumericalSemigroup& h) {
  RelativeIdeal k = canonical_ideal(h);
  RelativeIdeal trace = rel_add(k, rel_colon(unit_ideal(h), k));
  for (int64_t a : maximal_ideal(h).gens())
    if (!trace.contains(a)) return false;
  return true;
}

bool self_dual_check(const NumericalSemigroup& h) {
  RelativeIdeal m = maximal_ideal(h);
  RelativeIdeal dual = rel_colon(canonical_ideal(h), m);
  RelativeIdeal shifted = m.translated(dual.min() - m.min());
  return dual == shifted;
}

}  // namespace grex
