#pragma once

// Exact field scalars: prime fields F_p (runtime modulus) and arbitrary
// precision rationals. These are the only coefficient types in the library;
// no floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace grex {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_prime_u32(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Which field a computation runs over. p == 0 selects the rationals.
struct FieldSpec {
  uint32_t p = 0;

  FieldSpec() = default;
  explicit FieldSpec(uint64_t prime) : p(static_cast<uint32_t>(prime)) {
    if (prime != 0) {
      if (prime < 2 || prime >= (uint64_t(1) << 31) || !is_prime_u32(prime))
        throw FieldError("field characteristic must be a prime < 2^31 (or 0 for the rationals)");
    }
  }
  static FieldSpec rationals() { return FieldSpec(); }
  bool is_rational() const { return p == 0; }
  bool operator==(const FieldSpec& o) const { return p == o.p; }
  std::string name() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

// Element of F_p carrying its modulus. A value with p_ == 0 is an unattached
// integer literal (Eigen and generic code create 0/1 this way); it adopts the
// other operand's modulus on first contact.
class Fp {
 public:
  Fp() = default;
  Fp(int n) : raw_(n < 0 ? -int64_t(n) : int64_t(n)), neg_(n < 0) {}
  Fp(long n) : raw_(n < 0 ? -int64_t(n) : int64_t(n)), neg_(n < 0) {}
  Fp(long long n) : raw_(n < 0 ? -n : n), neg_(n < 0) {}
  Fp(unsigned long long n) : raw_(int64_t(n)) {}

  static Fp make(int64_t n, uint32_t p) {
    Fp r;
    r.p_ = p;
    int64_t m = n % int64_t(p);
    if (m < 0) m += p;
    r.raw_ = m;
    return r;
  }

  uint32_t modulus() const { return p_; }
  uint64_t value() const { return uint64_t(raw_); }
  bool attached() const { return p_ != 0; }
  bool is_zero() const { return raw_ == 0; }

  Fp& operator+=(const Fp& o) {
    uint32_t p = unify(o);
    if (p == 0) { add_raw(o); return *this; }
    int64_t s = rep(p) + o.rep(p);
    raw_ = s >= p ? s - p : s;
    neg_ = false;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    uint32_t p = unify(o);
    if (p == 0) { Fp t = o; t.neg_ = !t.neg_ && t.raw_ != 0; add_raw(t); return *this; }
    int64_t s = rep(p) - o.rep(p);
    raw_ = s < 0 ? s + p : s;
    neg_ = false;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    uint32_t p = unify(o);
    if (p == 0) { raw_ *= o.raw_; neg_ = neg_ != o.neg_; return *this; }
    raw_ = int64_t((uint64_t(rep(p)) * uint64_t(o.rep(p))) % p);
    neg_ = false;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  Fp operator+(const Fp& o) const { Fp r = *this; r += o; return r; }
  Fp operator-(const Fp& o) const { Fp r = *this; r -= o; return r; }
  Fp operator*(const Fp& o) const { Fp r = *this; r *= o; return r; }
  Fp operator/(const Fp& o) const { Fp r = *this; r /= o; return r; }
  Fp operator-() const {
    Fp r = *this;
    if (r.p_ != 0) { if (r.raw_ != 0) r.raw_ = int64_t(r.p_) - r.raw_; }
    else r.neg_ = !r.neg_ && r.raw_ != 0;
    return r;
  }

  Fp inv() const {
    if (p_ == 0) {
      if (raw_ == 1) return *this;
      throw FieldError("cannot invert an unattached F_p literal");
    }
    if (raw_ == 0) throw FieldError("division by zero in F_p");
    // extended Euclid
    int64_t a = raw_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      int64_t q = a / b;
      int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return make(x0, p_);
  }

  bool operator==(const Fp& o) const {
    uint32_t p = p_ != 0 ? p_ : o.p_;
    if (p == 0) return raw_ == o.raw_ && (neg_ == o.neg_ || raw_ == 0);
    return rep(p) == o.rep(p);
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string str() const {
    if (p_ == 0 && neg_) return "-" + std::to_string(raw_);
    return std::to_string(p_ == 0 ? raw_ : rep(p_));
  }

 private:
  int64_t raw_ = 0;   // canonical 0 <= raw_ < p_ when attached
  uint32_t p_ = 0;
  bool neg_ = false;  // sign of an unattached literal

  int64_t rep(uint32_t p) const {
    int64_t m = raw_ % int64_t(p);
    if (neg_) m = -m;
    if (m < 0) m += p;
    return m;
  }
  void add_raw(const Fp& o) {
    int64_t a = neg_ ? -raw_ : raw_;
    int64_t b = o.neg_ ? -o.raw_ : o.raw_;
    int64_t s = a + b;
    neg_ = s < 0;
    raw_ = neg_ ? -s : s;
  }
  uint32_t unify(const Fp& o) {
    uint32_t p = p_ != 0 ? p_ : o.p_;
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      throw FieldError("mixed F_p moduli");
    if (p != 0 && p_ == 0) { raw_ = rep(p); neg_ = false; p_ = p; }
    return p;
  }
};

// Rational number. Thin eager wrapper over mpq_class: keeps values canonical
// (reduced, positive denominator) and avoids gmpxx expression templates
// leaking into generic code.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(long(n)) {}
  Rat(long long n) { q_ = make_int(n); }
  Rat(unsigned long long n) { q_ = make_int(int64_t(n)); }
  Rat(long long num, long long den) {
    if (den == 0) throw FieldError("zero denominator");
    q_ = mpq_class(make_int(num), make_int(den));
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  bool is_zero() const { return sgn(q_) == 0; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw FieldError("division by zero in QQ");
    q_ /= o.q_;
    return *this;
  }
  Rat operator+(const Rat& o) const { Rat r = *this; r += o; return r; }
  Rat operator-(const Rat& o) const { Rat r = *this; r -= o; return r; }
  Rat operator*(const Rat& o) const { Rat r = *this; r *= o; return r; }
  Rat operator/(const Rat& o) const { Rat r = *this; r /= o; return r; }
  Rat operator-() const { Rat r; r.q_ = -q_; return r; }

  Rat inv() const {
    if (is_zero()) throw FieldError("division by zero in QQ");
    Rat r;
    r.q_ = 1 / q_;
    return r;
  }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
  static mpz_class make_int(long long n) { return mpz_class(static_cast<long>(n)); }
};

// Uniform construction of field scalars from integers/fractions.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Fp> {
  static Fp from_int(int64_t n, const FieldSpec& f) { return Fp::make(n, f.p); }
  static Fp one(const FieldSpec& f) { return Fp::make(1, f.p); }
  static Fp zero(const FieldSpec& f) { return Fp::make(0, f.p); }
  static FieldSpec spec_of(const Fp& x) { return FieldSpec(x.modulus()); }
};

template <>
struct FieldOps<Rat> {
  static Rat from_int(int64_t n, const FieldSpec&) { return Rat((long long)n); }
  static Rat one(const FieldSpec&) { return Rat(1); }
  static Rat zero(const FieldSpec&) { return Rat(0); }
  static FieldSpec spec_of(const Rat&) { return FieldSpec::rationals(); }
};

}  // namespace grex
