#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ultrawave {

using Rat = mpq_class;

struct FieldMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q^e as an exact rational, e may be negative.
inline Rat rat_pow(long base, long e) {
  mpz_class b(base);
  mpz_class num, den(1);
  if (e >= 0) {
    mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    num = 1;
    mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-e));
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw DomainError("expected integer rational");
  return r.get_num().get_si();
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "a", "a/b" and finite decimals like "-1.25".
Rat rat_from_string(const std::string& s);

// Exact-or-floating real scalar. Arithmetic stays exact while both operands
// are exact and degrades to binary64 otherwise.
class RealV {
 public:
  RealV() : exact_(true), r_(0) {}
  RealV(const Rat& r) : exact_(true), r_(r) {}
  RealV(long n) : exact_(true), r_(n) {}
  static RealV flt(double x) {
    RealV v;
    v.exact_ = false;
    v.f_ = x;
    return v;
  }

  bool exact() const { return exact_; }
  const Rat& rat() const {
    if (!exact_) throw DomainError("RealV: not exact");
    return r_;
  }
  double to_double() const { return exact_ ? r_.get_d() : f_; }

  RealV operator+(const RealV& o) const {
    if (exact_ && o.exact_) return RealV(Rat(r_ + o.r_));
    return flt(to_double() + o.to_double());
  }
  RealV operator-(const RealV& o) const {
    if (exact_ && o.exact_) return RealV(Rat(r_ - o.r_));
    return flt(to_double() - o.to_double());
  }
  RealV operator*(const RealV& o) const {
    if (exact_ && o.exact_) return RealV(Rat(r_ * o.r_));
    return flt(to_double() * o.to_double());
  }
  RealV operator/(const RealV& o) const {
    if (exact_ && o.exact_) {
      if (o.r_ == 0) throw DomainError("RealV: division by zero");
      return RealV(Rat(r_ / o.r_));
    }
    return flt(to_double() / o.to_double());
  }
  RealV operator-() const {
    if (exact_) return RealV(Rat(-r_));
    return flt(-f_);
  }

  bool is_zero() const { return exact_ ? r_ == 0 : f_ == 0.0; }

  // Exact comparison when both exact; double comparison otherwise.
  bool operator==(const RealV& o) const {
    if (exact_ && o.exact_) return r_ == o.r_;
    return to_double() == o.to_double();
  }
  bool operator<=(const RealV& o) const {
    if (exact_ && o.exact_) return r_ <= o.r_;
    return to_double() <= o.to_double();
  }
  bool operator<(const RealV& o) const {
    if (exact_ && o.exact_) return r_ < o.r_;
    return to_double() < o.to_double();
  }

  RealV abs() const {
    if (exact_) return RealV(Rat(r_ < 0 ? -r_ : r_));
    return flt(f_ < 0 ? -f_ : f_);
  }

  // r^e for integer e; exact when the base is exact.
  RealV pow_int(long e) const {
    if (exact_) {
      if (r_ == 0) {
        if (e <= 0) throw DomainError("RealV: 0 to nonpositive power");
        return RealV(Rat(0));
      }
      mpz_class num, den;
      unsigned long a = static_cast<unsigned long>(e >= 0 ? e : -e);
      mpz_pow_ui(num.get_mpz_t(), r_.get_num().get_mpz_t(), a);
      mpz_pow_ui(den.get_mpz_t(), r_.get_den().get_mpz_t(), a);
      Rat out = (e >= 0) ? Rat(num, den) : Rat(den, num);
      out.canonicalize();
      return RealV(out);
    }
    double b = 1.0;
    double base = (e >= 0) ? f_ : 1.0 / f_;
    for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) b *= base;
    return flt(b);
  }

  std::string str() const {
    if (exact_) return rat_to_string(r_);
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", f_);
    return std::string(buf);
  }

 private:
  bool exact_;
  Rat r_;
  double f_ = 0.0;
};

}  // namespace ultrawave
