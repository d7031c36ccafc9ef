#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ultrawave/rational.hpp"

namespace ultrawave {

// Exact element of Q(zeta_p), p prime, in the power basis {1, z, ..., z^(p-2)}
// with z = exp(2*pi*i/p).  For p = 2 this degenerates to the rationals.
// All character values, filter taps and Gram entries live here, so equality
// checks against Kronecker deltas are exact.
class Cyclo {
 public:
  Cyclo() : p_(2), c_(1, Rat(0)) {}
  explicit Cyclo(int p) : p_(p), c_(static_cast<size_t>(p - 1), Rat(0)) {}
  Cyclo(int p, const Rat& r) : Cyclo(p) { c_[0] = r; }

  static Cyclo zero(int p) { return Cyclo(p); }
  static Cyclo one(int p) { return Cyclo(p, Rat(1)); }
  static Cyclo from_rat(int p, const Rat& r) { return Cyclo(p, r); }

  // zeta_p^k (k arbitrary integer).
  static Cyclo zeta_pow(int p, long k) {
    Cyclo z(p);
    long e = ((k % p) + p) % p;
    if (e < p - 1) {
      z.c_[static_cast<size_t>(e)] = 1;
    } else {
      // z^(p-1) = -(1 + z + ... + z^(p-2))
      for (auto& x : z.c_) x = -1;
    }
    return z;
  }

  int p() const { return p_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rat& rational_part() const { return c_[0]; }
  Rat as_rational() const {
    if (!is_rational()) throw DomainError("Cyclo: not rational");
    return c_[0];
  }

  Cyclo operator+(const Cyclo& o) const {
    check(o);
    Cyclo r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Cyclo operator-(const Cyclo& o) const {
    check(o);
    Cyclo r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  Cyclo operator-() const {
    Cyclo r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Cyclo& operator+=(const Cyclo& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  Cyclo operator*(const Cyclo& o) const {
    check(o);
    // polynomial product with exponents reduced mod p, then z^(p-1) folded in
    std::vector<Rat> acc(static_cast<size_t>(p_), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        acc[(i + j) % static_cast<size_t>(p_)] += c_[i] * o.c_[j];
      }
    }
    Cyclo r(p_);
    for (size_t e = 0; e + 1 < static_cast<size_t>(p_); ++e) r.c_[e] = acc[e];
    const Rat& top = acc[static_cast<size_t>(p_ - 1)];
    if (top != 0)
      for (auto& x : r.c_) x -= top;
    return r;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo scaled(const Rat& r) const {
    Cyclo out(*this);
    for (auto& x : out.c_) x *= r;
    return out;
  }

  Cyclo conj() const {
    // conj(z^k) = z^(p-k)
    Cyclo r(p_);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      long e = (k == 0) ? 0 : p_ - static_cast<long>(k);
      if (e < p_ - 1) {
        r.c_[static_cast<size_t>(e)] += c_[k];
      } else {
        for (auto& x : r.c_) x -= c_[k];
      }
    }
    return r;
  }

  // z * conj(z); lies in the (real) maximal totally real subfield.
  Cyclo abs2() const { return *this * conj(); }

  bool operator==(const Cyclo& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    static const double kTwoPi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      double ang = kTwoPi * static_cast<double>(k) / p_;
      acc += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }
  double abs_double() const { return std::abs(to_complex()); }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += rat_to_string(c_[i]);
    }
    s += "]";
    return s;
  }

 private:
  void check(const Cyclo& o) const {
    if (p_ != o.p_) throw FieldMismatchError("Cyclo: mixed cyclotomic orders");
  }
  int p_;
  std::vector<Rat> c_;
};

}  // namespace ultrawave
