#include "ultrawave/radial.hpp"

#include <cmath>

namespace ultrawave {

namespace {

// q^e for rational e; exact when e is an integer.
RealV q_pow_rat(long q, const Rat& e) {
  if (rat_is_integer(e)) return RealV(rat_pow(q, rat_to_long(e)));
  return RealV::flt(std::pow(static_cast<double>(q), e.get_d()));
}

}  // namespace

Tail Tail::power(const RealV& A, const Rat& gamma) {
  Tail t;
  t.kind = Kind::Power;
  t.A = A;
  t.gamma = gamma;
  return t;
}

Tail Tail::log_linear(const RealV& a, const RealV& b, const Rat& gamma) {
  Tail t;
  t.kind = Kind::LogLinear;
  t.a = a;
  t.b = b;
  t.gamma = gamma;
  return t;
}

Tail Tail::bessel_pow(const Rat& sigma) {
  Tail t;
  t.kind = Kind::BesselPow;
  t.sigma = sigma;
  return t;
}

RealV Tail::value(long q, int m) const {
  switch (kind) {
    case Kind::Zero:
      return RealV(Rat(0));
    case Kind::Power:
      return A * q_pow_rat(q, Rat(gamma * m));
    case Kind::LogLinear:
      return (a + b * RealV(m)) * q_pow_rat(q, Rat(gamma * m));
    case Kind::BesselPow: {
      Rat base = Rat(1) + rat_pow(q, 2L * m);
      if (rat_is_integer(sigma)) return RealV(base).pow_int(rat_to_long(sigma));
      return RealV::flt(std::pow(base.get_d(), sigma.get_d()));
    }
  }
  throw DomainError("Tail::value: bad kind");
}

std::optional<Rat> Tail::outer_asymptotic_exponent() const {
  switch (kind) {
    case Kind::Zero: return std::nullopt;
    case Kind::Power:
    case Kind::LogLinear: return gamma;
    case Kind::BesselPow: return Rat(2 * sigma);
  }
  return std::nullopt;
}

std::optional<Rat> Tail::inner_asymptotic_exponent() const {
  switch (kind) {
    case Kind::Zero: return std::nullopt;
    case Kind::Power:
    case Kind::LogLinear: return gamma;
    case Kind::BesselPow: return Rat(0);  // (1+q^{2m})^sigma -> 1
  }
  return std::nullopt;
}

RadialProfile::RadialProfile(const FieldParams& fp, std::map<int, RealV> window, Tail inner,
                             Tail outer)
    : fp_(fp), window_(std::move(window)), inner_(inner), outer_(outer) {
  // drop exact zeros at the window edges only if fully zero profile
  // junction consistency: the tail formulas must reproduce the edge values
  if (!window_.empty()) {
    auto check_junction = [&](const Tail& t, int m) {
      if (t.kind == Tail::Kind::Zero) return;
      RealV tv = t.value(fp_.q, m);
      RealV wv = window_.at(m);
      if (tv.exact() && wv.exact()) {
        if (!(tv == wv)) throw DomainError("RadialProfile: tail/window junction mismatch");
      } else {
        double d = std::abs(tv.to_double() - wv.to_double());
        if (d > 1e-9 * (1.0 + std::abs(wv.to_double())))
          throw DomainError("RadialProfile: tail/window junction mismatch");
      }
    };
    check_junction(inner_, window_.begin()->first);
    check_junction(outer_, window_.rbegin()->first);
  }
  // integrability bookkeeping (sum over shells of |F| * q^m near both ends)
  bool inner_ok = true, outer_ok = true;
  if (auto g = inner_.inner_asymptotic_exponent()) inner_ok = (*g > -1);
  if (auto g = outer_.outer_asymptotic_exponent()) outer_ok = (*g < -1);
  is_l1_ = inner_ok && outer_ok;
}

RadialProfile RadialProfile::zero(const FieldParams& fp) {
  return RadialProfile(fp, {}, Tail::zero(), Tail::zero());
}

RealV RadialProfile::value_at_shell(int m) const {
  auto it = window_.find(m);
  if (it != window_.end()) return it->second;
  if (window_.empty()) return (m <= 0 ? inner_ : outer_).value(fp_.q, m);
  if (m < window_.begin()->first) return inner_.value(fp_.q, m);
  return outer_.value(fp_.q, m);
}

int RadialProfile::window_lo() const {
  if (window_.empty()) throw DomainError("window_lo: empty window");
  return window_.begin()->first;
}

int RadialProfile::window_hi() const {
  if (window_.empty()) throw DomainError("window_hi: empty window");
  return window_.rbegin()->first;
}

namespace {

// Sum over k >= M of q^{-k} * F(|x| = q^{-k}) for the inner tail of F.
RealV inner_tail_weighted_sum(const FieldParams& fp, const Tail& t, long M) {
  long q = fp.q;
  switch (t.kind) {
    case Tail::Kind::Zero:
      return RealV(Rat(0));
    case Tail::Kind::Power: {
      // value at shell -k is A q^{-gamma k}; sum_{k>=M} A r^k, r = q^{-(1+gamma)}
      Rat expo = -(Rat(1) + t.gamma);
      if (expo >= 0) throw DivergenceError("radial tail sum diverges: exponent gamma = " +
                                           rat_to_string(t.gamma) + " (needs gamma > -1)");
      RealV r = q_pow_rat(q, expo);
      RealV rM = r.exact() && M >= 0 ? r.pow_int(M)
                                     : RealV::flt(std::pow(r.to_double(), static_cast<double>(M)));
      return t.A * rM / (RealV(1) - r);
    }
    case Tail::Kind::LogLinear: {
      // value at shell -k is (a - b k) q^{-gamma k}
      Rat expo = -(Rat(1) + t.gamma);
      if (expo >= 0) throw DivergenceError("radial tail sum diverges: exponent gamma = " +
                                           rat_to_string(t.gamma) + " (needs gamma > -1)");
      RealV r = q_pow_rat(q, expo);
      RealV rM = r.exact() && M >= 0 ? r.pow_int(M)
                                     : RealV::flt(std::pow(r.to_double(), static_cast<double>(M)));
      RealV one_minus = RealV(1) - r;
      RealV sum_geo = rM / one_minus;
      RealV sum_k = rM * (RealV(M) / one_minus + r / (one_minus * one_minus));
      return t.a * sum_geo - t.b * sum_k;
    }
    case Tail::Kind::BesselPow:
      throw DomainError("radial_fourier: Bessel-type profiles are frequency-side only");
  }
  throw DomainError("inner_tail_weighted_sum: bad kind");
}

}  // namespace

RadialProfile radial_fourier(const RadialProfile& f) {
  const FieldParams& fp = f.params();
  long q = fp.q;
  if (!f.has_compact_support())
    throw DomainError("radial_fourier: profile must have compact support (zero outer tail)");
  if (f.window().empty()) {
    if (f.inner_tail().kind == Tail::Kind::Zero) return RadialProfile::zero(fp);
    throw DomainError("radial_fourier: empty window with nonzero tail");
  }
  if (auto g = f.inner_tail().inner_asymptotic_exponent()) {
    if (!(*g > -1))
      throw DivergenceError("radial_fourier: not integrable, inner tail exponent " +
                            rat_to_string(*g) + " <= -1");
  }

  int w_lo = f.window_lo(), w_hi = f.window_hi();
  long K0 = -w_lo;        // window covers k in [-w_hi, K0]; inner tail for k > K0
  long k_min = -w_hi;     // least k with F(q^{-k}) possibly nonzero

  const Rat one_minus_qinv = Rat(1) - rat_pow(q, -1);

  auto F_at_shell = [&](long m) { return f.value_at_shell(static_cast<int>(m)); };

  // T(m) = sum_{k >= max(m, k_min)} q^{-k} F(q^{-k})
  auto T = [&](long m) {
    long start = std::max(m, k_min);
    RealV acc(Rat(0));
    long win_end = std::min(K0, static_cast<long>(w_hi) + K0 + 2);  // == K0
    for (long k = start; k <= win_end; ++k)
      acc = acc + RealV(rat_pow(q, -k)) * F_at_shell(-k);
    long tail_from = std::max(start, K0 + 1);
    acc = acc + inner_tail_weighted_sum(fp, f.inner_tail(), tail_from);
    return acc;
  };

  std::map<int, RealV> out_window;
  for (long m = k_min - 1; m <= K0 + 1; ++m) {
    RealV head = RealV(one_minus_qinv) * T(m);
    RealV boundary = RealV(rat_pow(q, -m)) * F_at_shell(1 - m);
    out_window[static_cast<int>(m)] = head - boundary;
  }

  // inner tail: constant head (boundary term vanishes for m <= k_min)
  RealV H = out_window.at(static_cast<int>(k_min - 1));
  Tail inner_out = H.is_zero() ? Tail::zero() : Tail::power(H, Rat(0));

  // outer tail from the input inner tail, valid for m >= K0 + 1
  Tail outer_out = Tail::zero();
  const Tail& ti = f.inner_tail();
  if (ti.kind == Tail::Kind::Power || ti.kind == Tail::Kind::LogLinear) {
    Rat gamma = ti.gamma;
    RealV r = q_pow_rat(q, Rat(-(Rat(1) + gamma)));
    RealV qg = q_pow_rat(q, gamma);
    RealV one_minus = RealV(1) - r;
    Rat gamma_out = -(Rat(1) + gamma);
    if (ti.kind == Tail::Kind::Power) {
      RealV A_out = ti.A * (RealV(one_minus_qinv) / one_minus - qg);
      outer_out = A_out.is_zero() ? Tail::zero() : Tail::power(A_out, gamma_out);
    } else {
      RealV A0 = RealV(one_minus_qinv) * (ti.a / one_minus - ti.b * r / (one_minus * one_minus)) -
                 (ti.a + ti.b) * qg;
      RealV B0 = ti.b * qg - ti.b * RealV(one_minus_qinv) / one_minus;
      if (B0.is_zero())
        outer_out = A0.is_zero() ? Tail::zero() : Tail::power(A0, gamma_out);
      else
        outer_out = Tail::log_linear(A0, B0, gamma_out);
    }
  }
  // zero input inner tail: FT vanishes beyond K0 + 1 and the zero outer tail stands

  return RadialProfile(fp, std::move(out_window), inner_out, outer_out);
}

StepFunction radial_window_to_step(const RadialProfile& f) {
  const FieldParams& fp = f.params();
  if (f.inner_tail().kind != Tail::Kind::Zero || f.outer_tail().kind != Tail::Kind::Zero)
    throw DomainError("radial_window_to_step: tails must be zero");
  std::vector<StepFunction::Piece> raw;
  for (const auto& [m, v] : f.window()) {
    if (v.is_zero()) continue;
    Cyclo c = Cyclo::from_rat(fp.p, v.rat());
    // shell |x| = q^m as P^{-m} minus P^{-m+1}
    raw.push_back({Ball::fractional_ideal(fp, -m), c});
    raw.push_back({Ball::fractional_ideal(fp, -m + 1), -c});
  }
  return StepFunction::from_pieces(fp, std::move(raw));
}

std::map<int, Cyclo> step_shell_values(const StepFunction& f, int m_lo, int m_hi) {
  const FieldParams& fp = f.params();
  std::map<int, Cyclo> out;
  for (int m = m_lo; m <= m_hi; ++m) out.emplace(m, Cyclo::zero(fp.p));

  struct ShellAcc {
    bool has = false;
    Cyclo coeff;
    Rat measure = Rat(0);
  };
  std::map<int, ShellAcc> acc;

  for (const auto& p : f.pieces()) {
    if (p.ball.center.is_zero()) {
      // covers all shells m <= -level
      for (int m = m_lo; m <= std::min(m_hi, -p.ball.level); ++m) {
        auto& a = acc[m];
        if (a.has && a.coeff != p.coeff)
          throw DomainError("step_shell_values: function is not radial");
        // a zero-centered ball covers its shells entirely
        a.has = true;
        a.coeff = p.coeff;
        a.measure = rat_pow(fp.q, m) * (Rat(1) - rat_pow(fp.q, -1));
      }
    } else {
      int m = p.ball.center.norm_exponent();
      if (m < m_lo || m > m_hi) continue;
      auto& a = acc[m];
      if (a.has && a.coeff != p.coeff)
        throw DomainError("step_shell_values: function is not radial");
      a.has = true;
      a.coeff = p.coeff;
      a.measure += p.ball.measure();
    }
  }

  for (auto& [m, a] : acc) {
    if (!a.has) continue;
    Rat full = rat_pow(fp.q, m) * (Rat(1) - rat_pow(fp.q, -1));
    if (a.measure != full) {
      if (!a.coeff.is_zero()) throw DomainError("step_shell_values: function is not radial");
    }
    out[m] = a.coeff;
  }
  return out;
}

RadialProfile kappa_profile(const FieldParams& fp, const Rat& s) {
  Rat sigma = Rat(-s / 2);
  Tail t = Tail::bessel_pow(sigma);
  return RadialProfile(fp, {}, t, t);
}

RadialProfile make_example_profile(const FieldParams& fp, int id, const Rat& theta,
                                   const Rat& vartheta) {
  long q = fp.q;
  switch (id) {
    case 1: {
      if (!(theta > -1)) throw DomainError("example 1 requires theta > -1");
      std::map<int, RealV> w;
      w[0] = RealV(Rat(1));
      return RadialProfile(fp, std::move(w), Tail::power(RealV(Rat(1)), theta), Tail::zero());
    }
    case 2: {
      std::map<int, RealV> w;
      w[0] = RealV(Rat(0));
      double lnq = std::log(static_cast<double>(q));
      return RadialProfile(fp, std::move(w),
                           Tail::log_linear(RealV(Rat(0)), RealV::flt(-lnq), Rat(0)),
                           Tail::zero());
    }
    case 4: {
      Rat s = theta + vartheta;
      if (!(theta > 0 && vartheta > 0 && s < 1))
        throw DomainError("example 4 requires 0 < theta, vartheta, theta+vartheta < 1");
      double qd = static_cast<double>(q);
      double C = (1.0 - std::pow(qd, -s.get_d())) / (1.0 - std::pow(qd, s.get_d() - 1.0));
      std::map<int, RealV> w;
      w[0] = RealV::flt(C);
      return RadialProfile(fp, std::move(w), Tail::power(RealV::flt(C), Rat(s - 1)),
                           Tail::zero());
    }
    default:
      throw DomainError("make_example_profile: id must be 1, 2 or 4");
  }
}

StepFunction make_example_step(const FieldParams& fp, int k) {
  return StepFunction::indicator(Ball::fractional_ideal(fp, k));
}

RadialProfile make_example_freq(const FieldParams& fp, const Rat& theta) {
  return kappa_profile(fp, Rat(-2 * theta));
}

}  // namespace ultrawave
