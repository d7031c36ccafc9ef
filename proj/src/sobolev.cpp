#include "ultrawave/sobolev.hpp"

#include <algorithm>
#include <cmath>

namespace ultrawave {

WeightProduct WeightProduct::single(const Rat& sigma, int level) {
  WeightProduct w;
  w.push(sigma, level);
  return w;
}

void WeightProduct::push(const Rat& sigma, int level) {
  if (sigma == 0) return;
  for (auto& f : fs_) {
    if (f.level == level) {
      f.sigma += sigma;
      if (f.sigma == 0)
        fs_.erase(std::remove_if(fs_.begin(), fs_.end(),
                                 [&](const WeightFactor& x) { return x.sigma == 0; }),
                  fs_.end());
      return;
    }
  }
  fs_.push_back({sigma, level});
  std::sort(fs_.begin(), fs_.end(),
            [](const WeightFactor& a, const WeightFactor& b) { return a.level < b.level; });
}

WeightProduct WeightProduct::times(const WeightProduct& o) const {
  WeightProduct w(*this);
  for (const auto& f : o.fs_) w.push(f.sigma, f.level);
  return w;
}

bool WeightProduct::all_integer() const {
  for (const auto& f : fs_)
    if (!rat_is_integer(f.sigma)) return false;
  return true;
}

bool WeightProduct::all_nonneg_integer() const {
  for (const auto& f : fs_)
    if (!rat_is_integer(f.sigma) || f.sigma < 0) return false;
  return true;
}

RealV WeightProduct::value_at_shell(long q, int m) const {
  RealV acc(Rat(1));
  for (const auto& f : fs_) {
    Rat base = Rat(1) + rat_pow(q, 2L * (m - f.level));
    if (rat_is_integer(f.sigma)) {
      acc = acc * RealV(base).pow_int(rat_to_long(f.sigma));
    } else {
      acc = acc * RealV::flt(std::pow(base.get_d(), f.sigma.get_d()));
    }
  }
  return acc;
}

std::vector<Rat> WeightProduct::expand_poly(long q) const {
  if (!all_nonneg_integer()) throw DomainError("expand_poly: exponents must be nonneg integers");
  std::vector<Rat> poly{Rat(1)};
  for (const auto& f : fs_) {
    Rat u = rat_pow(q, -2L * f.level);  // factor (1 + u*y)^sigma, y = q^{2m}
    long e = rat_to_long(f.sigma);
    for (long i = 0; i < e; ++i) {
      std::vector<Rat> next(poly.size() + 1, Rat(0));
      for (size_t t = 0; t < poly.size(); ++t) {
        next[t] += poly[t];
        next[t + 1] += poly[t] * u;
      }
      poly = std::move(next);
    }
  }
  return poly;
}

int WeightProduct::min_level() const {
  int m = 0;
  for (const auto& f : fs_) m = std::min(m, f.level);
  return m;
}

double WeightProduct::sigma_abs_sum() const {
  double s = 0;
  for (const auto& f : fs_) s += std::abs(f.sigma.get_d());
  return s;
}

namespace {

struct ProductPiece {
  Ball ball;   // the finer of the two nested balls
  Cyclo coeff; // f * conj(g)
};

std::vector<ProductPiece> product_pieces(const StepFunction& F, const StepFunction& G) {
  std::vector<ProductPiece> out;
  for (const auto& a : F.pieces()) {
    for (const auto& b : G.pieces()) {
      if (a.ball.contains_ball(b.ball)) {
        out.push_back({b.ball, a.coeff * b.coeff.conj()});
      } else if (b.ball.level < a.ball.level && b.ball.contains_ball(a.ball)) {
        out.push_back({a.ball, a.coeff * b.coeff.conj()});
      }
    }
  }
  return out;
}

// radial multipliers of a shell function as (value at shell) callables; only
// Bessel-type profiles are allowed to reach the ball around zero.
struct Extras {
  std::vector<const RadialProfile*> profiles;

  bool empty() const { return profiles.empty(); }
  RealV value(int m) const {
    RealV acc(Rat(1));
    for (auto* p : profiles) acc = acc * p->value_at_shell(m);
    return acc;
  }
  // try to absorb pure Bessel-type profiles into the weight product
  static bool absorbable(const RadialProfile& p) {
    return p.window().empty() && p.inner_tail().kind == Tail::Kind::BesselPow &&
           p.outer_tail().kind == Tail::Kind::BesselPow &&
           p.inner_tail().sigma == p.outer_tail().sigma;
  }
};

// Sum over shells m <= M of weight(m) * q^m * (1 - 1/q), exact closed form
// for nonnegative-integer exponents.
Rat zero_ball_exact_sum(const WeightProduct& w, long q, int M) {
  std::vector<Rat> poly = w.expand_poly(q);
  Rat acc(0);
  Rat shell_factor = Rat(1) - rat_pow(q, -1);
  for (size_t t = 0; t < poly.size(); ++t) {
    long a = 2 * static_cast<long>(t) + 1;
    // sum_{m <= M} q^{a m} = q^{aM} / (1 - q^{-a})
    Rat geo = rat_pow(q, a * M) / (Rat(1) - rat_pow(q, -a));
    acc += poly[t] * geo * shell_factor;
  }
  return acc;
}

// Certified numeric sum over shells m <= M of weight(m)*extra(m)*q^m*(1-1/q).
// Below the cutoff the weight is within C*q^{2m} of 1 and the remaining
// geometric head is added in closed form.
std::pair<double, double> zero_ball_numeric_sum(const WeightProduct& w, const Extras& ex,
                                                long q, int M, double eps) {
  double qd = static_cast<double>(q);
  double shell_factor = 1.0 - 1.0 / qd;
  // validity cutoff: q^{2(m-L)} <= 1/2 and |sigma| q^{2(m-L)} <= 1/4
  double smax = std::max(1.0, w.sigma_abs_sum());
  int m_valid = w.min_level() - 1 - static_cast<int>(std::ceil(std::log(4.0 * smax) / (2.0 * std::log(qd))));
  // error target: C q^{3 m0} / (1 - q^{-3}) * (1-1/q) <= eps
  double C = 2.0 * smax;  // conservative since q^{-2L} <= 1 at the cutoff scale
  int m_eps = static_cast<int>(std::floor((std::log(eps * (1.0 - std::pow(qd, -3.0)) / (C * shell_factor + 1e-300)))
                                          / (3.0 * std::log(qd))));
  int m0 = std::min({m_valid, m_eps, M});

  double acc = 0.0;
  for (int m = M; m > m0; --m) {
    double val = w.value_at_shell(q, m).to_double();
    if (!ex.empty()) val *= ex.value(m).to_double();
    acc += val * std::pow(qd, m) * shell_factor;
  }
  // head: weight ~ 1 below m0 (extras are required to be absorbed already)
  double head = std::pow(qd, m0) * shell_factor / (1.0 - 1.0 / qd);  // sum q^m, m <= m0
  acc += head;
  double err = C * std::pow(qd, 3.0 * m0) / (1.0 - std::pow(qd, -3.0)) * shell_factor;
  return {acc, err};
}

}  // namespace

CValue hs_inner(const ShellFunction& F, const ShellFunction& G, const SobolevParams& sp) {
  const FieldParams& fp = F.params();
  if (fp != G.params()) throw FieldMismatchError("hs_inner: mixed field params");
  long q = fp.q;

  WeightProduct w = WeightProduct::single(sp.s, 0).times(F.weight).times(G.weight);
  Extras ex;
  for (const auto* sf : {&F, &G}) {
    if (sf->radial_extra) {
      if (Extras::absorbable(*sf->radial_extra)) {
        w = w.times(WeightProduct::single(sf->radial_extra->inner_tail().sigma, 0));
      } else {
        ex.profiles.push_back(&*sf->radial_extra);
      }
    }
  }
  int half = F.half_scale + G.half_scale;

  Cyclo exact_acc = Cyclo::zero(fp.p);
  bool exact = true;
  std::complex<double> approx_acc(0.0, 0.0);
  double err = 0.0;

  for (const auto& piece : product_pieces(F.step, G.step)) {
    if (piece.ball.center.is_zero()) {
      int M = -piece.ball.level;
      if (w.is_trivial() && ex.empty()) {
        exact_acc += piece.coeff.scaled(piece.ball.measure());
        approx_acc += piece.coeff.to_complex() * rat_to_double(piece.ball.measure());
      } else if (w.all_nonneg_integer() && ex.empty()) {
        Rat sum = zero_ball_exact_sum(w, q, M);
        exact_acc += piece.coeff.scaled(sum);
        approx_acc += piece.coeff.to_complex() * rat_to_double(sum);
      } else {
        if (!ex.empty())
          throw DomainError("hs_inner: non-Bessel radial multiplier on a ball containing 0");
        auto [val, e] = zero_ball_numeric_sum(w, ex, q, M, sp.eps);
        exact = false;
        approx_acc += piece.coeff.to_complex() * val;
        err += piece.coeff.abs_double() * e;
      }
    } else {
      int m = piece.ball.center.norm_exponent();
      RealV wv = w.value_at_shell(q, m);
      if (!ex.empty()) wv = wv * ex.value(m);
      if (wv.exact()) {
        Rat scale = wv.rat() * piece.ball.measure();
        exact_acc += piece.coeff.scaled(scale);
        approx_acc += piece.coeff.to_complex() * rat_to_double(scale);
      } else {
        exact = false;
        approx_acc += piece.coeff.to_complex() * wv.to_double() *
                      rat_to_double(piece.ball.measure());
      }
    }
  }

  // overall q^{half/2}
  if (half != 0) {
    if (half % 2 == 0) {
      Rat scale = rat_pow(q, half / 2);
      exact_acc = exact_acc.scaled(scale);
      approx_acc *= rat_to_double(scale);
      err *= std::abs(rat_to_double(scale));
    } else {
      exact = false;
      double scale = std::pow(static_cast<double>(q), half / 2.0);
      approx_acc *= scale;
      err *= std::abs(scale);
    }
  }

  if (exact) return CValue::from_cyclo(exact_acc);
  return CValue::from_double(approx_acc, err);
}

CValue bracket_series(const ShellFunction& F, const ShellFunction& G, const SobolevParams& sp,
                      int j, const FieldElement& xi, unsigned long k_count) {
  const FieldParams& fp = F.params();
  if (fp != G.params()) throw FieldMismatchError("bracket_series: mixed field params");
  long q = fp.q;

  auto rf = F.step.support_exponent();
  auto rg = G.step.support_exponent();
  if (!rf || !rg) return CValue::from_cyclo(Cyclo::zero(fp.p));
  if (k_count == 0) {
    int R = std::max({*rf, *rg, 0});
    if (!xi.is_zero()) R = std::max(R, xi.norm_exponent());
    unsigned long n = 1;
    for (int i = 0; i < R; ++i) {
      n *= static_cast<unsigned long>(q);
      if (n > 100'000'000UL) throw SizeError("bracket_series: unbounded support");
    }
    k_count = n;
  }

  // weight (1 + q^{2j}|.|^2)^s, i.e. level -j, composed with the functions' own weights
  WeightProduct w = WeightProduct::single(sp.s, -j).times(F.weight).times(G.weight);
  int half = F.half_scale + G.half_scale;

  Cyclo exact_acc = Cyclo::zero(fp.p);
  bool exact = true;
  std::complex<double> approx_acc(0.0, 0.0);

  for (unsigned long k = 0; k < k_count; ++k) {
    FieldElement x = xi + lambda(fp, k);
    Cyclo fv = F.step.value_at(x);
    if (fv.is_zero()) continue;
    Cyclo gv = G.step.value_at(x);
    if (gv.is_zero()) continue;
    Cyclo prod = fv * gv.conj();
    RealV wv = x.is_zero() ? RealV(Rat(1)) : w.value_at_shell(q, x.norm_exponent());
    if (F.radial_extra) wv = wv * F.radial_extra->value_at_shell(x.is_zero() ? -1000 : x.norm_exponent());
    if (G.radial_extra) wv = wv * G.radial_extra->value_at_shell(x.is_zero() ? -1000 : x.norm_exponent());
    if (wv.exact()) {
      exact_acc += prod.scaled(wv.rat());
      approx_acc += prod.to_complex() * wv.to_double();
    } else {
      exact = false;
      approx_acc += prod.to_complex() * wv.to_double();
    }
  }

  if (half != 0) {
    if (half % 2 == 0) {
      Rat scale = rat_pow(q, half / 2);
      exact_acc = exact_acc.scaled(scale);
      approx_acc *= rat_to_double(scale);
    } else {
      exact = false;
      approx_acc *= std::pow(static_cast<double>(q), half / 2.0);
    }
  }

  if (exact) return CValue::from_cyclo(exact_acc);
  return CValue::from_double(approx_acc, 0.0);
}

MembershipThreshold membership_threshold(const RadialProfile& f_hat) {
  MembershipThreshold t;
  auto g = f_hat.outer_tail().outer_asymptotic_exponent();
  if (!g) {
    t.all_s = true;
    return t;
  }
  // sum over shells of q^{(2s + 2 gamma + 1) m} converges iff s < -gamma - 1/2;
  // log factors do not move the threshold
  t.all_s = false;
  t.s_star = Rat(-*g - Rat(1, 2));
  return t;
}

RadialNormResult radial_hs_norm(const RadialProfile& f_hat, const Rat& s, double eps) {
  const FieldParams& fp = f_hat.params();
  long q = fp.q;
  double qd = static_cast<double>(q);
  RadialNormResult res;

  // symbolic convergence verdict from the tail exponents
  if (auto g = f_hat.outer_tail().outer_asymptotic_exponent()) {
    Rat crit = Rat(2) * s + Rat(2) * (*g) + 1;
    if (!(crit < 0)) {
      res.converges = false;
      return res;
    }
  }
  if (auto g = f_hat.inner_tail().inner_asymptotic_exponent()) {
    Rat crit = Rat(2) * (*g) + 1;
    if (!(crit > 0)) {
      res.converges = false;
      return res;
    }
  }
  res.converges = true;

  int lo = f_hat.window().empty() ? 0 : f_hat.window_lo();
  int hi = f_hat.window().empty() ? 0 : f_hat.window_hi();

  double shell_factor = 1.0 - 1.0 / qd;
  double acc = 0.0;
  double last_abs = 0.0;
  int m;
  for (m = lo; m >= lo - 400; --m) {
    double fv = f_hat.value_at_shell(m).to_double();
    double wv = std::pow(1.0 + std::pow(qd, 2.0 * m), s.get_d());
    double term = wv * fv * fv * std::pow(qd, m) * shell_factor;
    acc += term;
    last_abs = std::abs(term);
    if (m < lo - 4 && last_abs < eps * 1e-3) break;
  }
  res.err_bound += 2.0 * last_abs;
  for (m = lo + 1; m <= hi + 400; ++m) {
    double fv = f_hat.value_at_shell(m).to_double();
    double wv = std::pow(1.0 + std::pow(qd, 2.0 * m), s.get_d());
    double term = wv * fv * fv * std::pow(qd, m) * shell_factor;
    acc += term;
    last_abs = std::abs(term);
    if (m > hi + 4 && last_abs < eps * 1e-3) break;
  }
  res.err_bound += 2.0 * last_abs;
  res.value = acc;
  return res;
}

}  // namespace ultrawave
