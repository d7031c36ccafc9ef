#include "ultrawave/mra.hpp"

#include <algorithm>
#include <cmath>

namespace ultrawave {

namespace {

unsigned long upow(long base, int e) {
  unsigned long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long>(base);
  return r;
}

void check_packet_range(const FieldParams& fp, unsigned long n, int j) {
  if (n >= upow(fp.q, 6)) throw SizeError("wavelet packet index n must be < q^6");
  if (j < -4 || j > 4) throw SizeError("wavelet packet level must satisfy |j| <= 4");
}

}  // namespace

FilterBank make_haar_bank(const FieldParams& fp) {
  FilterBank bank;
  bank.params = fp;
  bank.taps.assign(static_cast<size_t>(fp.q), {});
  FieldElement t = FieldElement::prime_pow(fp, 1);
  Rat inv_q = rat_pow(fp.q, -1);
  for (long l = 0; l < fp.q; ++l) {
    auto& row = bank.taps[static_cast<size_t>(l)];
    row.reserve(static_cast<size_t>(fp.q));
    FieldElement ll = lambda(fp, static_cast<unsigned long>(l));
    for (long k = 0; k < fp.q; ++k) {
      Cyclo v = character(ll * lambda(fp, static_cast<unsigned long>(k)) * t);
      row.push_back(v.scaled(inv_q));
    }
  }
  return bank;
}

Cyclo filter_value(const FilterBank& bank, int l, const FieldElement& eta) {
  const FieldParams& fp = bank.params;
  Cyclo acc = Cyclo::zero(fp.p);
  const auto& row = bank.taps[static_cast<size_t>(l)];
  for (size_t k = 0; k < row.size(); ++k) {
    if (row[k].is_zero()) continue;
    acc += row[k] * chi_n(fp, k, eta).conj();
  }
  return acc;
}

StepFunction filter_step_on(const FilterBank& bank, int l, int shift, const Ball& support) {
  const FieldParams& fp = bank.params;
  // chi_k(t^shift xi) with k < tap_count is constant on cosets of P^L,
  // L = digits(tap_count - 1) - shift
  int digits = qadic_digit_count(fp, bank.tap_count() > 0 ? bank.tap_count() - 1 : 0);
  int level = std::max(support.level, digits - shift);
  FieldElement tshift = FieldElement::prime_pow(fp, shift);
  std::vector<StepFunction::Piece> raw;
  for (auto& c : enumerate_subball_centers(support, level)) {
    Cyclo v = filter_value(bank, l, tshift * c);
    if (!v.is_zero()) raw.push_back({Ball(c, level), v});
  }
  return StepFunction::from_pieces(fp, std::move(raw));
}

void FilterBankReport::add(CheckItem it) {
  all_pass = all_pass && it.pass;
  max_residual = std::max(max_residual, it.residual);
  items.push_back(std::move(it));
}

FilterBankReport check_filter_bank(const FilterBank& bank, int depth) {
  const FieldParams& fp = bank.params;
  long q = fp.q;
  FilterBankReport rep;
  const long K = static_cast<long>(bank.tap_count());
  const Rat inv_q = rat_pow(q, -1);

  // (i) sum_t alpha_{t-qk,l} conj(alpha_{t,l}) = (1/q) delta_{k,0}
  {
    double res = 0.0;
    bool pass = true;
    for (long l = 0; l < q; ++l) {
      for (long kk = 0; kk * q < K; ++kk) {
        Cyclo s = Cyclo::zero(fp.p);
        for (long t = kk * q; t < K; ++t)
          s += bank.taps[l][static_cast<size_t>(t - kk * q)] *
               bank.taps[l][static_cast<size_t>(t)].conj();
        Cyclo expect = (kk == 0) ? Cyclo::from_rat(fp.p, inv_q) : Cyclo::zero(fp.p);
        Cyclo dev = s - expect;
        if (!dev.is_zero()) pass = false;
        res = std::max(res, dev.abs_double());
      }
    }
    rep.add({"filters/self-orthogonality", pass, res, "tap-shift identity, block size q"});
  }

  // (ii) sum_t alpha_{t-qk,l} conj(alpha_{t,r}) = 0 for l != r
  {
    double res = 0.0;
    bool pass = true;
    for (long l = 0; l < q; ++l) {
      for (long r = 0; r < q; ++r) {
        if (l == r) continue;
        for (long kk = -(K / q); kk * q < K; ++kk) {
          Cyclo s = Cyclo::zero(fp.p);
          for (long t = std::max(0L, kk * q); t < K && t - kk * q < K; ++t)
            s += bank.taps[l][static_cast<size_t>(t - kk * q)] *
                 bank.taps[r][static_cast<size_t>(t)].conj();
          if (!s.is_zero()) pass = false;
          res = std::max(res, s.abs_double());
        }
      }
    }
    rep.add({"filters/cross-orthogonality", pass, res, "tap-shift identity across subbands"});
  }

  // unitarity of M(xi) = (m_l(t xi + t lambda(k)))_{l,k} on level-`depth` cosets,
  // reported together with the row-norm (a) and row-orthogonality (b) values
  {
    double res_u = 0.0, res_a = 0.0, res_b = 0.0;
    bool pass_u = true, pass_a = true, pass_b = true;
    FieldElement t = FieldElement::prime_pow(fp, 1);
    for (auto& xi : enumerate_subball_centers(Ball::unit_ball(fp), depth)) {
      std::vector<std::vector<Cyclo>> M(static_cast<size_t>(q));
      for (long l = 0; l < q; ++l) {
        M[l].reserve(static_cast<size_t>(q));
        for (long kk = 0; kk < q; ++kk) {
          FieldElement arg = t * (xi + lambda(fp, static_cast<unsigned long>(kk)));
          M[l].push_back(filter_value(bank, static_cast<int>(l), arg));
        }
      }
      for (long l = 0; l < q; ++l) {
        for (long r = 0; r < q; ++r) {
          Cyclo s = Cyclo::zero(fp.p);
          for (long kk = 0; kk < q; ++kk) s += M[l][kk] * M[r][kk].conj();
          Cyclo expect = (l == r) ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
          Cyclo dev = s - expect;
          double d = dev.abs_double();
          if (!dev.is_zero()) pass_u = false;
          res_u = std::max(res_u, d);
          if (l == r) {
            if (!dev.is_zero()) pass_a = false;
            res_a = std::max(res_a, d);
          } else {
            if (!dev.is_zero()) pass_b = false;
            res_b = std::max(res_b, d);
          }
        }
      }
    }
    rep.add({"filters/matrix-unitary", pass_u, res_u, "M(xi) M(xi)^* = I on sampled cosets"});
    rep.add({"filters/row-norms", pass_a, res_a, "sum_k |m_l(t xi + t lambda(k))|^2 = 1"});
    rep.add({"filters/row-orthogonality", pass_b, res_b, "distinct filter rows orthogonal"});
  }

  return rep;
}

ShellFunction sobolev_haar_scaling(const FieldParams& fp, const Rat& s, int j) {
  StepFunction unit = StepFunction::indicator(Ball::unit_ball(fp));
  return ShellFunction(std::move(unit), WeightProduct::single(Rat(-s / 2), -j), 0);
}

std::vector<int> qadic_digits(const FieldParams& fp, unsigned long n) {
  std::vector<int> d;
  while (n > 0) {
    d.push_back(static_cast<int>(n % static_cast<unsigned long>(fp.q)));
    n /= static_cast<unsigned long>(fp.q);
  }
  return d;
}

StepFunction packet_mother_step_product(const FilterBank& bank, unsigned long n) {
  const FieldParams& fp = bank.params;
  std::vector<int> digits = qadic_digits(fp, n);
  int d = static_cast<int>(digits.size());
  int db = qadic_digit_count(fp, bank.tap_count() > 0 ? bank.tap_count() - 1 : 0);
  Ball support = Ball::fractional_ideal(fp, -d);
  int level = std::max(db - 1, -d);
  std::vector<StepFunction::Piece> raw;
  for (auto& c : enumerate_subball_centers(support, level)) {
    Cyclo v = Cyclo::one(fp.p);
    for (int J = 1; J <= d && !v.is_zero(); ++J) {
      FieldElement arg = FieldElement::prime_pow(fp, J) * c;
      v *= filter_value(bank, digits[static_cast<size_t>(J - 1)], arg);
    }
    if (!v.is_zero()) raw.push_back({Ball(c, level), v});
  }
  return StepFunction::from_pieces(fp, std::move(raw));
}

StepFunction packet_mother_step_recursive(const FilterBank& bank, unsigned long n) {
  const FieldParams& fp = bank.params;
  if (n == 0) return StepFunction::indicator(Ball::unit_ball(fp));
  std::vector<int> digits = qadic_digits(fp, n);
  int d = static_cast<int>(digits.size());
  StepFunction prev = packet_mother_step_recursive(bank, n / static_cast<unsigned long>(fp.q));
  StepFunction filt = filter_step_on(bank, digits[0], 1, Ball::fractional_ideal(fp, -d));
  return filt.multiplied(prev.dilated(1));
}

StepFunction packet_mother_time(const FilterBank& bank, unsigned long n) {
  const FieldParams& fp = bank.params;
  if (n == 0) return StepFunction::indicator(Ball::unit_ball(fp));
  long q = fp.q;
  unsigned long ell = n / static_cast<unsigned long>(q);
  int r = static_cast<int>(n % static_cast<unsigned long>(q));
  StepFunction prev = packet_mother_time(bank, ell);
  StepFunction dil = prev.dilated(-1);  // w(t^{-1} x)
  FieldElement t = FieldElement::prime_pow(fp, 1);
  StepFunction acc = StepFunction::zero(fp);
  for (size_t k = 0; k < bank.tap_count(); ++k) {
    const Cyclo& a = bank.taps[static_cast<size_t>(r)][k];
    if (a.is_zero()) continue;
    FieldElement shift = t * lambda(fp, k);
    acc = acc + dil.translated(shift).scaled(a.scaled(Rat(q)));
  }
  return acc;
}

WaveletPacket wavelet_packet(const FilterBank& bank, const ScalingFamily& fam, unsigned long n,
                             int j, unsigned long k, bool check_bank) {
  const FieldParams& fp = bank.params;
  check_packet_range(fp, n, j);
  if (check_bank) {
    FilterBankReport rep = check_filter_bank(bank, 1);
    if (!rep.all_pass)
      throw DomainError("wavelet_packet: filter bank fails orthogonality checks");
  }
  StepFunction mother = packet_mother_step_product(bank, n);
  StepFunction step = mother.dilated(j);
  if (k != 0) step = step.multiplied_by_character(lambda(fp, k), j, /*conjugate=*/true);
  ShellFunction freq(std::move(step), WeightProduct::single(Rat(-fam.s() / 2), 0), -j);
  return WaveletPacket{n, j, k, qadic_digits(fp, n), std::move(freq)};
}

namespace {

// Aligned L^2 inner product of two step functions sharing a support ball.
Cyclo aligned_inner(const StepFunction& f, const StepFunction& g) {
  int L = 0;
  bool first = true;
  for (const auto& p : f.pieces()) {
    L = first ? p.ball.level : std::max(L, p.ball.level);
    first = false;
  }
  for (const auto& p : g.pieces()) L = std::max(L, p.ball.level);
  auto cf = f.refined_cells(L);
  auto cg = g.refined_cells(L);
  Cyclo acc = Cyclo::zero(f.params().p);
  size_t i = 0, jx = 0;
  Rat meas = rat_pow(f.params().q, -L);
  while (i < cf.size() && jx < cg.size()) {
    if (cf[i].first < cg[jx].first) {
      ++i;
    } else if (cg[jx].first < cf[i].first) {
      ++jx;
    } else {
      acc += cf[i].second * cg[jx].second.conj();
      ++i;
      ++jx;
    }
  }
  return acc.scaled(meas);
}

}  // namespace

GramResult packet_gram(const FilterBank& bank, const ScalingFamily& fam, int j, unsigned long N,
                       unsigned long K, const SobolevParams& sp, bool store_entries) {
  const FieldParams& fp = bank.params;
  GramResult res;
  res.dim = static_cast<size_t>(N * K);
  res.exact = true;

  struct Pack {
    ShellFunction freq;
    Ball support;
  };
  std::vector<Pack> packs;
  packs.reserve(res.dim);
  for (unsigned long n = 0; n < N; ++n) {
    for (unsigned long k = 0; k < K; ++k) {
      WaveletPacket w = wavelet_packet(bank, fam, n, j, k, /*check_bank=*/false);
      auto sb = w.freq.step.support_ball();
      if (!sb) throw DomainError("packet_gram: zero packet");
      Ball support = *sb;
      packs.push_back({std::move(w.freq), std::move(support)});
    }
  }

  // with matching orders all Sobolev weights cancel and the entries reduce to
  // plain inner products of the step parts (times q^{-j} from the half scales)
  bool cancels = !packs.empty() &&
                 WeightProduct::single(sp.s, 0)
                     .times(packs[0].freq.weight)
                     .times(packs[0].freq.weight)
                     .is_trivial();
  Rat scale = rat_pow(fp.q, -j);
  if (store_entries)
    res.entries.assign(res.dim, std::vector<Cyclo>(res.dim, Cyclo::zero(fp.p)));

  bool identity = true;
  double maxdev = 0.0;
  for (size_t a = 0; a < packs.size(); ++a) {
    for (size_t b = a; b < packs.size(); ++b) {
      Cyclo entry = Cyclo::zero(fp.p);
      const Ball& A = packs[a].support;
      const Ball& B = packs[b].support;
      bool overlap = A.contains_ball(B) || B.contains_ball(A);
      if (overlap && cancels) {
        entry = aligned_inner(packs[a].freq.step, packs[b].freq.step).scaled(scale);
      } else if (overlap) {
        CValue v = hs_inner(packs[a].freq, packs[b].freq, sp);
        if (!v.exact) res.exact = false;
        entry = v.cyc;
      }
      Cyclo expect = (a == b) ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
      Cyclo dev = entry - expect;
      if (!dev.is_zero()) {
        identity = false;
        maxdev = std::max(maxdev, dev.abs_double());
      }
      if (store_entries) {
        res.entries[a][b] = entry;
        res.entries[b][a] = entry.conj();
      }
    }
  }
  res.is_identity = identity && res.exact;
  res.max_deviation = maxdev;
  return res;
}

CValue conv_packet_gram(const FilterBank& bank, int j, unsigned long n, unsigned long m,
                        unsigned long k, unsigned long l, const SobolevParams& sp) {
  ScalingFamily l2(bank.params, Rat(0));
  WaveletPacket wn = wavelet_packet(bank, l2, n, j, k, /*check_bank=*/false);
  WaveletPacket wm = wavelet_packet(bank, l2, m, j, l, /*check_bank=*/false);
  // convolution with kappa_{-s/2} multiplies the transform by (1+|xi|^2)^{-s/2}
  wn.freq.weight = wn.freq.weight.times(WeightProduct::single(Rat(-sp.s / 2), 0));
  wm.freq.weight = wm.freq.weight.times(WeightProduct::single(Rat(-sp.s / 2), 0));
  return hs_inner(wn.freq, wm.freq, sp);
}

SplitResult split_sequence_system(const FilterBank& bank, unsigned long k_max) {
  return split_sequence_system(bank, k_max, {});
}

SplitResult split_sequence_system(const FilterBank& bank, unsigned long k_max,
                                  const std::vector<std::vector<Cyclo>>& e_basis) {
  const FieldParams& fp = bank.params;
  long q = fp.q;
  const long K = static_cast<long>(bank.tap_count());
  SplitResult res;

  if (!e_basis.empty()) {
    // the input system must itself be orthonormal
    for (size_t i = 0; i < e_basis.size(); ++i) {
      for (size_t jx = i; jx < e_basis.size(); ++jx) {
        Cyclo s = Cyclo::zero(fp.p);
        size_t len = std::min(e_basis[i].size(), e_basis[jx].size());
        for (size_t t = 0; t < len; ++t) s += e_basis[i][t] * e_basis[jx][t].conj();
        Cyclo expect = (i == jx) ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
        if (s != expect) throw DomainError("split_sequence_system: e basis not orthonormal");
      }
    }
  }

  size_t t_len = static_cast<size_t>(q) * k_max + static_cast<size_t>(K);
  auto e_coord = [&](size_t t, size_t u) -> Cyclo {
    if (e_basis.empty()) return t == u ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
    if (t < e_basis.size() && u < e_basis[t].size()) return e_basis[t][u];
    return t == u ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
  };

  // phi_{k,l}[u] = sum_t alpha_{t-qk,l} e_t[u]: every translate consumes a
  // complete tap block inside the nonnegative index range
  for (unsigned long k = 0; k < k_max; ++k) {
    for (long l = 0; l < q; ++l) {
      std::vector<Cyclo> v(t_len, Cyclo::zero(fp.p));
      for (long idx = 0; idx < K; ++idx) {
        long t = static_cast<long>(q * k) + idx;
        const Cyclo& a = bank.taps[static_cast<size_t>(l)][static_cast<size_t>(idx)];
        if (a.is_zero()) continue;
        for (size_t u = 0; u < t_len; ++u) {
          Cyclo c = e_coord(static_cast<size_t>(t), u);
          if (!c.is_zero()) v[u] += a * c;
        }
      }
      res.sequences.push_back(std::move(v));
    }
  }

  bool ortho = true;
  double maxres = 0.0;
  Rat qr(q);
  for (size_t a = 0; a < res.sequences.size(); ++a) {
    for (size_t b = a; b < res.sequences.size(); ++b) {
      Cyclo s = Cyclo::zero(fp.p);
      for (size_t u = 0; u < t_len; ++u) s += res.sequences[a][u] * res.sequences[b][u].conj();
      s = s.scaled(qr);  // the q^{1/2} prefactor squared
      Cyclo expect = (a == b) ? Cyclo::one(fp.p) : Cyclo::zero(fp.p);
      Cyclo dev = s - expect;
      if (!dev.is_zero()) {
        ortho = false;
        maxres = std::max(maxres, dev.abs_double());
      }
    }
  }
  res.orthonormal = ortho;
  res.max_residual = maxres;
  return res;
}

std::vector<RealV> projection_norms(const ScalingFamily& fam, const ShellFunction& h, int j_lo,
                                    int j_hi, const SobolevParams& sp) {
  const FieldParams& fp = fam.params();
  FilterBank bank = make_haar_bank(fp);  // n = 0 packets do not touch the filters
  std::vector<RealV> out;
  int h_level = 0;
  for (const auto& p : h.step.pieces()) h_level = std::max(h_level, p.ball.level);

  for (int j = j_lo; j <= j_hi; ++j) {
    unsigned long k_max = upow(fp.q, std::max(0, h_level + j));
    RealV acc(Rat(0));
    Rat qj = rat_pow(fp.q, -j);  // |q^{-j/2}|^2, kept out of the inner product
    for (unsigned long k = 0; k < k_max; ++k) {
      WaveletPacket phi = wavelet_packet(bank, fam, 0, j, k, /*check_bank=*/false);
      phi.freq.half_scale = 0;
      CValue c = hs_inner(h, phi.freq, sp);
      if (c.exact) {
        Cyclo a2 = c.cyc.abs2();
        if (a2.is_rational())
          acc = acc + RealV(Rat(a2.as_rational() * qj));
        else
          acc = acc + RealV::flt(a2.to_complex().real() * rat_to_double(qj));
      } else {
        acc = acc + RealV::flt(std::norm(c.approx) * rat_to_double(qj));
      }
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace ultrawave
