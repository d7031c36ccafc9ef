#include "ultrawave/step_function.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace ultrawave {

namespace {

constexpr long kMaxCells = 16'000'000L;

long pow_long(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > kMaxCells) throw SizeError("StepFunction: refinement too large");
  }
  return r;
}

}  // namespace

StepFunction StepFunction::indicator(const Ball& b, const Cyclo& coeff) {
  StepFunction f(b.center.params());
  if (!coeff.is_zero()) f.pieces_.push_back({b, coeff});
  return f;
}

StepFunction StepFunction::indicator(const Ball& b) {
  return indicator(b, Cyclo::one(b.center.params().p));
}

StepFunction StepFunction::from_pieces(const FieldParams& fp, std::vector<Piece> raw) {
  StepFunction f(fp);
  raw.erase(std::remove_if(raw.begin(), raw.end(),
                           [](const Piece& p) { return p.coeff.is_zero(); }),
            raw.end());
  if (raw.empty()) return f;

  int max_level = std::numeric_limits<int>::min();
  for (const auto& p : raw) max_level = std::max(max_level, p.ball.level);

  long budget = 0;
  for (const auto& p : raw) {
    budget += pow_long(fp.q, max_level - p.ball.level);
    if (budget > kMaxCells) throw SizeError("StepFunction: canonicalization too large");
  }

  // refine everything to the common finest level, accumulating coefficients
  struct Cell {
    FieldElement center;
    Cyclo coeff;
  };
  std::unordered_map<std::string, Cell> cells;
  cells.reserve(static_cast<size_t>(budget));
  auto accumulate = [&](FieldElement&& c, const Cyclo& v) {
    std::string key = c.key();
    auto it = cells.find(key);
    if (it == cells.end())
      cells.emplace(std::move(key), Cell{std::move(c), v});
    else
      it->second.coeff += v;
  };
  for (const auto& p : raw) {
    if (p.ball.level == max_level) {
      accumulate(FieldElement(p.ball.center), p.coeff);
    } else {
      for (auto& c : enumerate_subball_centers(p.ball, max_level))
        accumulate(std::move(c), p.coeff);
    }
  }

  // merge full sibling sets with equal coefficients, finest level upward
  int level = max_level;
  std::vector<Piece> done;
  while (!cells.empty()) {
    std::unordered_map<std::string, std::vector<Cell*>> by_parent;
    by_parent.reserve(cells.size() / static_cast<size_t>(fp.q) + 1);
    for (auto& [key, cell] : cells) {
      if (cell.coeff.is_zero()) continue;
      by_parent[cell.center.reduced_mod_level(level - 1).key()].push_back(&cell);
    }
    std::unordered_map<std::string, Cell> next;
    for (auto& [pkey, kids] : by_parent) {
      bool mergeable = kids.size() == static_cast<size_t>(fp.q);
      if (mergeable) {
        for (size_t i = 1; i < kids.size(); ++i) {
          if (!(kids[i]->coeff == kids[0]->coeff)) {
            mergeable = false;
            break;
          }
        }
      }
      if (mergeable) {
        next.emplace(pkey, Cell{kids[0]->center.reduced_mod_level(level - 1), kids[0]->coeff});
      } else {
        for (auto* cell : kids) done.push_back({Ball(cell->center, level), cell->coeff});
      }
    }
    cells = std::move(next);
    --level;
    if (level < -3 * kExponentWindow) {
      for (auto& [key, cell] : cells) done.push_back({Ball(cell.center, level + 1), cell.coeff});
      break;
    }
  }

  std::sort(done.begin(), done.end(), [](const Piece& a, const Piece& b) {
    if (a.ball.level != b.ball.level) return a.ball.level < b.ball.level;
    return a.ball.center < b.ball.center;
  });
  f.pieces_ = std::move(done);
  return f;
}

Cyclo StepFunction::value_at(const FieldElement& x) const {
  for (const auto& p : pieces_) {
    if (p.ball.contains(x)) return p.coeff;
  }
  return Cyclo::zero(fp_.p);
}

StepFunction StepFunction::operator+(const StepFunction& o) const {
  check(o);
  std::vector<Piece> raw = pieces_;
  raw.insert(raw.end(), o.pieces_.begin(), o.pieces_.end());
  return from_pieces(fp_, std::move(raw));
}

StepFunction StepFunction::operator-(const StepFunction& o) const {
  check(o);
  std::vector<Piece> raw = pieces_;
  for (const auto& p : o.pieces_) raw.push_back({p.ball, -p.coeff});
  return from_pieces(fp_, std::move(raw));
}

StepFunction StepFunction::scaled(const Cyclo& c) const {
  if (c.is_zero()) return zero(fp_);
  StepFunction f(fp_);
  f.pieces_ = pieces_;
  for (auto& p : f.pieces_) p.coeff *= c;
  return f;
}

StepFunction StepFunction::scaled(const Rat& r) const {
  if (r == 0) return zero(fp_);
  StepFunction f(fp_);
  f.pieces_ = pieces_;
  for (auto& p : f.pieces_) p.coeff = p.coeff.scaled(r);
  return f;
}

StepFunction StepFunction::translated(const FieldElement& a) const {
  StepFunction f(fp_);
  f.pieces_.reserve(pieces_.size());
  for (const auto& p : pieces_)
    f.pieces_.push_back({Ball(p.ball.center + a, p.ball.level), p.coeff});
  std::sort(f.pieces_.begin(), f.pieces_.end(), [](const Piece& x, const Piece& y) {
    if (x.ball.level != y.ball.level) return x.ball.level < y.ball.level;
    return x.ball.center < y.ball.center;
  });
  return f;
}

StepFunction StepFunction::dilated(int j) const {
  StepFunction f(fp_);
  f.pieces_.reserve(pieces_.size());
  FieldElement scale = FieldElement::prime_pow(fp_, -j);
  for (const auto& p : pieces_)
    f.pieces_.push_back({Ball(scale * p.ball.center, p.ball.level - j), p.coeff});
  return f;
}

StepFunction StepFunction::reflected() const {
  StepFunction f(fp_);
  f.pieces_.reserve(pieces_.size());
  for (const auto& p : pieces_)
    f.pieces_.push_back({Ball(-p.ball.center, p.ball.level), p.coeff});
  std::sort(f.pieces_.begin(), f.pieces_.end(), [](const Piece& x, const Piece& y) {
    if (x.ball.level != y.ball.level) return x.ball.level < y.ball.level;
    return x.ball.center < y.ball.center;
  });
  return f;
}

StepFunction StepFunction::multiplied(const StepFunction& o) const {
  check(o);
  std::vector<Piece> raw;
  for (const auto& a : pieces_) {
    for (const auto& b : o.pieces_) {
      if (a.ball.contains_ball(b.ball)) {
        raw.push_back({b.ball, a.coeff * b.coeff});
      } else if (b.ball.contains_ball(a.ball)) {
        raw.push_back({a.ball, a.coeff * b.coeff});
      }
    }
  }
  return from_pieces(fp_, std::move(raw));
}

StepFunction StepFunction::multiplied_by_character(const FieldElement& a, int shift,
                                                   bool conjugate) const {
  if (a.is_zero()) return *this;
  // xi -> chi(a * t^shift * xi) is constant on cosets of P^L once
  // |a| q^{-shift} q^{-L} <= 1, i.e. L >= -valuation(a) - shift.
  int va = *a.valuation();
  int need = -va - shift;
  FieldElement mult = a * FieldElement::prime_pow(fp_, shift);
  std::vector<Piece> raw;
  for (const auto& p : pieces_) {
    int lvl = std::max(p.ball.level, need);
    for (auto& c : enumerate_subball_centers(p.ball, lvl)) {
      Cyclo chi = character(mult * c);
      if (conjugate) chi = chi.conj();
      raw.push_back({Ball(c, lvl), p.coeff * chi});
    }
  }
  return from_pieces(fp_, std::move(raw));
}

Cyclo StepFunction::integrate() const {
  Cyclo acc = Cyclo::zero(fp_.p);
  for (const auto& p : pieces_) acc += p.coeff.scaled(p.ball.measure());
  return acc;
}

Cyclo StepFunction::inner_l2(const StepFunction& o) const {
  check(o);
  Cyclo acc = Cyclo::zero(fp_.p);
  for (const auto& a : pieces_) {
    for (const auto& b : o.pieces_) {
      // disjoint unless nested; contribution over the finer ball
      if (a.ball.contains_ball(b.ball)) {
        acc += (a.coeff * b.coeff.conj()).scaled(b.ball.measure());
      } else if (b.ball.level < a.ball.level && b.ball.contains_ball(a.ball)) {
        acc += (a.coeff * b.coeff.conj()).scaled(a.ball.measure());
      }
    }
  }
  return acc;
}

namespace {

// Radix-q decimation for a group of pieces sharing one level L: the transform
// restricted to P^{-L} factors into independent GF(q) character transforms
// along the digit axes, one butterfly pass per axis.
void fourier_dense_group(const FieldParams& fp,
                         const std::vector<const StepFunction::Piece*>& group, int L,
                         std::vector<StepFunction::Piece>& out) {
  int k0 = L - 1;
  for (const auto* p : group) {
    if (!p->ball.center.is_zero()) k0 = std::min(k0, *p->ball.center.valuation());
  }
  int D = L - k0;
  long size = pow_long(fp.q, D);

  std::vector<Cyclo> data(static_cast<size_t>(size), Cyclo::zero(fp.p));
  for (const auto* p : group) {
    long idx = 0;
    for (int i = D - 1; i >= 0; --i)
      idx = idx * fp.q + gf_to_index(fp, p->ball.center.coeff_at(k0 + i));
    data[static_cast<size_t>(idx)] = p->coeff;
  }

  // pairing matrix W(t,u) = zeta_p^{-e0(t*u)}
  std::vector<std::vector<Cyclo>> W(static_cast<size_t>(fp.q));
  for (long t = 0; t < fp.q; ++t) {
    W[t].reserve(static_cast<size_t>(fp.q));
    GFqElem gt = gf_from_index(fp, t);
    for (long u = 0; u < fp.q; ++u) {
      GFqElem prod = gf_mul(fp, gt, gf_from_index(fp, u));
      W[t].push_back(Cyclo::zeta_pow(fp.p, -gf_e0_component(prod)));
    }
  }

  std::vector<Cyclo> scratch(static_cast<size_t>(fp.q), Cyclo::zero(fp.p));
  long stride = 1;
  for (int axis = 0; axis < D; ++axis) {
    for (long base = 0; base < size; ++base) {
      if ((base / stride) % fp.q != 0) continue;
      for (long u = 0; u < fp.q; ++u) scratch[u] = data[static_cast<size_t>(base + u * stride)];
      for (long t = 0; t < fp.q; ++t) {
        Cyclo acc = Cyclo::zero(fp.p);
        for (long u = 0; u < fp.q; ++u) {
          if (!scratch[u].is_zero()) acc += W[t][u] * scratch[u];
        }
        data[static_cast<size_t>(base + t * stride)] = std::move(acc);
      }
    }
    stride *= fp.q;
  }

  Rat scale = rat_pow(fp.q, -L);
  for (long idx = 0; idx < size; ++idx) {
    if (data[static_cast<size_t>(idx)].is_zero()) continue;
    FieldElement center(fp);
    long m = idx;
    for (int i = 0; i < D; ++i) {
      long digit = m % fp.q;
      m /= fp.q;
      if (digit != 0) center.set_coeff(-1 - k0 - i, gf_from_index(fp, digit));
    }
    out.push_back({Ball(center, -k0), data[static_cast<size_t>(idx)].scaled(scale)});
  }
}

}  // namespace

StepFunction StepFunction::fourier() const {
  // FT(coeff * 1_{c+P^k})(xi) = coeff * q^{-k} * chi(-xi c) * 1_{P^{-k}}(xi),
  // with the chi factor expanded on balls where it is constant.  Large groups
  // of equal-level pieces go through the dense digit transform instead of the
  // per-piece expansion.
  std::vector<Piece> raw;
  std::map<int, std::vector<const Piece*>> by_level;
  for (const auto& p : pieces_) by_level[p.ball.level].push_back(&p);

  for (auto& [level, group] : by_level) {
    if (group.size() >= 32) {
      fourier_dense_group(fp_, group, level, raw);
      continue;
    }
    for (const auto* pp : group) {
      const Piece& p = *pp;
      int k = p.ball.level;
      Cyclo base = p.coeff.scaled(rat_pow(fp_.q, -k));
      Ball dual = Ball::fractional_ideal(fp_, -k);
      const FieldElement& c = p.ball.center;
      if (c.is_zero()) {
        raw.push_back({dual, base});
        continue;
      }
      int v = *c.valuation();  // v < k
      FieldElement neg_c = -c;
      for (auto& b : enumerate_subball_centers(dual, -v)) {
        raw.push_back({Ball(b, -v), base * character(b * neg_c)});
      }
    }
  }
  return from_pieces(fp_, std::move(raw));
}

StepFunction StepFunction::inverse_fourier() const { return fourier().reflected(); }

std::optional<int> StepFunction::support_exponent() const {
  if (pieces_.empty()) return std::nullopt;
  int r = std::numeric_limits<int>::min();
  for (const auto& p : pieces_) {
    int m;
    if (p.ball.center.is_zero())
      m = -p.ball.level;
    else
      m = p.ball.center.norm_exponent();
    r = std::max(r, m);
  }
  return r;
}

std::optional<Ball> StepFunction::support_ball() const {
  if (pieces_.empty()) return std::nullopt;
  Ball b = pieces_[0].ball;
  for (size_t i = 1; i < pieces_.size(); ++i) {
    while (!b.contains_ball(pieces_[i].ball)) b = b.parent();
  }
  return b;
}

bool StepFunction::coeffs_rational() const {
  for (const auto& p : pieces_)
    if (!p.coeff.is_rational()) return false;
  return true;
}

Rat StepFunction::sup_abs_rational() const {
  Rat m(0);
  for (const auto& p : pieces_) {
    Rat a = p.coeff.as_rational();
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return m;
}

std::vector<std::pair<std::string, Cyclo>> StepFunction::refined_cells(int level) const {
  std::vector<std::pair<std::string, Cyclo>> out;
  for (const auto& p : pieces_) {
    if (p.ball.level > level) throw DomainError("refined_cells: level coarser than pieces");
    for (auto& c : enumerate_subball_centers(p.ball, level)) {
      out.emplace_back(Ball(c, level).key(), p.coeff);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool StepFunction::operator==(const StepFunction& o) const {
  if (fp_ != o.fp_ || pieces_.size() != o.pieces_.size()) return false;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].ball == o.pieces_[i].ball)) return false;
    if (pieces_[i].coeff != o.pieces_[i].coeff) return false;
  }
  return true;
}

}  // namespace ultrawave
