#include "hypermix/piecewise.hpp"

#include "hypermix/errors.hpp"
#include "hypermix/numeric.hpp"
#include "hypermix/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace hypermix {

namespace {

double term_value(const ExpPolyTerm& t, double log_w, double u) {
  double ex = (to_double(t.q) * u + to_double(t.e)) * log_w;
  double v = t.c * std::exp(ex);
  for (int i = 0; i < t.d; ++i) v *= u;
  return v;
}

double piece_value(const Piece& p, double log_w, double u) {
  double s = 0.0;
  for (const ExpPolyTerm& t : p.terms) s += term_value(t, log_w, u);
  return s;
}

/// Bound on |term| over u in [0, L].
double term_bound(const ExpPolyTerm& t, double log_w, double L) {
  double qL = to_double(t.q) * L;
  double ex = (to_double(t.e) + std::max(qL, 0.0)) * log_w;
  return std::abs(t.c) * std::pow(std::max(L, 0.0), t.d) * std::exp(ex);
}

/// Re-anchor terms from lo to lo + delta (delta >= 0): binomial spread of the
/// monomial plus an exact rational shift of the exponent offset.
std::vector<ExpPolyTerm> rebase_terms(const std::vector<ExpPolyTerm>& terms,
                                      const Rational& delta) {
  if (delta == Rational(0)) return terms;
  const double dd = to_double(delta);
  std::vector<ExpPolyTerm> out;
  for (const ExpPolyTerm& t : terms) {
    Rational e = t.e + t.q * delta;
    double shift_pow = 1.0;  // delta^(d-i), built from the top down
    for (int i = t.d; i >= 0; --i) {
      out.push_back({t.c * binomial(t.d, t.d - i) * shift_pow, i, t.q, e});
      shift_pow *= dd;
    }
  }
  return out;
}

/// The part of piece p covering [from, to) (a subinterval), anchored at from.
Piece piece_fragment(const Piece& p, const Rational& from, const Rational& to) {
  Piece out;
  out.lo = from;
  out.hi = to;
  out.terms = rebase_terms(p.terms, from - p.lo);
  return out;
}

}  // namespace

PiecewiseExpPoly::PiecewiseExpPoly(double base) : base_(base) {
  if (!(base > 1.0)) throw std::invalid_argument("base must exceed 1");
}

PiecewiseExpPoly::PiecewiseExpPoly(double base, std::vector<Piece> pieces)
    : base_(base), pieces_(std::move(pieces)) {
  if (!(base > 1.0)) throw std::invalid_argument("base must exceed 1");
  canonicalize();
}

PiecewiseExpPoly PiecewiseExpPoly::zero(double base) {
  return PiecewiseExpPoly(base);
}

PiecewiseExpPoly PiecewiseExpPoly::indicator(double base, const Rational& lo,
                                             const Rational& hi) {
  if (lo < Rational(0) || !(lo < hi))
    throw std::invalid_argument("indicator needs 0 <= lo < hi");
  Piece p;
  p.lo = lo;
  p.hi = hi;
  p.terms = {{1.0, 0, Rational(0), Rational(0)}};
  return PiecewiseExpPoly(base, {p});
}

PiecewiseExpPoly PiecewiseExpPoly::ramp(double base) {
  Piece p;
  p.lo = Rational(0);
  p.hi = Rational(1);
  p.terms = {{1.0, 0, Rational(0), Rational(0)},
             {-1.0, 1, Rational(0), Rational(0)}};
  return PiecewiseExpPoly(base, {p});
}

void PiecewiseExpPoly::canonicalize() {
  const double log_w = std::log(base_);
  for (Piece& p : pieces_) {
    if (p.lo < Rational(0))
      throw std::invalid_argument("piece extends below 0");
    if (!(p.lo < p.hi) && !p.terms.empty())
      throw std::invalid_argument("piece has empty interval");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i + 1].lo < pieces_[i].hi)
      throw std::invalid_argument("pieces overlap");

  std::vector<Piece> kept;
  for (Piece& p : pieces_) {
    // merge terms sharing (d, q); e is normalized to the group's maximum so
    // the fold-down factors w^{e - emax} never overflow
    std::map<std::pair<int, Rational>, std::pair<Rational, double>> groups;
    for (const ExpPolyTerm& t : p.terms) {
      if (t.c == 0.0) continue;
      auto key = std::make_pair(t.d, t.q);
      auto it = groups.find(key);
      if (it == groups.end()) {
        groups[key] = {t.e, t.c};
      } else {
        auto& [e_max, c_sum] = it->second;
        if (t.e > e_max) {
          c_sum = c_sum * std::exp(to_double(e_max - t.e) * log_w) + t.c;
          e_max = t.e;
        } else {
          c_sum += t.c * std::exp(to_double(t.e - e_max) * log_w);
        }
      }
    }
    Piece np;
    np.lo = p.lo;
    np.hi = p.hi;
    for (const auto& [key, val] : groups)
      if (val.second != 0.0)
        np.terms.push_back({val.second, key.first, key.second, val.first});
    if (!np.terms.empty()) kept.push_back(std::move(np));
  }
  pieces_ = std::move(kept);

  // continuity: one-sided limits agree at every breakpoint past the origin
  continuous_ = true;
  std::set<Rational> bounds;
  for (const Piece& p : pieces_) {
    bounds.insert(p.lo);
    bounds.insert(p.hi);
  }
  for (const Rational& b : bounds) {
    if (!(b > Rational(0))) continue;
    double left = 0.0, right = 0.0;
    for (const Piece& p : pieces_) {
      if (p.hi == b) left = piece_value(p, log_w, to_double(b - p.lo));
      if (p.lo == b) right = piece_value(p, log_w, 0.0);
    }
    double tol = 1e-9 * std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(left - right) > tol) {
      continuous_ = false;
      break;
    }
  }
}

double PiecewiseExpPoly::eval(double t) const {
  const double log_w = std::log(base_);
  for (const Piece& p : pieces_) {
    double lo = to_double(p.lo), hi = to_double(p.hi);
    if (t >= lo && t < hi) return piece_value(p, log_w, t - lo);
  }
  return 0.0;
}

Rational PiecewiseExpPoly::support_end() const {
  return pieces_.empty() ? Rational(0) : pieces_.back().hi;
}

Rational PiecewiseExpPoly::support_start() const {
  return pieces_.empty() ? Rational(0) : pieces_.front().lo;
}

bool PiecewiseExpPoly::is_zero(double tol) const {
  const double log_w = std::log(base_);
  for (const Piece& p : pieces_) {
    double L = to_double(p.hi - p.lo);
    for (const ExpPolyTerm& t : p.terms)
      if (term_bound(t, log_w, L) > tol) return false;
  }
  return true;
}

PiecewiseExpPoly pw_add(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  if (a.base() != b.base())
    throw SpaceMismatchError("cannot combine elements with different bases");
  if (a.empty()) return b;
  if (b.empty()) return a;

  std::set<Rational> cuts;
  for (const Piece& p : a.pieces()) {
    cuts.insert(p.lo);
    cuts.insert(p.hi);
  }
  for (const Piece& p : b.pieces()) {
    cuts.insert(p.lo);
    cuts.insert(p.hi);
  }
  std::vector<Rational> bps(cuts.begin(), cuts.end());

  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Rational& from = bps[i];
    const Rational& to = bps[i + 1];
    Piece np;
    np.lo = from;
    np.hi = to;
    for (const auto* side : {&a, &b}) {
      for (const Piece& p : side->pieces()) {
        if (p.lo <= from && to <= p.hi) {
          auto frag = rebase_terms(p.terms, from - p.lo);
          np.terms.insert(np.terms.end(), frag.begin(), frag.end());
          break;
        }
      }
    }
    if (!np.terms.empty()) out.push_back(std::move(np));
  }
  return PiecewiseExpPoly(a.base(), std::move(out));
}

PiecewiseExpPoly pw_sub(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  return pw_add(a, pw_scale(-1.0, b));
}

PiecewiseExpPoly pw_scale(double s, const PiecewiseExpPoly& f) {
  std::vector<Piece> out = f.pieces();
  for (Piece& p : out)
    for (ExpPolyTerm& t : p.terms) t.c *= s;
  return PiecewiseExpPoly(f.base(), std::move(out));
}

PiecewiseExpPoly pw_restrict_upto(const PiecewiseExpPoly& f, const Rational& cut) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    if (p.hi <= cut) {
      out.push_back(p);
    } else if (p.lo < cut) {
      Piece left = p;
      left.hi = cut;
      out.push_back(std::move(left));
    }
  }
  return PiecewiseExpPoly(f.base(), std::move(out));
}

PiecewiseExpPoly pw_restrict_from(const PiecewiseExpPoly& f, const Rational& cut) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    if (p.lo >= cut) {
      out.push_back(p);
    } else if (cut < p.hi) {
      out.push_back(piece_fragment(p, cut, p.hi));
    }
  }
  return PiecewiseExpPoly(f.base(), std::move(out));
}

PiecewiseExpPoly pw_translate_T(const PiecewiseExpPoly& f, const Rational& a) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    Rational lo = p.lo - a, hi = p.hi - a;
    if (!(hi > Rational(0))) continue;
    Piece np;
    np.lo = lo;
    np.hi = hi;
    np.terms = p.terms;
    for (ExpPolyTerm& t : np.terms) {
      t.e += p.lo - a;  // w^t folded in: slope rises by 1, offset is exact
      t.q += 1;
    }
    if (lo < Rational(0)) np = piece_fragment(np, Rational(0), hi);
    out.push_back(std::move(np));
  }
  return PiecewiseExpPoly(f.base(), std::move(out));
}

PiecewiseExpPoly pw_translate_S(const PiecewiseExpPoly& f, const Rational& a) {
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    Piece np;
    np.lo = p.lo + a;
    np.hi = p.hi + a;
    np.terms = p.terms;
    for (ExpPolyTerm& t : np.terms) {
      t.e -= p.lo;  // w^{-(t-a)} folded in: slope drops by 1
      t.q -= 1;
    }
    out.push_back(std::move(np));
  }
  return PiecewiseExpPoly(f.base(), std::move(out));
}

PiecewiseExpPoly pw_translate_S_ramp(const PiecewiseExpPoly& f, const Rational& a) {
  if (!f.is_continuous())
    throw std::invalid_argument(
        "sup-norm right inverse needs a continuous input");
  PiecewiseExpPoly shifted = pw_translate_S(f, a);
  double f0 = f.value_at_zero();
  if (f0 == 0.0) return shifted;
  Piece ramp;
  ramp.lo = Rational(0);
  ramp.hi = a;
  ramp.terms = {{f0 / to_double(a), 1, Rational(0), Rational(0)}};
  return pw_add(shifted, PiecewiseExpPoly(f.base(), {ramp}));
}

namespace {

/// log of integral_0^L e^{s u} du, stable across the whole range of s.
double log_int_exp(double s, double L) {
  if (s == 0.0) return std::log(L);
  double x = s * L;
  if (x > 700.0) return x - std::log(s);  // the upper endpoint dominates
  return std::log(std::expm1(x) / s);     // expm1/s > 0 for either sign
}

struct RebasedPiece {
  double L = 0.0;
  double log_scale = 0.0;                // e_max * log w
  std::vector<ExpPolyTerm> terms;        // e replaced by e - e_max (as double)
  std::vector<double> q_log;             // q * log w per term
  std::vector<double> rel;               // w^{e - e_max} per term
};

RebasedPiece rebase_for_eval(const Piece& p, double log_w) {
  RebasedPiece r;
  r.L = to_double(p.hi - p.lo);
  Rational e_max = p.terms.front().e;
  for (const ExpPolyTerm& t : p.terms) e_max = rat_max(e_max, t.e);
  r.log_scale = to_double(e_max) * log_w;
  for (const ExpPolyTerm& t : p.terms) {
    r.terms.push_back(t);
    r.q_log.push_back(to_double(t.q) * log_w);
    r.rel.push_back(std::exp(to_double(t.e - e_max) * log_w));
  }
  return r;
}

double rebased_value(const RebasedPiece& r, double u) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    double v = r.terms[i].c * r.rel[i] * std::exp(r.q_log[i] * u);
    for (int k = 0; k < r.terms[i].d; ++k) v *= u;
    s += v;
  }
  return s;
}

double rebased_derivative(const RebasedPiece& r, double u) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const ExpPolyTerm& t = r.terms[i];
    double base = t.c * r.rel[i] * std::exp(r.q_log[i] * u);
    double poly = r.q_log[i];
    for (int k = 0; k < t.d; ++k) poly *= u;
    if (t.d > 0) {
      double mono = t.d;
      for (int k = 0; k < t.d - 1; ++k) mono *= u;
      poly += mono;
    }
    s += base * poly;
  }
  return s;
}

}  // namespace

double pw_lp_norm(const PiecewiseExpPoly& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  const double log_w = std::log(f.base());
  std::vector<double> logs;
  for (const Piece& piece : f.pieces()) {
    RebasedPiece r = rebase_for_eval(piece, log_w);
    double log_piece;
    if (r.terms.size() == 1 && r.terms[0].d == 0) {
      // |c|^p integral of w^{p q u}: exact closed form
      double c = std::abs(r.terms[0].c * r.rel[0]);
      if (c == 0.0) continue;
      log_piece = p * std::log(c) + log_int_exp(p * r.q_log[0], r.L);
    } else {
      double integral = integrate(
          [&](double u) { return std::pow(std::abs(rebased_value(r, u)), p); },
          0.0, r.L, 1e-10);
      if (!(integral > 0.0)) continue;
      log_piece = std::log(integral);
    }
    logs.push_back(p * r.log_scale + log_piece);
  }
  if (logs.empty()) return 0.0;
  double total = log_sum_exp(logs.data(), static_cast<int>(logs.size()));
  return std::exp(total / p);
}

double pw_sup_norm(const PiecewiseExpPoly& f) {
  const double log_w = std::log(f.base());
  double best_log = -std::numeric_limits<double>::infinity();
  constexpr int kGrid = 64;
  for (const Piece& piece : f.pieces()) {
    RebasedPiece r = rebase_for_eval(piece, log_w);
    double m = std::max(std::abs(rebased_value(r, 0.0)),
                        std::abs(rebased_value(r, r.L)));
    if (r.terms.size() == 1 && r.terms[0].d > 0 && r.q_log[0] != 0.0) {
      double u_star = -r.terms[0].d / r.q_log[0];
      if (u_star > 0.0 && u_star < r.L)
        m = std::max(m, std::abs(rebased_value(r, u_star)));
    }
    double prev_u = 0.0, prev_dv = rebased_derivative(r, 0.0);
    for (int i = 1; i <= kGrid; ++i) {
      double u = r.L * i / kGrid;
      m = std::max(m, std::abs(rebased_value(r, u)));
      double dv = rebased_derivative(r, u);
      if (prev_dv == 0.0 || (prev_dv < 0.0) != (dv < 0.0)) {
        // bracketed extremum: bisect the derivative to 1e-12
        double a = prev_u, b = u, da = prev_dv;
        while (b - a > 1e-12) {
          double mid = 0.5 * (a + b);
          double dm = rebased_derivative(r, mid);
          if (dm == 0.0) {
            a = b = mid;
          } else if ((da < 0.0) == (dm < 0.0)) {
            a = mid;
            da = dm;
          } else {
            b = mid;
          }
        }
        m = std::max(m, std::abs(rebased_value(r, 0.5 * (a + b))));
      }
      prev_u = u;
      prev_dv = dv;
    }
    if (m > 0.0) best_log = std::max(best_log, r.log_scale + std::log(m));
  }
  return std::isfinite(best_log) ? std::exp(best_log) : 0.0;
}

}  // namespace hypermix
