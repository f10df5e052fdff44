#include "gwfano/biseries.hpp"

#include <algorithm>
#include <string>

#include "gwfano/errors.hpp"

namespace gwfano {

namespace {

std::optional<int> min_prec(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<int> add_prec(std::optional<int> p, int shift) {
  if (!p) return p;
  return *p + shift;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int lo, std::vector<Rat> coeffs) : lo_(lo), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Rat& c, int e) { return LaurentPoly(e, {c}); }

LaurentPoly LaurentPoly::linear(const Rat& a, const Rat& b) { return LaurentPoly(0, {a, b}); }

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<Rat>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
    lo_ += static_cast<int>(first);
  }
}

Rat LaurentPoly::coeff(int e) const {
  if (e < lo_ || e > hi()) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = a.lo(); e <= a.hi(); ++e) c[e - lo] += a.coeffs()[e - a.lo()];
  for (int e = b.lo(); e <= b.hi(); ++e) c[e - lo] += b.coeffs()[e - b.lo()];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator*(const Rat& s, const LaurentPoly& a) {
  std::vector<Rat> c = a.coeffs();
  for (auto& x : c) x *= s;
  return LaurentPoly(a.lo(), std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + Rat(-1) * b; }

LaurentPoly lp_mul_trunc(const LaurentPoly& a, const LaurentPoly& b, int hi) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.lo() + b.lo();
  const int top = std::min(hi, a.hi() + b.hi());
  if (top < lo) return {};
  std::vector<Rat> c(static_cast<std::size_t>(top - lo + 1));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      const int e = lo + static_cast<int>(i + j);
      if (e > top) break;
      c[static_cast<std::size_t>(e - lo)] += ac[i] * bc[j];
    }
  }
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return lp_mul_trunc(a, b, a.hi() + b.hi());
}

LaurentPoly lp_pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly r = LaurentPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

LaurentPoly lp_inv_series(const LaurentPoly& a, int hi) {
  if (a.is_zero()) throw NotInvertible("inverse of the zero polynomial");
  const int v = a.lo();
  const int n = hi + v;  // relative order of the unit's inverse
  if (n < 0) return {};
  const auto& ac = a.coeffs();
  const Rat inv0 = 1 / ac[0];
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    const int jmax = std::min<int>(k, static_cast<int>(ac.size()) - 1);
    for (int j = 1; j <= jmax; ++j) s += ac[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return LaurentPoly(-v, std::move(r));
}

// ---------------------------------------------------------------------- Slice

Slice Slice::exact(const LaurentPoly& p) {
  Slice s;
  s.lo = p.lo();
  s.c = p.coeffs();
  return s;
}

Slice Slice::truncated(const LaurentPoly& p, int prec) {
  Slice s;
  s.prec = prec;
  if (!p.is_zero() && p.lo() <= prec) {
    s.lo = p.lo();
    const int top = std::min(p.hi(), prec);
    s.c.assign(p.coeffs().begin(), p.coeffs().begin() + (top - p.lo() + 1));
  }
  s.normalize();
  return s;
}

Rat Slice::coeff(int e) const {
  if (e < lo) return 0;
  if (prec && e > *prec) {
    throw WindowUnderflow("aux^" + std::to_string(e) + " requested but slice is exact only through aux^" +
                          std::to_string(*prec));
  }
  const int idx = e - lo;
  if (idx >= static_cast<int>(c.size())) return 0;
  return c[static_cast<std::size_t>(idx)];
}

void Slice::normalize() {
  if (prec) {
    const int keep = *prec - lo + 1;
    if (keep < static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(std::max(keep, 0)));
  }
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) {
    c.clear();
    lo = prec ? *prec + 1 : 0;
    return;
  }
  std::size_t last = c.size();
  while (c[last - 1] == 0) --last;
  c = std::vector<Rat>(c.begin() + static_cast<long>(first), c.begin() + static_cast<long>(last));
  lo += static_cast<int>(first);
}

Slice slice_mul(const Slice& a, const Slice& b) {
  if (a.exact_zero() || b.exact_zero()) return {};
  Slice r;
  r.prec = min_prec(add_prec(a.prec, b.lo), add_prec(b.prec, a.lo));
  r.lo = a.lo + b.lo;
  if (!a.c.empty() && !b.c.empty()) {
    int top = (a.lo + static_cast<int>(a.c.size()) - 1) + (b.lo + static_cast<int>(b.c.size()) - 1);
    if (r.prec) top = std::min(top, *r.prec);
    if (top >= r.lo) {
      r.c.resize(static_cast<std::size_t>(top - r.lo + 1));
      for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
          const int e = r.lo + static_cast<int>(i + j);
          if (e > top) break;
          r.c[static_cast<std::size_t>(e - r.lo)] += a.c[i] * b.c[j];
        }
      }
    }
  }
  r.normalize();
  return r;
}

Slice slice_add(const Slice& a, const Slice& b, const Rat& sb) {
  if (b.exact_zero() || sb == 0) return a;
  Slice r;
  r.prec = min_prec(a.prec, b.prec);
  if (a.exact_zero()) {
    r = b;
    for (auto& x : r.c) x *= sb;
    r.normalize();
    return r;
  }
  r.lo = std::min(a.lo, b.lo);
  int top = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size())) - 1;
  if (r.prec) top = std::min(top, *r.prec);
  if (top >= r.lo) {
    r.c.resize(static_cast<std::size_t>(top - r.lo + 1));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      const int e = a.lo + static_cast<int>(i);
      if (e > top) break;
      r.c[static_cast<std::size_t>(e - r.lo)] += a.c[i];
    }
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      const int e = b.lo + static_cast<int>(i);
      if (e > top) break;
      r.c[static_cast<std::size_t>(e - r.lo)] += sb * b.c[i];
    }
  }
  r.normalize();
  return r;
}

Slice slice_times_poly(const Slice& a, const LaurentPoly& p) {
  if (p.is_zero()) return {};
  return slice_mul(a, Slice::exact(p));
}

// ------------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int order) : s_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw OutOfRange("BiSeries order must be >= 0");
}

BiSeries::BiSeries(std::vector<Slice> slices) : s_(std::move(slices)) {
  if (s_.empty()) throw OutOfRange("BiSeries needs at least one slice");
  for (auto& s : s_) s.normalize();
}

BiSeries BiSeries::one(int order) {
  BiSeries r(order);
  r.s_[0] = Slice::exact(LaurentPoly::constant(1));
  return r;
}

BiSeries BiSeries::from_qseries(const QSeries& s, int aux_exp) {
  BiSeries r(s.order());
  for (int b = 0; b <= s.order(); ++b) r.s_[b] = Slice::exact(LaurentPoly::monomial(s[b], aux_exp));
  return r;
}

BiSeries BiSeries::from_laurent(const LaurentPoly& p, int order) {
  BiSeries r(order);
  r.s_[0] = Slice::exact(p);
  return r;
}

const Slice& BiSeries::slice_data(int beta) const {
  if (beta < 0 || beta > order()) {
    throw OutOfRange("q^" + std::to_string(beta) + " outside BiSeries order " + std::to_string(order()));
  }
  return s_[static_cast<std::size_t>(beta)];
}

Rat BiSeries::coeff(int beta, int aux_exp) const { return slice_data(beta).coeff(aux_exp); }

std::pair<int, std::optional<int>> BiSeries::window(int beta) const {
  const Slice& s = slice_data(beta);
  return {s.lo, s.prec};
}

std::pair<int, std::optional<int>> BiSeries::window() const {
  int lo = 0;
  bool first = true;
  std::optional<int> prec;
  for (const auto& s : s_) {
    if (!s.exact_zero()) {
      lo = first ? s.lo : std::min(lo, s.lo);
      first = false;
    }
    prec = min_prec(prec, s.prec);
  }
  return {lo, prec};
}

BiSeries bs_add(const BiSeries& a, const BiSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Slice> r;
  for (int k = 0; k <= n; ++k) r.push_back(slice_add(a.slices()[k], b.slices()[k]));
  return BiSeries(std::move(r));
}

BiSeries bs_sub(const BiSeries& a, const BiSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Slice> r;
  for (int k = 0; k <= n; ++k) r.push_back(slice_add(a.slices()[k], b.slices()[k], Rat(-1)));
  return BiSeries(std::move(r));
}

BiSeries bs_scale(const BiSeries& a, const Rat& s) {
  std::vector<Slice> r = a.slices();
  for (auto& sl : r) {
    if (s == 0) {
      sl = Slice{};
      continue;
    }
    for (auto& x : sl.c) x *= s;
  }
  return BiSeries(std::move(r));
}

BiSeries bs_mul(const BiSeries& a, const BiSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Slice> r(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    if (a.slices()[i].exact_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.slices()[j].exact_zero()) continue;
      r[i + j] = slice_add(r[i + j], slice_mul(a.slices()[i], b.slices()[j]));
    }
  }
  return BiSeries(std::move(r));
}

BiSeries bs_inv(const BiSeries& a, int hi) {
  const Slice& a0 = a.slices()[0];
  if (a0.c.empty()) throw NotInvertible("bs_inv: q^0 slice is zero within its window");
  const int v = a0.lo;
  const std::optional<int> rel = add_prec(a0.prec, -v);
  int n = hi + v;
  if (rel) n = std::min(n, *rel);
  if (n < 0) throw WindowUnderflow("bs_inv: requested window below the leading exponent");
  LaurentPoly unit(0, a0.c);
  LaurentPoly inv_unit = lp_inv_series(unit, n);
  const Slice r0 = Slice::truncated(LaurentPoly(-v, inv_unit.coeffs()), n - v);

  const int B = a.order();
  std::vector<Slice> r(static_cast<std::size_t>(B + 1));
  r[0] = r0;
  for (int k = 1; k <= B; ++k) {
    Slice acc;
    for (int j = 1; j <= k; ++j) {
      if (a.slices()[j].exact_zero()) continue;
      acc = slice_add(acc, slice_mul(a.slices()[j], r[k - j]));
    }
    r[k] = slice_add(Slice{}, slice_mul(r0, acc), Rat(-1));
  }
  return BiSeries(std::move(r));
}

BiSeries bs_log(const BiSeries& a) {
  const Slice& a0 = a.slices()[0];
  if (a0.prec || a0.lo != 0 || a0.c.size() != 1 || a0.c[0] != 1) {
    throw BadConstantTerm("bs_log: q^0 slice must be exactly 1");
  }
  const int B = a.order();
  BiSeries x = a;
  x.slices()[0] = Slice{};
  BiSeries result(B);
  BiSeries power = x;
  for (int k = 1; k <= B; ++k) {
    const Rat coef = frac((k % 2 == 1) ? 1 : -1, k);
    result = bs_add(result, bs_scale(power, coef));
    if (k < B) power = bs_mul(power, x);
  }
  return result;
}

BiSeries bs_exp(const BiSeries& a) {
  if (!a.slices()[0].exact_zero()) throw BadConstantTerm("bs_exp: q^0 slice must be exactly 0");
  const int B = a.order();
  BiSeries result = BiSeries::one(B);
  BiSeries term = BiSeries::one(B);
  for (int k = 1; k <= B; ++k) {
    term = bs_scale(bs_mul(term, a), frac(1, k));
    result = bs_add(result, term);
  }
  return result;
}

BiSeries bs_shift_aux(const BiSeries& a, int k, int step) {
  std::vector<Slice> r = a.slices();
  for (int beta = 0; beta <= a.order(); ++beta) {
    Slice& s = r[beta];
    const int sh = k + step * beta;
    if (s.exact_zero()) continue;
    s.lo += sh;
    if (s.prec) *s.prec += sh;
  }
  return BiSeries(std::move(r));
}

BiSeries bs_truncate_aux(const BiSeries& a, int hi) {
  std::vector<Slice> r = a.slices();
  for (auto& s : r) {
    if (s.exact_zero()) continue;
    s.prec = min_prec(s.prec, hi);
    s.normalize();
  }
  return BiSeries(std::move(r));
}

QSeries bs_coeff(const BiSeries& a, int aux_exp) {
  std::vector<Rat> c;
  c.reserve(a.slices().size());
  for (int beta = 0; beta <= a.order(); ++beta) c.push_back(a.coeff(beta, aux_exp));
  return QSeries(std::move(c));
}

QSeries bs_residue(const BiSeries& a) { return bs_coeff(a, -1); }

LaurentPoly bs_eval_slice(const BiSeries& a, int beta) {
  const Slice& s = a.slice_data(beta);
  if (s.prec) {
    throw WindowUnderflow("slice q^" + std::to_string(beta) + " is only exact through aux^" +
                          std::to_string(*s.prec));
  }
  return LaurentPoly(s.lo, s.c);
}

LaurentPoly bs_slice_through(const BiSeries& a, int beta, int hi) {
  const Slice& s = a.slice_data(beta);
  if (s.prec && hi > *s.prec) {
    throw WindowUnderflow("slice q^" + std::to_string(beta) + " requested through aux^" + std::to_string(hi) +
                          " but exact only through aux^" + std::to_string(*s.prec));
  }
  if (s.c.empty() || hi < s.lo) return {};
  const int top = std::min(hi, s.lo + static_cast<int>(s.c.size()) - 1);
  return LaurentPoly(s.lo, std::vector<Rat>(s.c.begin(), s.c.begin() + (top - s.lo + 1)));
}

}  // namespace gwfano
