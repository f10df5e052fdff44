#include "gwfano/invariants.hpp"

#include <string>

#include "gwfano/errors.hpp"

namespace gwfano {

namespace {

int resolve_max_b(const MultiDegree& md, int max_b) {
  if (max_b < 0) return md.max_b();
  if (max_b > md.max_b()) {
    throw OutOfRange("max_b=" + std::to_string(max_b) + " exceeds " + std::to_string(md.max_b()));
  }
  return max_b;
}

// (1+w)^n / prod(1 + d_k w) through w^hi
LaurentPoly chern_series(const MultiDegree& md, int hi) {
  std::vector<Rat> top(static_cast<std::size_t>(md.n() + 1));
  for (int k = 0; k <= md.n(); ++k) top[k] = Rat(binom(md.n(), k));
  LaurentPoly den = LaurentPoly::constant(1);
  for (int d : md.degrees()) den = den * LaurentPoly::linear(1, d);
  return lp_mul_trunc(LaurentPoly(0, std::move(top)), lp_inv_series(den, hi), hi);
}

Rat prod_d_over_24(const MultiDegree& md) { return frac(md.prod_d(), 24); }

}  // namespace

InvariantEngine::InvariantEngine(const MultiDegree& md, int max_b, InvariantOptions opts)
    : h_(md, resolve_max_b(md, max_b) + opts.extra_order, opts.window_pad),
      opts_(opts),
      max_b_(resolve_max_b(md, max_b)) {
  if (opts.extra_order < 0 || opts.window_pad < 0) throw OutOfRange("padding must be >= 0");
  A_ = A_series();
}

void InvariantEngine::check_b(int b) const {
  if (b < 0 || b > max_b_) {
    throw OutOfRange("b=" + std::to_string(b) + " outside 0.." + std::to_string(max_b_));
  }
}

const QSeries& InvariantEngine::phi0() const {
  return h_.phi0(opts_.theta_route == ThetaRoute::Residue ? Route::Series : Route::Closed);
}

QSeries InvariantEngine::A_series() const {
  const int n = md().n(), r = md().r();
  const ThetaRoute rt = opts_.theta_route;
  QSeries A(h_.order());
  for (int p = 0; p <= n - 1 - r; ++p) A += h_.theta(p, 1, rt) * h_.theta(n - 1 - r - p, 0, rt);
  for (int p = 1; p <= r; ++p) A += h_.theta(n - p, 1, rt) * h_.theta(n - 1 - r + p, 0, rt);
  return A;
}

QSeries InvariantEngine::A_double_residue() const {
  const int n = md().n(), r = md().r(), B = h_.order();
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p <= n - 1 - r; ++p) pairs.emplace_back(p, n - 1 - r - p);
  for (int p = 1; p <= r; ++p) pairs.emplace_back(n - p, n - 1 - r + p);
  QSeries A(B);
  for (auto [a, c] : pairs) {
    const BiSeries& Ra = h_.regularized_p(a);
    const BiSeries& Rc = h_.regularized_p(c);
    // 1/(h1 h2 (h1+h2)) = sum_k (-1)^k h2^{k-1} / h1^{k+2} for |h2| < |h1|
    for (int k = 0; k <= B; ++k) {
      QSeries term = bs_coeff(Ra, k + 1) * bs_coeff(Rc, -k);
      if (k % 2) term = -term;
      A += term;
    }
  }
  return A;
}

Rat InvariantEngine::type_A(int b) const {
  check_b(b);
  const int p = 1 + md().nu() * b;
  const QSeries t = h_.theta(p, 0, opts_.theta_route) * A_ * qs_inv(phi0());
  return t[b] / 2;
}

Rat InvariantEngine::block(int b) const {
  check_b(b);
  const int n = md().n(), nu = md().nu(), B = h_.order();
  const int p = 1 + nu * b;
  const CoeffTables& t = h_.tables();
  const QSeries& L = h_.L();
  const QSeries& P0 = phi0();
  const QSeries one = QSeries::constant(1, B);
  Rat kappa = frac(n - 1, 2);
  for (int d : md().degrees()) kappa -= frac(1, d);
  const QSeries qL = qs_theta(L);
  const QSeries qlogP0 = qs_theta(P0) * qs_inv(P0);

  QSeries tot(B);
  for (int beta = 0; beta <= b; ++beta) {
    const int e = p - nu * beta;
    if (e < 0) break;
    const Rat c = t.ct(p, e, beta);
    if (c != 0) {
      tot -= qs_shift((qs_pow_int(L, e) - one) * (kappa * c), beta);
      if (e >= 2) tot -= qL * qs_shift(qs_pow_int(L, e - 2) * (c * Rat(binom(e, 2))), beta);
      if (e >= 1) tot -= qlogP0 * qs_shift(qs_pow_int(L, e - 1) * (c * e), beta);
    }
    const Rat c1 = t.ct(p, e - 1, beta);
    if (c1 != 0) tot -= qs_shift((qs_pow_int(L, e - 1) - one) * c1, beta);
  }
  return frac(n, 24) * tot[b];
}

Rat InvariantEngine::residue_row(int b) const {
  check_b(b);
  const int n = md().n(), r = md().r();
  const int p = 1 + md().nu() * b;
  const LaurentPoly G = chern_series(md(), n);
  const CoeffTables& t = h_.tables();
  return -prod_d_over_24(md()) * (t.ct(p, 0, b) * G.coeff(n - r - 1) + t.ct(p, 1, b) * G.coeff(n - r - 2));
}

Rat InvariantEngine::svr_core(int b, bool tilde) const {
  check_b(b);
  const int n = md().n(), r = md().r();
  const int p = 1 + md().nu() * b;
  const BiSeries& F = tilde ? h_.ftilde_w() : h_.f_w();
  const BiSeries Fp = series_Fp(h_.tables(), p, F, Presentation::W);
  const int hi = h_.w_hi();
  std::vector<Slice> gs(static_cast<std::size_t>(F.order() + 1));
  gs[0] = Slice::truncated(chern_series(md(), hi), hi);
  const BiSeries g(std::move(gs));
  const BiSeries ratio = bs_mul(bs_sub(F, Fp), bs_inv(F, hi));
  return bs_mul(g, ratio).coeff(b, n - r - 2);
}

Rat InvariantEngine::type_B(int b) const {
  return block(b) + residue_row(b) - prod_d_over_24(md()) * svr_core(b, true);
}

Rat InvariantEngine::svr_difference(int b) const {
  check_b(b);
  if (b == 0) return 0;
  return prod_d_over_24(md()) * svr_core(b, false);
}

Rat InvariantEngine::standard(int b) const { return type_A(b) + block(b) + residue_row(b); }

Rat InvariantEngine::reduced(int b) const { return type_A(b) + type_B(b); }

Rat InvariantEngine::type_B_lemma_oracle(int b) const {
  check_b(b);
  if (b < 1) throw OutOfRange("lemma-level type-B residues need b >= 1");
  const int n = md().n(), r = md().r(), nu = md().nu();
  const int p = 1 + nu * b;
  const int hh = h_.hbar_hi(), wh = h_.w_hi();
  const CoeffTables& t = h_.tables();

  // ((1+h)^n - 1) / (h^3 prod(d+h))
  std::vector<Rat> nh(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) nh[k] = Rat(binom(n, k));
  LaurentPoly dh = LaurentPoly::constant(1);
  for (int d : md().degrees()) dh = dh * LaurentPoly::linear(d, 1);
  const LaurentPoly kh0 = lp_mul_trunc(LaurentPoly(0, nh), lp_inv_series(dh, hh + 3), hh + 3);
  const LaurentPoly kh(kh0.lo() - 3, kh0.coeffs());
  // ((1+w)^n - w^n) / (w^{n-r-1} prod(1+d w))
  std::vector<Rat> nw(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) nw[k] = Rat(binom(n, k));
  LaurentPoly dw = LaurentPoly::constant(1);
  for (int d : md().degrees()) dw = dw * LaurentPoly::linear(1, d);
  const int shift = n - r - 1;
  const LaurentPoly kw0 = lp_mul_trunc(LaurentPoly(0, nw), lp_inv_series(dw, wh + shift), wh + shift);
  const LaurentPoly kw(kw0.lo() - shift, kw0.coeffs());

  const BiSeries& Fh = h_.ftilde_hbar();
  const BiSeries& Fw = h_.ftilde_w();
  const BiSeries ratio_h =
      bs_sub(BiSeries::one(Fh.order()),
             bs_mul(series_Fp(t, p, Fh, Presentation::Hbar), bs_inv(Fh, hh)));
  const BiSeries ratio_w = bs_mul(bs_sub(Fw, series_Fp(t, p, Fw, Presentation::W)), bs_inv(Fw, wh));
  auto kernel = [&](const LaurentPoly& k, int prec) {
    std::vector<Slice> s(static_cast<std::size_t>(Fh.order() + 1));
    s[0] = Slice::truncated(k, prec);
    return BiSeries(std::move(s));
  };
  const Rat r0 = bs_mul(kernel(kh, hh), ratio_h).coeff(b, -1);
  const Rat rinf = -bs_mul(kernel(kw, wh), ratio_w).coeff(b, -1);

  LaurentPoly ph, pw;
  for (int l = 0; l <= p - nu * b; ++l) {
    const Rat c = t.ct(p, l, b);
    ph = ph - LaurentPoly::monomial(c, p - nu * b - l);
    pw = pw - LaurentPoly::monomial(c, -(p - nu * b - l));
  }
  const Rat R0 = lp_mul_trunc(kh, ph, 0).coeff(-1);
  const Rat Rinf = -lp_mul_trunc(kw, pw, 0).coeff(-1);
  return prod_d_over_24(md()) * (r0 + rinf - R0 - Rinf);
}

InvariantRow InvariantEngine::row(int b) const {
  InvariantRow row;
  row.b = b;
  row.insertion_power = 1 + md().nu() * b;
  row.type_a = type_A(b);
  row.type_b = type_B(b);
  row.standard = row.type_a + block(b) + residue_row(b);
  row.reduced = row.type_a + row.type_b;
  row.difference = svr_difference(b);
  row.consistent = row.standard == row.reduced + row.difference;
  return row;
}

std::vector<InvariantRow> InvariantEngine::rows() const {
  std::vector<InvariantRow> out;
  for (int b = 0; b <= max_b_; ++b) out.push_back(row(b));
  return out;
}

Rat chern_degree0_oracle(const MultiDegree& md) {
  const int k = md.dim() - 1;
  return -prod_d_over_24(md) * chern_series(md, k).coeff(k);
}

}  // namespace gwfano
