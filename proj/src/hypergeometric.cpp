#include "gwfano/hypergeometric.hpp"

#include <string>

#include "gwfano/errors.hpp"

namespace gwfano {

namespace {

// a * q^k, truncated back to a's order.
BiSeries shift_q(const BiSeries& a, int k) {
  std::vector<Slice> s(a.slices().size());
  for (int beta = k; beta <= a.order(); ++beta) s[beta] = a.slices()[beta - k];
  return BiSeries(std::move(s));
}

QSeries one(int B) { return QSeries::constant(1, B); }

}  // namespace

BiSeries series_Ftilde_hbar(const MultiDegree& md, int Bq, int hbar_hi) {
  const int n = md.n();
  std::vector<Slice> s(static_cast<std::size_t>(Bq + 1));
  s[0] = Slice::exact(LaurentPoly::constant(1));
  for (int beta = 1; beta <= Bq; ++beta) {
    LaurentPoly num = LaurentPoly::constant(1);
    for (int d : md.degrees()) {
      for (int i = 1; i <= d * beta; ++i) num = num * LaurentPoly::linear(d, i);
    }
    LaurentPoly den = LaurentPoly::constant(1);
    for (int j = 1; j <= beta; ++j) {
      // (1 + j hbar)^n - 1
      std::vector<Rat> f(static_cast<std::size_t>(n + 1));
      for (int k = 1; k <= n; ++k) f[k] = Rat(binom(n, k) * ipow(Int(j), static_cast<unsigned long>(k)));
      den = den * LaurentPoly(0, std::move(f));
    }
    s[beta] = Slice::truncated(lp_mul_trunc(num, lp_inv_series(den, hbar_hi), hbar_hi), hbar_hi);
  }
  return BiSeries(std::move(s));
}

BiSeries series_F_w(const MultiDegree& md, int Bq, int w_hi, bool tilde) {
  const int n = md.n();
  std::vector<Slice> s(static_cast<std::size_t>(Bq + 1));
  s[0] = Slice::exact(LaurentPoly::constant(1));
  for (int beta = 1; beta <= Bq; ++beta) {
    const int rel = w_hi - md.nu() * beta;
    if (rel < 0) {
      s[beta] = Slice::truncated(LaurentPoly(), w_hi);
      continue;
    }
    LaurentPoly num = LaurentPoly::constant(1);
    for (int d : md.degrees()) {
      for (int i = 1; i <= d * beta; ++i) num = lp_mul_trunc(num, LaurentPoly::linear(i, d), rel);
    }
    LaurentPoly den = LaurentPoly::constant(1);
    for (int j = 1; j <= beta; ++j) {
      std::vector<Rat> f(static_cast<std::size_t>(n + 1));
      for (int k = 0; k <= n; ++k) f[k] = Rat(binom(n, k) * ipow(Int(j), static_cast<unsigned long>(n - k)));
      if (tilde) f[n] = 0;
      den = lp_mul_trunc(den, LaurentPoly(0, std::move(f)), rel);
    }
    LaurentPoly body = lp_mul_trunc(num, lp_inv_series(den, rel), rel);
    s[beta] = Slice::truncated(LaurentPoly(body.lo() + md.nu() * beta, body.coeffs()), w_hi);
  }
  return BiSeries(std::move(s));
}

BiSeries apply_D(const BiSeries& h, Presentation pres, int times) {
  if (times < 0) throw OutOfRange("apply_D: negative power");
  if (times == 0) return h;
  return bs_slice_map(h, [&](int beta) {
    const LaurentPoly f = pres == Presentation::W ? LaurentPoly(-1, {Rat(beta), Rat(1)}) : LaurentPoly::linear(1, beta);
    return lp_pow(f, static_cast<unsigned>(times));
  });
}

BiSeries series_Fp(const CoeffTables& t, int p, const BiSeries& base, Presentation pres) {
  if (p < 0) throw OutOfRange("series_Fp: p must be >= 0");
  const int B = base.order();
  const int nu = t.nu();
  BiSeries out(B);
  for (int beta = 0; beta <= B && p - nu * beta >= 0; ++beta) {
    for (int l = 0; l <= p - nu * beta; ++l) {
      const Rat c = t.ct(p, l, beta);
      if (c == 0) continue;
      const int sh = pres == Presentation::W ? l + nu * beta - p : p - nu * beta - l;
      BiSeries term = shift_q(bs_shift_aux(apply_D(base, pres, l), sh), beta);
      out = bs_add(out, bs_scale(term, c));
    }
  }
  return out;
}

QSeries mu_from_residue(const BiSeries& ftilde_hbar) { return bs_residue(bs_log(ftilde_hbar)); }

QSeries mu_closed(const MultiDegree& md, int Bq) {
  QSeries mu(Bq);
  const int n = md.n(), D = md.sum_d();
  for (int k = 1; k <= Bq; ++k) {
    Int num = ipow(md.dd(), static_cast<unsigned long>(k));
    for (int i = 1; i < k; ++i) num *= (k * D + 1 - i * n);
    Int den = factorial(static_cast<unsigned long>(k)) * k * ipow(Int(n), static_cast<unsigned long>(k));
    mu.set(k, frac(num, den));
  }
  return mu;
}

QSeries L_closed(const MultiDegree& md, int Bq) {
  QSeries L(Bq);
  const int n = md.n(), D = md.sum_d();
  for (int k = 0; k <= Bq; ++k) {
    Int num = 1;
    for (int i = 1; i < k; ++i) num *= (k * D + 1 - i * n);
    L.set(k, frac(num, factorial(static_cast<unsigned long>(k))) * rpow(frac(md.dd(), n), k));
  }
  return L;
}

std::pair<QSeries, QSeries> phi_closed(const MultiDegree& md, int Bq) {
  const long n = md.n(), D = md.sum_d(), r = md.r();
  const QSeries L = L_closed(md, Bq);
  const QSeries Y = one(Bq) + qs_shift(qs_pow_int(L, D) * (Rat(md.dd()) * (1 - frac(D, n))), 1);
  const QSeries Yh = qs_pow(Y, frac(-1, 2));
  const QSeries phi0 = qs_pow(L, frac(r + 1, 2)) * Yh;

  Rat sinv = 0;
  for (int d : md.degrees()) sinv += frac(1, d);
  const QSeries Lr = qs_pow(L, frac(r - 1, 2));
  const QSeries t1 = (Lr * (L - one(Bq)) * Yh) * Rat((Rat(3 * r * r - 1) - 2 * D * sinv) / (24 * D));

  const long K = D * n - D - 3 * r * r + 1;
  const long nu = n - D;
  const QSeries Ln = qs_pow_int(L, n);
  QSeries big(Bq);
  big += L * Rat(D * D * D * K);
  big += Ln * Rat(D * D * n * (2 * D * D - 6 * D * n - 6 * D * r + 3 * n * n + 6 * n * r + n + 3 * r * r - 1));
  big += (Ln * L) * Rat(3 * D * D * nu * K);
  big += qs_pow_int(L, 2 * n) * Rat(D * n * nu * (4 * D * D - 5 * D * n - 12 * D * r - 2 * n * n + 6 * n * r + n + 6 * r * r - 2));
  big += qs_pow_int(L, 2 * n + 1) * Rat(3 * D * nu * nu * K);
  big += qs_pow_int(L, 3 * n) * Rat(n * nu * nu * (2 * D * D + D * n - 6 * D * r + 3 * r * r - 1));
  big += qs_pow_int(L, 3 * n + 1) * Rat(nu * nu * nu * K);
  const QSeries t2 = (Lr * qs_pow(Y, frac(-7, 2)) * big) * frac(1, 24 * D * n * n * n);
  return {phi0, t1 + t2};
}

Hyper::Hyper(const MultiDegree& md, int Bq, int pad)
    : md_(md),
      B_(Bq),
      hbar_hi_(2 * Bq + 4 + pad),
      w_hi_(3 * md.n() + 4 + pad),
      tables_(md, md.n(), Bq) {
  if (Bq < 0) throw OutOfRange("q-order must be >= 0");
  ft_h_ = series_Ftilde_hbar(md_, B_, hbar_hi_);
  f_w_ = series_F_w(md_, B_, w_hi_, false);
  ft_w_ = series_F_w(md_, B_, w_hi_, true);
  mu_res_ = mu_from_residue(ft_h_);
  mu_cl_ = mu_closed(md_, B_);
  L_ = L_closed(md_, B_);

  std::vector<Slice> x(static_cast<std::size_t>(B_ + 1));
  for (int beta = 1; beta <= B_; ++beta) x[beta] = Slice::exact(LaurentPoly::monomial(-mu_res_[beta], -1));
  E_ = bs_exp(BiSeries(std::move(x)));
  Q_ = bs_mul(E_, ft_h_);
  phi0_s_ = bs_coeff(Q_, 0);
  phi1_s_ = bs_coeff(Q_, 1);
  std::tie(phi0_c_, phi1_c_) = phi_closed(md_, B_);

  for (int p = 0; p <= md_.n(); ++p) {
    R_.push_back(bs_mul(E_, series_Fp(tables_, p, ft_h_, Presentation::Hbar)));
    th_res_[0].push_back(bs_coeff(R_.back(), 0));
    th_res_[1].push_back(bs_coeff(R_.back(), 1));
  }
  for (int p = 0; p <= md_.n(); ++p) {
    th_lem_[0].push_back(theta_lemma(p, 0));
    th_lem_[1].push_back(theta_lemma(p, 1));
  }
}

const BiSeries& Hyper::regularized_p(int p) const {
  if (p < 0 || p > md_.n()) throw OutOfRange("regularized_p: p=" + std::to_string(p) + " outside 0..n");
  return R_[static_cast<std::size_t>(p)];
}

const QSeries& Hyper::theta(int p, int level, ThetaRoute route) const {
  if (p < 0 || p > md_.n()) throw OutOfRange("theta: p=" + std::to_string(p) + " outside 0..n");
  if (level != 0 && level != 1) throw OutOfRange("theta: level must be 0 or 1");
  const auto& v = route == ThetaRoute::Residue ? th_res_[level] : th_lem_[level];
  return v[static_cast<std::size_t>(p)];
}

// Lemma route: everything from Phi_0, Phi_1 (closed) and L.
QSeries Hyper::theta_lemma(int p, int level) const {
  const int nu = md_.nu();
  const QSeries& phi0 = phi0_c_;
  // sum_beta c~_{p, e+off}^{(beta)} weight(e) q^{beta} L^{e+k}, e = p - nu beta
  auto sum = [&](int off, int k, auto weight) {
    QSeries tot(B_);
    for (int beta = 0; beta <= B_; ++beta) {
      const int e = p - nu * beta;
      if (e < 0) break;
      const Rat c = tables_.ct(p, e + off, beta) * weight(e);
      if (c == 0) continue;
      tot += qs_shift(qs_pow_int(L_, e + k) * c, beta);
    }
    return tot;
  };
  auto unit = [](int) { return Rat(1); };
  if (level == 0) return phi0 * sum(0, 0, unit);
  const QSeries s_main = sum(0, 0, unit);
  const QSeries s_low = sum(-1, -1, unit);
  const QSeries s_e = sum(0, -1, [](int e) { return Rat(e); });
  const QSeries s_bin = sum(0, -2, [](int e) { return Rat(binom(e, 2)); });
  return phi0 * s_low + phi1_c_ * s_main + qs_theta(phi0) * s_e + qs_theta(L_) * phi0 * s_bin;
}

}  // namespace gwfano
