#pragma once

#include <utility>
#include <vector>

#include "gwfano/biseries.hpp"
#include "gwfano/coeff_tables.hpp"
#include "gwfano/multidegree.hpp"
#include "gwfano/qseries.hpp"

namespace gwfano {

// Which auxiliary variable a BiSeries is written in: w, or hbar = 1/w.
enum class Presentation { W, Hbar };
enum class Route { Series, Closed };
enum class ThetaRoute { Residue, Lemma };

// Ftilde(1/hbar, q): slice beta is prod_k prod_i (d_k + i hbar) / prod_j ((1+j hbar)^n - 1),
// kept through hbar^hbar_hi.
BiSeries series_Ftilde_hbar(const MultiDegree& md, int Bq, int hbar_hi);
// F(w, q) (tilde=false; denominator prod (w+j)^n) or Ftilde(w, q) (tilde=true;
// denominator prod ((w+j)^n - w^n)); slice beta carries w^{nu beta}. Kept through w^w_hi.
BiSeries series_F_w(const MultiDegree& md, int Bq, int w_hi, bool tilde = false);
// D = 1 + (q/w) d/dq in the w presentation, 1 + hbar q d/dq in the hbar one.
BiSeries apply_D(const BiSeries& h, Presentation pres, int times = 1);
// sum_beta sum_{l <= p - nu beta} c~_{p,l}^{(beta)} q^beta w^{l+nu beta-p} D^l base.
BiSeries series_Fp(const CoeffTables& t, int p, const BiSeries& base, Presentation pres);

QSeries mu_from_residue(const BiSeries& ftilde_hbar);
QSeries mu_closed(const MultiDegree& md, int Bq);
QSeries L_closed(const MultiDegree& md, int Bq);
// (Phi_0, Phi_1) from the closed formulas.
std::pair<QSeries, QSeries> phi_closed(const MultiDegree& md, int Bq);

// Every hypergeometric ingredient for one geometry through q^Bq, built once.
class Hyper {
 public:
  // pad enlarges every auxiliary window beyond the analytic minimum.
  Hyper(const MultiDegree& md, int Bq, int pad = 0);

  const MultiDegree& md() const { return md_; }
  int order() const { return B_; }
  int hbar_hi() const { return hbar_hi_; }
  int w_hi() const { return w_hi_; }
  const CoeffTables& tables() const { return tables_; }

  const BiSeries& ftilde_hbar() const { return ft_h_; }
  // e^{-mu/hbar}
  const BiSeries& exp_mu() const { return E_; }
  // e^{-mu/hbar} Ftilde(1/hbar, q)
  const BiSeries& regularized() const { return Q_; }
  const BiSeries& f_w() const { return f_w_; }
  const BiSeries& ftilde_w() const { return ft_w_; }

  const QSeries& mu(Route route) const { return route == Route::Series ? mu_res_ : mu_cl_; }
  const QSeries& L() const { return L_; }
  const QSeries& phi0(Route route) const { return route == Route::Series ? phi0_s_ : phi0_c_; }
  const QSeries& phi1(Route route) const { return route == Route::Series ? phi1_s_ : phi1_c_; }

  // e^{-mu/hbar} Ftilde_p(1/hbar, q) for 0 <= p <= n.
  const BiSeries& regularized_p(int p) const;
  // Theta_p^{(level)} for 0 <= p <= n.
  const QSeries& theta(int p, int level, ThetaRoute route) const;

 private:
  QSeries theta_lemma(int p, int level) const;

  MultiDegree md_;
  int B_;
  int hbar_hi_, w_hi_;
  CoeffTables tables_;
  BiSeries ft_h_, E_, Q_, f_w_, ft_w_;
  QSeries mu_res_, mu_cl_, L_, phi0_s_, phi0_c_, phi1_s_, phi1_c_;
  std::vector<BiSeries> R_;
  std::vector<QSeries> th_res_[2], th_lem_[2];
};

}  // namespace gwfano
