#include "gwfano/suite.hpp"

#include <sstream>

#include "gwfano/hypergeometric.hpp"
#include "gwfano/invariants.hpp"
#include "gwfano/structure_sums.hpp"

namespace gwfano {

namespace {

std::string first_diff(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return "q^" + std::to_string(k) + ": " + to_string(a[k]) + " vs " + to_string(b[k]);
  }
  return "orders " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
}

bool same_rows(const std::vector<InvariantRow>& a, const std::vector<InvariantRow>& b, std::string& detail) {
  if (a.size() != b.size()) {
    detail = "row count differs";
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].standard != b[i].standard || a[i].reduced != b[i].reduced || a[i].difference != b[i].difference ||
        a[i].type_a != b[i].type_a || a[i].type_b != b[i].type_b) {
      detail = "b=" + std::to_string(a[i].b) + " changed: " + to_string(a[i].standard) + " vs " +
               to_string(b[i].standard);
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<MultiDegree> default_grid() {
  return {MultiDegree(5, {3}), MultiDegree(6, {3}),    MultiDegree(7, {3}),
          MultiDegree(7, {2, 2}), MultiDegree(9, {2, 2}), MultiDegree(6, {2, 3})};
}

std::vector<CheckResult> run_identity_suite(const MultiDegree& md, const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  const std::string g = md.label();
  const int n = md.n(), r = md.r(), nu = md.nu(), B = opts.order;
  auto add = [&](const std::string& id, bool pass, const std::string& detail) {
    out.push_back({id, g, pass, pass ? "" : detail});
  };

  // Convolution identity for c~ against c.
  {
    CoeffTables t(md, n, B);
    if (opts.corrupt) t = t.with_corrupted_ctilde((*opts.corrupt)[0], (*opts.corrupt)[1], (*opts.corrupt)[2], 1);
    std::string detail;
    for (int beta = 0; beta <= B && detail.empty(); ++beta) {
      for (int p = 0; p <= n && detail.empty(); ++p) {
        for (int l = 0; l <= p - nu * beta; ++l) {
          const Rat want = (beta == 0 && p == l) ? 1 : 0;
          const Rat got = t.convolution(p, l, beta);
          if (got != want) {
            detail = "(p,l,beta)=(" + std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(beta) +
                     "): " + to_string(got);
            break;
          }
        }
      }
    }
    add("convolution", detail.empty(), detail);
  }

  // c table against w^p D^p F(w, q/w^nu).
  {
    const CTable c(md, n, B, n);
    const BiSeries F = series_F_w(md, B, n + nu * B + 4);
    std::string detail;
    for (int p = 0; p <= n && detail.empty(); ++p) {
      const BiSeries s = apply_D(F, Presentation::W, p);
      for (int beta = 0; beta <= B && detail.empty(); ++beta) {
        for (int l = 0; l <= n; ++l) {
          if (s.coeff(beta, l + nu * beta - p) != c(p, l, beta)) {
            detail = "(p,l,beta)=(" + std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(beta) + ")";
            break;
          }
        }
      }
    }
    add("generating_function", detail.empty(), detail);
  }

  {
    const QSeries L = L_closed(md, 12);
    const QSeries lhs = qs_pow_int(L, n) - qs_shift(qs_pow_int(L, md.sum_d()) * Rat(md.dd()), 1);
    const QSeries one = QSeries::constant(1, 12);
    add("L_identity", lhs == one, first_diff(lhs, one));
    const QSeries mu = mu_closed(md, 12);
    const QSeries L2 = one + qs_theta(mu);
    add("L_from_mu", L2 == L, first_diff(L2, L));
  }

  const Hyper h(md, B);
  add("mu_routes", h.mu(Route::Series) == h.mu(Route::Closed), first_diff(h.mu(Route::Series), h.mu(Route::Closed)));
  add("phi0_routes", h.phi0(Route::Series) == h.phi0(Route::Closed),
      first_diff(h.phi0(Route::Series), h.phi0(Route::Closed)));
  add("phi1_routes", h.phi1(Route::Series) == h.phi1(Route::Closed),
      first_diff(h.phi1(Route::Series), h.phi1(Route::Closed)));
  {
    std::string detail;
    for (int p = 0; p <= n && detail.empty(); ++p) {
      for (int lv = 0; lv <= 1; ++lv) {
        const QSeries& a = h.theta(p, lv, ThetaRoute::Residue);
        const QSeries& b = h.theta(p, lv, ThetaRoute::Lemma);
        if (a != b) {
          detail = "p=" + std::to_string(p) + " level " + std::to_string(lv) + " " + first_diff(a, b);
          break;
        }
      }
    }
    add("theta_routes", detail.empty(), detail);
  }
  {
    std::string detail;
    const BiSeries& Q = h.regularized();
    for (int beta = 0; beta <= B && detail.empty(); ++beta) {
      const int lo = Q.window(beta).first;
      for (int e = lo; e < 0; ++e) {
        if (Q.coeff(beta, e) != 0) {
          detail = "q^" + std::to_string(beta) + " hbar^" + std::to_string(e);
          break;
        }
      }
    }
    add("regularizable", detail.empty(), detail);
  }
  {
    std::string detail;
    for (int p = 0; p <= n - 1 && detail.empty(); ++p) {
      const BiSeries Fp = series_Fp(h.tables(), p, h.f_w(), Presentation::W);
      for (int beta = 0; beta <= B && detail.empty(); ++beta) {
        for (int e = -p; e < 0; ++e) {
          if (Fp.coeff(beta, e) != 0) {
            detail = "p=" + std::to_string(p) + " q^" + std::to_string(beta) + " w^" + std::to_string(e);
            break;
          }
        }
      }
    }
    add("Fp_regular", detail.empty(), detail);
  }

  const InvariantEngine eng(md, -1, {opts.order_pad, opts.window_pad, ThetaRoute::Lemma});
  const auto rows = eng.rows();
  {
    const Rat chern = chern_degree0_oracle(md);
    add("degree0_chern", rows[0].standard == chern, to_string(rows[0].standard) + " vs " + to_string(chern));
  }
  {
    std::string detail;
    for (const auto& row : rows) {
      if (!row.consistent) detail += "b=" + std::to_string(row.b) + " ";
    }
    add("three_path", detail.empty(), detail);
  }
  {
    std::string detail;
    for (const auto& row : rows) {
      if (row.b * nu > n - 2 - r && row.difference != 0) detail += "b=" + std::to_string(row.b) + " ";
    }
    add("svr_vanishing", detail.empty(), detail);
  }
  if (nu >= 2) {
    std::string detail;
    for (const auto& row : rows) {
      if (row.b == 0) continue;
      const Rat o = eng.type_B_lemma_oracle(row.b);
      if (o != row.type_b) detail += "b=" + std::to_string(row.b) + ": " + to_string(o) + " ";
    }
    add("typeB_lemma_oracle", detail.empty(), detail);
  }
  {
    const int extra = std::max(0, 6 - md.max_b()) + opts.order_pad;
    const InvariantEngine e6(md, -1, {extra, opts.window_pad, ThetaRoute::Lemma});
    const QSeries a = e6.A_series(), b = e6.A_double_residue();
    add("A_double_residue", a == b, first_diff(a, b));
  }
  {
    const InvariantEngine big(md, -1, {opts.order_pad + 2, opts.window_pad + 4, ThetaRoute::Lemma});
    std::string detail;
    add("truncation_stability", same_rows(rows, big.rows(), detail), detail);
  }
  {
    const InvariantEngine res(md, -1, {opts.order_pad, opts.window_pad, ThetaRoute::Residue});
    std::string detail;
    add("route_stability", same_rows(rows, res.rows(), detail), detail);
  }
  {
    std::string detail;
    for (const auto& c : check_sum_lemmas(md, 3)) {
      if (!c.pass) detail += c.id + "@" + std::to_string(c.beta) + " ";
    }
    add("structure_lemmas", detail.empty(), detail);
  }
  return out;
}

}  // namespace gwfano
