#include "gwfano/structure_sums.hpp"

#include <functional>

#include "gwfano/errors.hpp"

namespace gwfano {

SumValues compute_sums(const MultiDegree& md, const CoeffTables& t, int beta) {
  const int n = md.n(), r = md.r(), nu = md.nu();
  if (t.p_max() < n - 1 || t.beta_max() < beta) throw InsufficientBounds("compute_sums: c~ table too small");
  SumValues s;
  s.beta = beta;
  for (int p = 0; p <= n - 1 - r; ++p) {
    for (int b1 = 0; b1 <= beta; ++b1) {
      const int b2 = beta - b1;
      const int e1 = n - 1 - r - p - nu * b1, e2 = p - nu * b2;
      const Rat a = t.ct(n - 1 - r - p, e1, b1);
      if (a == 0) continue;
      s.u1 += a * t.ct(p, e2 - 1, b2);
      const Rat m = a * t.ct(p, e2, b2);
      if (m == 0) continue;
      s.u2 += m;
      s.u3 += m * e2 * e1;
      s.u_lin += m * e2;
      s.u_bin += m * Rat(binom(e2, 2));
    }
  }
  for (int p = 1; p <= r; ++p) {
    for (int b1 = 0; b1 <= beta; ++b1) {
      const int b2 = beta - b1;
      const int e1 = n - 1 - r + p - nu * b1, e2 = n - p - nu * b2;
      const Rat a = t.ct(n - 1 - r + p, e1, b1);
      if (a == 0) continue;
      s.v1 += a * t.ct(n - p, e2 - 1, b2);
      const Rat m = a * t.ct(n - p, e2, b2);
      if (m == 0) continue;
      s.v2 += m;
      s.v3 += m * e2 * e1;
      s.v_lin += m * e2;
      s.v_bin += m * Rat(binom(e2, 2));
    }
  }
  return s;
}

std::pair<Rat, Rat> u2_u3_reflected(const MultiDegree& md, const CoeffTables& t, int beta) {
  const int n = md.n(), r = md.r(), nu = md.nu();
  Rat u2, u3;
  for (int q = n - 1 - r; q >= 0; --q) {
    for (int b2 = beta; b2 >= 0; --b2) {
      const int b1 = beta - b2;
      const int e1 = q - nu * b1, e2 = n - 1 - r - q - nu * b2;
      const Rat m = t.ct(q, e1, b1) * t.ct(n - 1 - r - q, e2, b2);
      u2 += m;
      u3 += m * e1 * e2;
    }
  }
  return {u2, u3};
}

Rat u1_beta1_formula(const MultiDegree& md) {
  Rat a = 0, b = 0;
  for (int d : md.degrees()) {
    a += frac(d - 1, 2);
    b += frac((d - 1) * (2 * d - 1), 6 * d);
  }
  return -Rat(md.dd()) / 2 * (a * a - b);
}

bool u1_vanishing_hypothesis(const MultiDegree& md, int beta) {
  return (beta - 1) * md.n() >= beta * md.sum_d() - md.r() - 1;
}

std::vector<LemmaCheck> check_sum_lemmas(const MultiDegree& md, int beta_max) {
  const CoeffTables t(md, md.n(), beta_max);
  const int n = md.n(), r = md.r(), nu = md.nu();
  const Rat dd(md.dd());
  std::vector<LemmaCheck> out;
  auto add = [&](const std::string& id, int beta, const Rat& expected, const Rat& computed) {
    out.push_back({id, md.label(), beta, expected, computed, expected == computed});
  };
  for (int beta = 0; beta <= beta_max; ++beta) {
    const SumValues s = compute_sums(md, t, beta);
    const Rat u2 = Rat((beta == 0) ? n - r : 0) - Rat((beta == 1) ? n - r - nu : 0) * dd;
    add("U2", beta, u2, s.u2);
    const long m = n - 1 - r - nu * beta;
    const long m2 = 2L * n - 1 - r - nu * beta;
    add("U_weighted_linear", beta, frac(m, 2) * s.u2, s.u_lin);
    add("U_weighted_binomial", beta, Rat(binom(m, 2)) / 2 * s.u2 - s.u3 / 2, s.u_bin);
    add("V_weighted_linear", beta, frac(m2, 2) * s.v2, s.v_lin);
    add("V_weighted_binomial", beta, Rat(binom(m2, 2)) / 2 * s.v2 - s.v3 / 2, s.v_bin);
    if (beta == 1) add("U1_beta1", beta, u1_beta1_formula(md), s.u1);
    if (u1_vanishing_hypothesis(md, beta)) add("U1_vanishing", beta, 0, s.u1);
  }
  return out;
}

std::optional<Rat> u1_beta2_conjecture(const MultiDegree& md, const HjTable& hj) {
  const int n = md.n(), r = md.r(), D = md.sum_d();
  const int M = 2 * D - n - r - 2;
  // g_j = -2 sum_i d_i^j h_j(d_i) / j
  std::vector<Rat> g(static_cast<std::size_t>(std::max(M, 0) + 1));
  for (int j = 1; j <= M; ++j) {
    Rat s = 0;
    for (int d : md.degrees()) {
      auto it = hj.find({j, d});
      if (it == hj.end()) return std::nullopt;
      s += Rat(ipow(Int(d), static_cast<unsigned long>(j))) * it->second;
    }
    g[j] = -2 * s / j;
  }
  Rat total = 0;
  // k_j >= 0 for j = 1..M with sum j k_j = s <= M
  std::function<void(int, int, Rat)> rec = [&](int j, int s, Rat prod) {
    if (j > M) {
      total += Rat(binom(2L * D - 2 * r - 3 - s, M - s)) * prod;
      return;
    }
    Rat pw = 1;
    for (int k = 0; s + j * k <= M; ++k) {
      if (k > 0) pw *= g[j] / k;
      rec(j + 1, s + j * k, prod * pw);
    }
  };
  if (M >= 0) rec(1, 0, Rat(1));
  Rat df(md.dfac());
  const Rat sign = ((n + r) % 2 == 0) ? 1 : -1;
  return df * df * sign / 2 * total;
}

std::optional<Rat> u1_beta2_r2_special(const MultiDegree& md, const HjTable& hj) {
  if (md.r() != 2 || md.n() != 2 * md.sum_d() - 6) return std::nullopt;
  Rat s1 = 0, s2 = 0;
  for (int d : md.degrees()) {
    auto h1 = hj.find({1, d});
    auto h2 = hj.find({2, d});
    if (h1 == hj.end() || h2 == hj.end()) return std::nullopt;
    s1 += d * h1->second;
    s2 += d * d * h2->second;
  }
  const int D = md.sum_d();
  Rat df(md.dfac());
  return df * df * ((Rat(D) - frac(7, 2)) * (D - 4) + (8 - 2 * D) * s1 + s1 * s1 - s2 / 2);
}

std::vector<ConjectureCase> evaluate_conjectures(const MultiDegree& md, int beta_max,
                                                 const std::optional<HjTable>& hj) {
  const CoeffTables t(md, md.n(), beta_max);
  const int n = md.n(), r = md.r(), D = md.sum_d();
  const Rat dd(md.dd());
  std::vector<ConjectureCase> out;
  auto rat_case = [&](const std::string& id, int beta, const Rat& expected, const Rat& computed) {
    out.push_back({id, md.label(), beta, to_string(expected), to_string(computed),
                   expected == computed ? "agree" : "disagree"});
  };
  auto delta = [](int beta, int k) { return Rat(beta == k ? 1 : 0); };
  for (int beta = 0; beta <= beta_max; ++beta) {
    const SumValues s = compute_sums(md, t, beta);
    rat_case("U3", beta, Rat(binom(n - r, 3)) * delta(beta, 0) - Rat(binom(D - r, 3)) * dd * delta(beta, 1), s.u3);
    if (beta >= 1) {
      const bool hyp = u1_vanishing_hypothesis(md, beta);
      const bool zero = s.u1 == 0;
      out.push_back({"U1_vanishing", md.label(), beta, hyp ? "0" : "nonzero", to_string(s.u1),
                     hyp == zero ? "agree" : "disagree"});
    }
    if (beta == 2) {
      if (!hj) {
        out.push_back({"U1_beta2", md.label(), beta, "undefined", to_string(s.u1), "skipped: undefined symbol"});
      } else if (auto e = u1_beta2_conjecture(md, *hj)) {
        rat_case("U1_beta2", beta, *e, s.u1);
      } else {
        out.push_back({"U1_beta2", md.label(), beta, "undefined", to_string(s.u1), "skipped: h_j table incomplete"});
      }
    }
    const Rat rd = Rat(r * (D - 1)) * dd / 2;
    rat_case("V1", beta, -rd * delta(beta, 1) + rd * dd * delta(beta, 2), s.v1);
    rat_case("V2", beta, Rat(r) * delta(beta, 0) - 2 * r * dd * delta(beta, 1) + r * dd * dd * delta(beta, 2), s.v2);
    const Rat c0 = Rat(n * n * r - n * (r * r + r)) + frac(r * (r + 1) * (r + 2), 6);
    const Rat c1 = Rat((2 * r * D - r * r - r) * n) - (Rat((r * r + r) * D) - frac(r * (r + 1) * (r + 2), 3));
    rat_case("V3", beta, c0 * delta(beta, 0) - c1 * dd * delta(beta, 1) + c0 * dd * dd * delta(beta, 2), s.v3);
  }
  return out;
}

}  // namespace gwfano
