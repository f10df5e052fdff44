#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwfano/coeff_tables.hpp"
#include "gwfano/multidegree.hpp"

namespace gwfano {

struct SumValues {
  int beta = 0;
  Rat u1, u2, u3, v1, v2, v3;
  // U2 / V2 summands weighted by (p - nu b2) and C(p - nu b2, 2) (U), or by
  // (n - p - nu b2) and C(n - p - nu b2, 2) (V).
  Rat u_lin, u_bin, v_lin, v_bin;
};

// Needs t.p_max() >= n-1 and t.beta_max() >= beta.
SumValues compute_sums(const MultiDegree& md, const CoeffTables& t, int beta);

// U2 and U3 with p -> n-1-r-p and b1 <-> b2 (must equal the direct sums).
std::pair<Rat, Rat> u2_u3_reflected(const MultiDegree& md, const CoeffTables& t, int beta);

struct LemmaCheck {
  std::string id;
  std::string geometry;
  int beta = 0;
  Rat expected, computed;
  bool pass = false;
};

// Proven statements: the U2 formula, the four weighted identities, U1 at
// beta=1, and U1 vanishing under its hypothesis.
std::vector<LemmaCheck> check_sum_lemmas(const MultiDegree& md, int beta_max);

// -(d^d/2) ((sum (d_i-1)/2)^2 - sum (d_i-1)(2d_i-1)/(6 d_i))
Rat u1_beta1_formula(const MultiDegree& md);
bool u1_vanishing_hypothesis(const MultiDegree& md, int beta);

// h_j(d) values keyed by (j, d).
using HjTable = std::map<std::pair<int, int>, Rat>;

// Conjectured U1(n, d, 2); nullopt if a needed h_j(d_i) is missing.
std::optional<Rat> u1_beta2_conjecture(const MultiDegree& md, const HjTable& hj);
// The r = 2, n = 2|d| - 6 specialization in terms of S1 = sum d_i h_1(d_i),
// S2 = sum d_i^2 h_2(d_i).
std::optional<Rat> u1_beta2_r2_special(const MultiDegree& md, const HjTable& hj);

struct ConjectureCase {
  std::string conjecture;  // U3 | U1_vanishing | U1_beta2 | V1 | V2 | V3
  std::string geometry;
  int beta = 0;
  std::string expected;  // rational, "nonzero", or "undefined"
  std::string computed;
  std::string verdict;   // agree | disagree | skipped: ...
};

// Report-only comparison of the conjectured closed forms against brute force.
std::vector<ConjectureCase> evaluate_conjectures(const MultiDegree& md, int beta_max,
                                                 const std::optional<HjTable>& hj);

}  // namespace gwfano
