#pragma once

#include <vector>

#include "gwfano/multidegree.hpp"
#include "gwfano/rational.hpp"

namespace gwfano {

// c_{p,l}^{(beta)}: coefficient of w^l in
//   (w+beta)^p prod_k prod_{i<=d_k beta}(d_k w + i) / prod_{j<=beta}(w+j)^n.
class CTable {
 public:
  CTable() = default;
  CTable(const MultiDegree& md, int p_max, int beta_max, int l_max);

  int p_max() const { return p_max_; }
  int beta_max() const { return beta_max_; }
  int l_max() const { return l_max_; }
  // 0 for p < 0 or l < 0; InsufficientBounds beyond the built bounds.
  Rat operator()(int p, int l, int beta) const;

 private:
  int p_max_ = -1, beta_max_ = -1, l_max_ = -1;
  std::vector<std::vector<std::vector<Rat>>> v_;  // [beta][p][l]
};

// c~ table from the convolution recursion against c, plus c itself.
class CoeffTables {
 public:
  CoeffTables(const MultiDegree& md, int p_max, int beta_max);
  CoeffTables(const MultiDegree& md, CTable c, int p_max, int beta_max);

  const CTable& c_table() const { return c_; }
  int nu() const { return nu_; }
  int p_max() const { return p_max_; }
  int beta_max() const { return beta_max_; }

  Rat c(int p, int l, int beta) const { return c_(p, l, beta); }
  // c~_{p,l}^{(beta)}; 0 when p < 0, l < 0 or l > p - nu*beta.
  Rat ct(int p, int l, int beta) const;

  // sum_{b1+b2=beta} sum_k c~_{p,k}^{(b1)} c_{k,l}^{(b2)}; should equal
  // delta_{beta,0} delta_{p,l} for l <= p - nu*beta.
  Rat convolution(int p, int l, int beta) const;

  // Copy with one c~ entry shifted by delta (negative tests).
  CoeffTables with_corrupted_ctilde(int p, int l, int beta, const Rat& delta) const;

 private:
  int nu_;
  int p_max_, beta_max_;
  CTable c_;
  std::vector<std::vector<std::vector<Rat>>> t_;  // [beta][p][l], l <= p - nu*beta
};

}  // namespace gwfano
