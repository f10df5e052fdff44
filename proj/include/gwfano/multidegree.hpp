#pragma once

#include <string>
#include <vector>

#include "gwfano/rational.hpp"

namespace gwfano {

// Complete intersection of hypersurfaces of degrees d_1..d_r in P^{n-1}.
// Degrees are stored sorted ascending.
class MultiDegree {
 public:
  // Throws InvalidGeometry unless every d_k >= 2, index >= 1, dim >= 1.
  MultiDegree(int n, std::vector<int> degrees);

  int n() const { return n_; }
  const std::vector<int>& degrees() const { return d_; }
  int r() const { return static_cast<int>(d_.size()); }
  int sum_d() const { return sum_; }
  int nu() const { return n_ - sum_; }
  int dim() const { return n_ - 1 - r(); }
  // prod d_k^{d_k}
  const Int& dd() const { return dd_; }
  // prod d_k!
  const Int& dfac() const { return dfac_; }
  // prod d_k
  const Int& prod_d() const { return prod_; }
  // Largest b with 1 + nu*b <= n.
  int max_b() const { return (n_ - 1) / nu(); }

  // "(5,(3))" / "(7,(2,2))"
  std::string label() const;

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.d_ < b.d_;
  }

 private:
  int n_;
  std::vector<int> d_;
  int sum_ = 0;
  Int dd_, dfac_, prod_;
};

}  // namespace gwfano
