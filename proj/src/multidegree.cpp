#include "gwfano/multidegree.hpp"

#include <algorithm>

#include "gwfano/errors.hpp"

namespace gwfano {

MultiDegree::MultiDegree(int n, std::vector<int> degrees) : n_(n), d_(std::move(degrees)) {
  if (d_.empty()) throw InvalidGeometry("at least one degree is required");
  std::sort(d_.begin(), d_.end());
  dd_ = 1;
  dfac_ = 1;
  prod_ = 1;
  for (int d : d_) {
    if (d < 2) throw InvalidGeometry("degree " + std::to_string(d) + " < 2");
    sum_ += d;
    dd_ *= ipow(Int(d), static_cast<unsigned long>(d));
    dfac_ *= factorial(static_cast<unsigned long>(d));
    prod_ *= d;
  }
  if (n_ < 1) throw InvalidGeometry("ambient n must be positive");
  if (nu() < 1) throw InvalidGeometry("not Fano: index n - |d| = " + std::to_string(nu()) + " < 1");
  if (dim() < 1) throw InvalidGeometry("dimension n - 1 - r = " + std::to_string(dim()) + " < 1");
}

std::string MultiDegree::label() const {
  std::string s = "(" + std::to_string(n_) + ",(";
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d_[i]);
  }
  return s + "))";
}

}  // namespace gwfano
