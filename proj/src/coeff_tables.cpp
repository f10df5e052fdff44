#include "gwfano/coeff_tables.hpp"

#include <string>

#include "gwfano/biseries.hpp"
#include "gwfano/errors.hpp"

namespace gwfano {

namespace {

std::string where(int p, int l, int beta) {
  return "(p=" + std::to_string(p) + ", l=" + std::to_string(l) + ", beta=" + std::to_string(beta) + ")";
}

}  // namespace

CTable::CTable(const MultiDegree& md, int p_max, int beta_max, int l_max)
    : p_max_(p_max), beta_max_(beta_max), l_max_(l_max) {
  if (p_max < 0 || beta_max < 0 || l_max < 0) throw OutOfRange("CTable bounds must be >= 0");
  v_.resize(static_cast<std::size_t>(beta_max + 1));
  for (int beta = 0; beta <= beta_max; ++beta) {
    LaurentPoly num = LaurentPoly::constant(1);
    for (int d : md.degrees()) {
      for (int i = 1; i <= d * beta; ++i) num = lp_mul_trunc(num, LaurentPoly::linear(i, d), l_max);
    }
    LaurentPoly den = LaurentPoly::constant(1);
    for (int j = 1; j <= beta; ++j) {
      for (int k = 0; k < md.n(); ++k) den = lp_mul_trunc(den, LaurentPoly::linear(j, 1), l_max);
    }
    LaurentPoly base = lp_mul_trunc(num, lp_inv_series(den, l_max), l_max);
    auto& row = v_[static_cast<std::size_t>(beta)];
    row.resize(static_cast<std::size_t>(p_max + 1));
    for (int p = 0; p <= p_max; ++p) {
      if (p > 0) base = lp_mul_trunc(base, LaurentPoly::linear(beta, 1), l_max);
      auto& cell = row[static_cast<std::size_t>(p)];
      cell.resize(static_cast<std::size_t>(l_max + 1));
      for (int l = 0; l <= l_max; ++l) cell[static_cast<std::size_t>(l)] = base.coeff(l);
    }
  }
}

Rat CTable::operator()(int p, int l, int beta) const {
  if (p < 0 || l < 0) return 0;
  if (beta < 0 || beta > beta_max_ || p > p_max_ || l > l_max_) {
    throw InsufficientBounds("c table entry " + where(p, l, beta) + " outside built bounds");
  }
  return v_[beta][p][l];
}

CoeffTables::CoeffTables(const MultiDegree& md, int p_max, int beta_max)
    : CoeffTables(md, CTable(md, p_max, beta_max, p_max), p_max, beta_max) {}

CoeffTables::CoeffTables(const MultiDegree& md, CTable c, int p_max, int beta_max)
    : nu_(md.nu()), p_max_(p_max), beta_max_(beta_max), c_(std::move(c)) {
  if (c_.p_max() < p_max || c_.l_max() < p_max || c_.beta_max() < beta_max) {
    throw InsufficientBounds("c table too small for the requested c~ bounds");
  }
  t_.resize(static_cast<std::size_t>(beta_max + 1));
  for (int beta = 0; beta <= beta_max; ++beta) {
    t_[beta].resize(static_cast<std::size_t>(p_max + 1));
    for (int p = 0; p <= p_max; ++p) {
      const int top = p - nu_ * beta;
      if (top < 0) continue;
      auto& cell = t_[beta][p];
      cell.resize(static_cast<std::size_t>(top + 1));
      for (int l = 0; l <= top; ++l) {
        Rat v = (beta == 0 && p == l) ? 1 : 0;
        for (int b1 = 0; b1 < beta; ++b1) {
          const int kmax = p - nu_ * b1;
          for (int k = 0; k <= kmax; ++k) {
            const Rat& t = t_[b1][p][k];
            if (t != 0) v -= t * c_(k, l, beta - b1);
          }
        }
        cell[static_cast<std::size_t>(l)] = v;
      }
    }
  }
}

Rat CoeffTables::ct(int p, int l, int beta) const {
  if (p < 0 || l < 0 || beta < 0) return 0;
  if (p > p_max_ || beta > beta_max_) {
    throw InsufficientBounds("c~ entry " + where(p, l, beta) + " outside built bounds");
  }
  if (l > p - nu_ * beta) return 0;
  return t_[beta][p][l];
}

Rat CoeffTables::convolution(int p, int l, int beta) const {
  Rat s = 0;
  for (int b1 = 0; b1 <= beta; ++b1) {
    const int kmax = p - nu_ * b1;
    for (int k = 0; k <= kmax; ++k) {
      const Rat t = ct(p, k, b1);
      if (t != 0) s += t * c(k, l, beta - b1);
    }
  }
  return s;
}

CoeffTables CoeffTables::with_corrupted_ctilde(int p, int l, int beta, const Rat& delta) const {
  if (p < 0 || l < 0 || beta < 0 || p > p_max_ || beta > beta_max_ || l > p - nu_ * beta) {
    throw OutOfRange("cannot corrupt c~ entry " + where(p, l, beta) + ": not in the table");
  }
  CoeffTables copy = *this;
  copy.t_[beta][p][l] += delta;
  return copy;
}

}  // namespace gwfano
