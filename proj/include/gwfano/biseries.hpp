#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gwfano/qseries.hpp"
#include "gwfano/rational.hpp"

namespace gwfano {

// Exact Laurent polynomial: coefficient of x^(lo+i) is c[i]; all other
// exponents are zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Rat> coeffs);
  static LaurentPoly constant(const Rat& c);
  static LaurentPoly monomial(const Rat& c, int e);
  // a + b x
  static LaurentPoly linear(const Rat& a, const Rat& b);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int e) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

 private:
  void trim();
  int lo_ = 0;
  std::vector<Rat> c_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Rat& s, const LaurentPoly& a);
LaurentPoly lp_pow(const LaurentPoly& a, unsigned e);
// Product with every exponent above hi dropped.
LaurentPoly lp_mul_trunc(const LaurentPoly& a, const LaurentPoly& b, int hi);
// Series inverse x^(-v) u^(-1) for a = x^v u, kept through x^hi.
LaurentPoly lp_inv_series(const LaurentPoly& a, int hi);

// One q^beta slice of a BiSeries: zero below lo, exact through x^prec
// (nullopt means exact everywhere), unknown above prec.
struct Slice {
  int lo = 0;
  std::vector<Rat> c;
  std::optional<int> prec;

  static Slice exact(const LaurentPoly& p);
  static Slice truncated(const LaurentPoly& p, int prec);
  bool exact_zero() const { return c.empty() && !prec; }
  Rat coeff(int e) const;  // throws WindowUnderflow above prec
  void normalize();
};

// Series in q through q^order whose coefficients are Laurent series in one
// auxiliary variable (w or hbar) with tracked exact windows.
class BiSeries {
 public:
  explicit BiSeries(int order = 0);
  explicit BiSeries(std::vector<Slice> slices);
  static BiSeries one(int order);
  static BiSeries from_qseries(const QSeries& s, int aux_exp = 0);
  static BiSeries from_laurent(const LaurentPoly& p, int order);

  int order() const { return static_cast<int>(s_.size()) - 1; }
  const Slice& slice_data(int beta) const;
  std::vector<Slice>& slices() { return s_; }
  const std::vector<Slice>& slices() const { return s_; }

  Rat coeff(int beta, int aux_exp) const;
  // Lowest guaranteed-zero-below exponent and precision of a slice.
  std::pair<int, std::optional<int>> window(int beta) const;
  // Global window [min lo, min prec] across all slices.
  std::pair<int, std::optional<int>> window() const;

 private:
  std::vector<Slice> s_;
};

BiSeries bs_add(const BiSeries& a, const BiSeries& b);
BiSeries bs_sub(const BiSeries& a, const BiSeries& b);
BiSeries bs_scale(const BiSeries& a, const Rat& s);
BiSeries bs_mul(const BiSeries& a, const BiSeries& b);
// hi: requested absolute precision of the q^0 slice of the inverse.
BiSeries bs_inv(const BiSeries& a, int hi);
BiSeries bs_log(const BiSeries& a);
BiSeries bs_exp(const BiSeries& a);
// Multiply slice beta by aux^(k + step*beta).
BiSeries bs_shift_aux(const BiSeries& a, int k, int step = 0);
// Multiply slice beta by an exact Laurent polynomial depending on beta.
template <class F>
BiSeries bs_slice_map(const BiSeries& a, F&& factor);
// Drop everything above aux^hi.
BiSeries bs_truncate_aux(const BiSeries& a, int hi);

QSeries bs_residue(const BiSeries& a);
QSeries bs_coeff(const BiSeries& a, int aux_exp);
// Exact slice; throws WindowUnderflow if the slice is only known to a
// finite precision.
LaurentPoly bs_eval_slice(const BiSeries& a, int beta);
// Known part of a slice through aux^hi.
LaurentPoly bs_slice_through(const BiSeries& a, int beta, int hi);

Slice slice_mul(const Slice& a, const Slice& b);
Slice slice_add(const Slice& a, const Slice& b, const Rat& sb = 1);
Slice slice_times_poly(const Slice& a, const LaurentPoly& p);

template <class F>
BiSeries bs_slice_map(const BiSeries& a, F&& factor) {
  std::vector<Slice> out;
  out.reserve(a.slices().size());
  for (int beta = 0; beta <= a.order(); ++beta) {
    out.push_back(slice_times_poly(a.slices()[beta], factor(beta)));
  }
  return BiSeries(std::move(out));
}

}  // namespace gwfano
