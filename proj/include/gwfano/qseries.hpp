#pragma once

#include <vector>

#include "gwfano/rational.hpp"

namespace gwfano {

// Power series in q known exactly through q^order. order == -1 means
// nothing is known (e.g. the derivative of an order-0 series).
class QSeries {
 public:
  explicit QSeries(int order = 0);
  explicit QSeries(std::vector<Rat> coeffs);

  static QSeries constant(const Rat& c, int order);
  static QSeries monomial(const Rat& c, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  // Exponent < 0 gives 0; exponent > order throws WindowUnderflow.
  const Rat& operator[](int k) const;
  void set(int k, Rat v);
  const std::vector<Rat>& coeffs() const { return c_; }

  QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rat& s);

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rat> c_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(QSeries a);
QSeries operator*(QSeries a, const Rat& s);
QSeries operator*(const Rat& s, QSeries a);
QSeries operator*(const QSeries& a, const QSeries& b);

QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_inv(const QSeries& a);
QSeries qs_log(const QSeries& a);
QSeries qs_exp(const QSeries& a);
QSeries qs_pow(const QSeries& a, const Rat& alpha);
QSeries qs_pow_int(const QSeries& a, long e);
QSeries qs_deriv(const QSeries& a);
// q d/dq; keeps the truncation order.
QSeries qs_theta(const QSeries& a);
// a * q^k, truncated back to a's order.
QSeries qs_shift(const QSeries& a, int k);

}  // namespace gwfano
