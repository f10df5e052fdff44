#include "gwfano/qseries.hpp"

#include <algorithm>
#include <string>

#include "gwfano/errors.hpp"

namespace gwfano {

namespace {
const Rat kZero = 0;
}

QSeries::QSeries(int order) : c_(static_cast<std::size_t>(std::max(order + 1, 0))) {}

QSeries::QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

QSeries QSeries::constant(const Rat& c, int order) {
  QSeries s(order);
  if (order >= 0) s.c_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rat& c, int k, int order) {
  QSeries s(order);
  if (k >= 0 && k <= order) s.c_[static_cast<std::size_t>(k)] = c;
  return s;
}

const Rat& QSeries::operator[](int k) const {
  if (k < 0) return kZero;
  if (k > order()) {
    throw WindowUnderflow("q^" + std::to_string(k) + " beyond truncation order " +
                          std::to_string(order()));
  }
  return c_[static_cast<std::size_t>(k)];
}

void QSeries::set(int k, Rat v) {
  if (k < 0 || k > order()) throw OutOfRange("QSeries::set index out of range");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw WindowUnderflow("cannot extend a truncated series");
  return QSeries(std::vector<Rat>(c_.begin(), c_.begin() + (order + 1)));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
QSeries operator-(QSeries a) { return a *= Rat(-1); }
QSeries operator*(QSeries a, const Rat& s) { return a *= s; }
QSeries operator*(const Rat& s, QSeries a) { return a *= s; }
QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (int i = 0; i <= n; ++i) {
    if (ac[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += ac[i] * bc[j];
  }
  return QSeries(std::move(r));
}

QSeries qs_inv(const QSeries& a) {
  if (a.order() < 0) return QSeries(-1);
  const auto& ac = a.coeffs();
  if (ac[0] == 0) throw ZeroConstantTerm("qs_inv: constant term is zero");
  const int n = a.order();
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  const Rat inv0 = 1 / ac[0];
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int j = 1; j <= k; ++j) s += ac[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return QSeries(std::move(r));
}

QSeries qs_log(const QSeries& a) {
  if (a.order() < 0 || a.coeffs()[0] != 1) {
    throw BadConstantTerm("qs_log: constant term must be 1");
  }
  // (log a)' = a'/a, integrated term by term.
  const int n = a.order();
  QSeries ratio = qs_mul(qs_deriv(a), qs_inv(a.truncated(n - 1 >= 0 ? n - 1 : 0)));
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) r[k] = ratio[k - 1] / k;
  return QSeries(std::move(r));
}

QSeries qs_exp(const QSeries& a) {
  if (a.order() < 0 || a.coeffs()[0] != 0) {
    throw BadConstantTerm("qs_exp: constant term must be 0");
  }
  // e' = a' e, solved order by order.
  const int n = a.order();
  const auto& ac = a.coeffs();
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  r[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int j = 1; j <= k; ++j) s += j * ac[j] * r[k - j];
    r[k] = s / k;
  }
  return QSeries(std::move(r));
}

QSeries qs_pow_int(const QSeries& a, long e) {
  if (e < 0) return qs_pow_int(qs_inv(a), -e);
  QSeries result = QSeries::constant(1, a.order());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = qs_mul(result, base);
    e >>= 1;
    if (e > 0) base = qs_mul(base, base);
  }
  return result;
}

QSeries qs_pow(const QSeries& a, const Rat& alpha) {
  if (alpha.get_den() == 1 && alpha.get_num().fits_slong_p()) {
    return qs_pow_int(a, alpha.get_num().get_si());
  }
  if (a.order() < 0 || a.coeffs()[0] != 1) {
    throw BadConstantTerm("qs_pow: fractional power needs constant term 1");
  }
  return qs_exp(qs_log(a) * alpha);
}

QSeries qs_deriv(const QSeries& a) {
  const int n = a.order();
  std::vector<Rat> r(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 1; k <= n; ++k) r[k - 1] = k * a.coeffs()[k];
  return QSeries(std::move(r));
}

QSeries qs_theta(const QSeries& a) {
  std::vector<Rat> r = a.coeffs();
  for (std::size_t k = 0; k < r.size(); ++k) r[k] *= static_cast<long>(k);
  return QSeries(std::move(r));
}

QSeries qs_shift(const QSeries& a, int k) {
  const int n = a.order();
  std::vector<Rat> r(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const int src = i - k;
    if (src >= 0 && src <= n) r[i] = a.coeffs()[src];
  }
  return QSeries(std::move(r));
}

}  // namespace gwfano
