#include "gwfano/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gwfano {

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binom(long n, long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(static_cast<unsigned long>(k));
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rpow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    Rat inv = 1 / base;
    return rpow(inv, -e);
  }
  Rat r(ipow(base.get_num(), static_cast<unsigned long>(e)),
        ipow(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

}  // namespace gwfano
