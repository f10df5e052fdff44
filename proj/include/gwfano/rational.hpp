#pragma once

#include <gmpxx.h>

#include <string>

namespace gwfano {

using Int = mpz_class;
using Rat = mpq_class;

// Lowest-terms "p/q" text; integers print without a denominator.
std::string to_string(const Rat& x);

// Accepts "p", "p/q", with optional sign. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// num/den in lowest terms. mpq_class's two-argument constructor does not
// canonicalize, so every fraction is built through here.
Rat frac(const Int& num, const Int& den);

Int factorial(unsigned long n);

// n(n-1)...(n-k+1)/k! for any integer n; 0 when k < 0.
Int binom(long n, long k);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, long e);

}  // namespace gwfano
