#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyqw {

using Rational = mpq_class;
using Integer = mpz_class;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q"; result is canonical.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace cyqw
