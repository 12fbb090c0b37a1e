#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hg {

using Q = mpq_class;
using Z = mpz_class;

// Every failure carries a short machine-readable code next to the message.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

Q parse_rational(const std::string& s);
std::string str(const Q& q);
std::string str(const Z& z);

long to_ll(const Z& z);
Z floor_div(const Z& a, const Z& b);
Z floor_q(const Q& q);
long gcd_ll(long a, long b);

}  // namespace hg
