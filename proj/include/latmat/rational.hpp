#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "latmat/error.hpp"

namespace latmat {

/// Exact rational scalar used for every function value and verdict.
using rat = boost::rational<long long>;

inline std::string to_string(const rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q".
inline rat parse_rat(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw error(errc::parse_error, "zero denominator in \"" + s + "\"");
    return rat(num, den);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    throw error(errc::parse_error, "bad rational \"" + s + "\"");
  }
}

}  // namespace latmat
