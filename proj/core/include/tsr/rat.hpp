#ifndef TSR_RAT_HPP
#define TSR_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tsr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& r) { return r.str(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace tsr

#endif
