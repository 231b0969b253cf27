#pragma once

#include <boost/rational.hpp>
#include <string>

// Boost 1.74's mixed rational/integer == recurses forever under C++20's
// rewritten comparisons. Exact non-template overloads win over its templates.
namespace boost {

#define VCLASS_RAT_CMP(Int)                                                                           \
  inline bool operator==(const rational<long long>& a, Int b) { return a == rational<long long>(b); } \
  inline bool operator==(Int b, const rational<long long>& a) { return a == rational<long long>(b); } \
  inline bool operator!=(const rational<long long>& a, Int b) { return !(a == rational<long long>(b)); } \
  inline bool operator!=(Int b, const rational<long long>& a) { return !(a == rational<long long>(b)); } \
  inline bool operator<(const rational<long long>& a, Int b) { return a < rational<long long>(b); }   \
  inline bool operator<(Int b, const rational<long long>& a) { return rational<long long>(b) < a; }   \
  inline bool operator>(const rational<long long>& a, Int b) { return rational<long long>(b) < a; }   \
  inline bool operator>(Int b, const rational<long long>& a) { return a < rational<long long>(b); }   \
  inline bool operator<=(const rational<long long>& a, Int b) { return !(rational<long long>(b) < a); } \
  inline bool operator<=(Int b, const rational<long long>& a) { return !(a < rational<long long>(b)); } \
  inline bool operator>=(const rational<long long>& a, Int b) { return !(a < rational<long long>(b)); } \
  inline bool operator>=(Int b, const rational<long long>& a) { return !(rational<long long>(b) < a); }

VCLASS_RAT_CMP(int)
VCLASS_RAT_CMP(long long)
#undef VCLASS_RAT_CMP

}  // namespace boost

namespace vclass {

using Rat = boost::rational<long long>;

// Accepts "3", "-2", "1/2". Throws SchemaError on anything else.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace vclass
