#include "vclass/rational.hpp"

#include <charconv>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

long long parse_int(std::string_view s, const std::string& whole) {
  long long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw SchemaError("bad rational '" + whole + "'");
  return v;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s, s));
  long long n = parse_int(std::string_view(s).substr(0, slash), s);
  long long d = parse_int(std::string_view(s).substr(slash + 1), s);
  if (d == 0) throw SchemaError("zero denominator in '" + s + "'");
  return Rat(n, d);
}

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace vclass
