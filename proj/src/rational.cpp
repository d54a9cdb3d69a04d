#include "netident/rational.hpp"

#include <cctype>
#include <sstream>

#include "netident/errors.hpp"

namespace netident {

std::string rat_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational rat_parse(const std::string& s) {
  if (s.empty()) fail("SchemaError", "empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      fail("SchemaError", "bad rational literal '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0)
    fail("SchemaError", "bad rational literal '" + s + "'");
  if (r.get_den() == 0)
    fail("SchemaError", "zero denominator in rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_vec_str(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace netident
