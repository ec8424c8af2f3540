#include "arakelov/real.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace arakelov {

Real round_to_decimals(const Real& x, int decimals) {
  if (decimals < 0) throw std::domain_error("round_to_decimals: negative decimals");
  const Real scale = boost::multiprecision::pow(Real(10), decimals);
  return boost::multiprecision::round(x * scale) / scale;
}

std::string format_decimal(const Real& x, int decimals) {
  if (decimals < 0) throw std::domain_error("format_decimal: negative decimals");
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << round_to_decimals(x, decimals);
  std::string s = os.str();
  if (!s.empty() && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
    s.erase(0, 1);
  return s;
}

}  // namespace arakelov
