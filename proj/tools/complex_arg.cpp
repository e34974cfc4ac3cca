#include <cctype>
#include <stdexcept>

#include "cli.hpp"

namespace resolab::cli {

namespace {

double number(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex number '" + whole + "'");
  }
  if (used != s.size()) throw std::invalid_argument("cannot parse complex number '" + whole + "'");
  return v;
}

// coefficient of i: "", "+", "-" mean ±1
double imag_coeff(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return number(s, whole);
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty complex number");
  if (const auto comma = t.find(','); comma != std::string::npos)
    return {number(t.substr(0, comma), text), number(t.substr(comma + 1), text)};
  if (t.back() != 'i' && t.back() != 'j') return {number(t, text), 0.0};
  t.pop_back();
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, imag_coeff(t, text)};
  return {number(t.substr(0, split), text), imag_coeff(t.substr(split), text)};
}

}  // namespace resolab::cli
