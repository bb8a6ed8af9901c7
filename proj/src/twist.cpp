#include "screwinv/twist.hpp"

#include <sstream>
#include <stdexcept>

namespace screwinv {

namespace {

void check_index(std::size_t screw, std::size_t component) {
  if (screw < 1 || screw > 9 || component < 1 || component > 3)
    throw std::out_of_range("screw coordinate index out of range");
}

}  // namespace

std::string omega_name(std::size_t screw, std::size_t component) {
  check_index(screw, component);
  return "w" + std::to_string(screw) + std::to_string(component);
}

std::string vee_name(std::size_t screw, std::size_t component) {
  check_index(screw, component);
  return "v" + std::to_string(screw) + std::to_string(component);
}

std::vector<std::string> screw_coordinate_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t n = 1; n <= 3; ++n) names.push_back(omega_name(i, n));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t n = 1; n <= 3; ++n) names.push_back(vee_name(i, n));
  return names;
}

std::vector<Rational> screw_point(const MultiScrew& s) {
  std::vector<Rational> point;
  point.reserve(6 * s.size());
  for (const auto& t : s.twists())
    for (int n = 0; n < 3; ++n) point.push_back(t.omega(n));
  for (const auto& t : s.twists())
    for (int n = 0; n < 3; ++n) point.push_back(t.vee(n));
  return point;
}

std::string format_twist(const Twist& t) {
  std::string out;
  for (int n = 0; n < 6; ++n) {
    if (n > 0) out += ' ';
    out += to_string(n < 3 ? t.omega(n) : t.vee(n - 3));
  }
  return out;
}

Twist parse_twist(const std::string& line) {
  std::istringstream in(line);
  std::vector<Rational> values;
  std::string tok;
  while (in >> tok) values.push_back(parse_rational(tok));
  if (values.size() != 6)
    throw std::invalid_argument("a twist needs six rationals, got " +
                                std::to_string(values.size()));
  Twist t;
  t.omega << values[0], values[1], values[2];
  t.vee << values[3], values[4], values[5];
  return t;
}

MultiScrew parse_multiscrew(const std::string& text) {
  std::istringstream in(text);
  std::vector<Twist> twists;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      twists.push_back(parse_twist(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (twists.empty()) throw std::invalid_argument("multi-screw file has no twists");
  return MultiScrew(std::move(twists));
}

std::string format_multiscrew(const MultiScrew& s) {
  std::string out;
  for (const auto& t : s.twists()) out += format_twist(t) + "\n";
  return out;
}

}  // namespace screwinv
