#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trilin/jet.hpp"

namespace trilin {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column), msg_(msg) {}
  std::size_t column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  std::size_t column_;
  std::string msg_;
};

// Grammar: sums of products of integer or a/b literals, declared variables,
// '^' with a positive integer exponent, parentheses, and an optional
// trailing "@deg D". Columns in errors are 1-based.
Jet<Rational> parse_jet(std::string_view text, const std::vector<std::string>& vars);
// as parse_jet, and additionally accepts the imaginary unit `i`
Jet<Complex> parse_complex_jet(std::string_view text, const std::vector<std::string>& vars);

std::vector<std::string> default_var_names(std::size_t n);

}  // namespace trilin
