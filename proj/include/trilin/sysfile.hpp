#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "trilin/liegeo.hpp"
#include "trilin/triform.hpp"

namespace trilin {

class FileError : public std::runtime_error {
 public:
  FileError(const std::string& msg, std::size_t line, std::size_t column = 0)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
    std::string s = "line " + std::to_string(line);
    if (column) s += ", column " + std::to_string(column);
    return s + ": " + msg;
  }
  std::size_t line_, column_;
};

// Text format:
//   vars: x1 x2 x3
//   deg: 9
//   x1' = <expr>          one line per state, any order
//   input: <expr>         g_n of a lower triangular system
//   input: <e1>; ...; <en> full input field of an affine system
//   witness:              then lines  G1 = (<e1>, ..., <en>)  (also Y.., X..)
//   map:                  then lines  y1 = <expr in vars>
//   candidate-l: (0,3) (0,0,1)
//   candidate-e: {(0,3),(1,1)} ; {(0,0,1)}
// '#' starts a comment.
struct SystemFile {
  std::vector<std::string> vars;
  std::optional<Degree> deg;
  std::vector<Jet<Rational>> f;
  std::vector<Jet<Rational>> g;  // one entry (g_n) or n entries
  std::map<std::string, VectorField> witness;
  std::vector<std::string> map_names;
  std::optional<RatMap> map;
  std::optional<std::vector<MultiIndex>> candidate_l;
  std::optional<std::vector<IndexSet>> candidate_e;

  std::size_t n() const { return vars.size(); }
  bool scalar_input() const { return g.size() == 1 && n() > 1; }
  LowerTriangularSystem triangular() const;  // throws if the input field is not (0,..,0,g_n)
  AffineSystem affine() const;
  // fields named <letter>1..<letter>n; empty if none present, throws if some are missing
  Fields family(char letter) const;
};

SystemFile parse_system_text(const std::string& text);
SystemFile parse_system_json(const nlohmann::json& j);
SystemFile load_system_file(const std::string& path);  // .json selects the JSON mirror

nlohmann::json to_json(const SystemFile& s);
std::string to_text(const SystemFile& s);

}  // namespace trilin
