#include "trilin/sysfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "trilin/parser.hpp"

namespace trilin {

using nlohmann::json;

LowerTriangularSystem SystemFile::triangular() const {
  LowerTriangularSystem s;
  s.names = vars;
  s.f = f;
  if (g.empty()) throw std::invalid_argument("no input line");
  if (g.size() == 1 && n() > 1) {
    s.g = g[0];
  } else {
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      if (!g[i].empty()) throw std::invalid_argument("input field is not aligned with the last state");
    s.g = g.back();
  }
  return s;
}

AffineSystem SystemFile::affine() const {
  AffineSystem a;
  a.names = vars;
  a.f = VectorField(f);
  if (g.size() == n()) {
    a.g = VectorField(g);
  } else {
    a.g = VectorField::zero(n());
    if (!g.empty()) a.g.c[n() - 1] = g[0];
  }
  return a;
}

Fields SystemFile::family(char letter) const {
  Fields out;
  std::size_t found = 0;
  for (const auto& [k, v] : witness)
    if (!k.empty() && k[0] == letter) ++found;
  if (found == 0) return out;
  for (std::size_t i = 1; i <= n(); ++i) {
    auto it = witness.find(std::string(1, letter) + std::to_string(i));
    if (it == witness.end())
      throw std::invalid_argument(std::string("witness ") + letter + std::to_string(i) + " missing");
    out.push_back(it->second);
  }
  if (found != n()) throw std::invalid_argument(std::string("unexpected extra witness fields named ") + letter + "*");
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Piece {
  std::string text;
  std::size_t col;  // 1-based column of text[0] in the line
};

// leading/trailing blanks removed, column adjusted
Piece piece(const std::string& line, std::size_t from, std::size_t to) {
  std::size_t b = from;
  while (b < to && (line[b] == ' ' || line[b] == '\t')) ++b;
  std::size_t e = to;
  while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t' || line[e - 1] == '\r')) --e;
  return {line.substr(b, e - b), b + 1};
}

// split at top-level separators
std::vector<Piece> split(const std::string& line, std::size_t from, std::size_t to, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = from;
  for (std::size_t k = from; k < to; ++k) {
    char c = line[k];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(piece(line, start, k));
      start = k + 1;
    }
  }
  out.push_back(piece(line, start, to));
  return out;
}

Jet<Rational> jet_at(const Piece& p, const std::vector<std::string>& vars, std::size_t lineno) {
  if (p.text.empty()) throw FileError("empty expression", lineno, p.col);
  try {
    return parse_jet(p.text, vars);
  } catch (const ParseError& e) {
    throw FileError(e.message(), lineno, p.col + e.column() - 1);
  }
}

VectorField field_at(const std::string& line, std::size_t from, std::size_t to, const std::vector<std::string>& vars,
                     std::size_t lineno) {
  Piece whole = piece(line, from, to);
  if (whole.text.size() < 2 || whole.text.front() != '(' || whole.text.back() != ')')
    throw FileError("vector field must be written (c1, ..., cn)", lineno, whole.col);
  std::size_t open = whole.col - 1;
  auto parts = split(line, open + 1, open + whole.text.size() - 1, ',');
  if (parts.size() != vars.size())
    throw FileError("vector field has " + std::to_string(parts.size()) + " components, expected " +
                        std::to_string(vars.size()),
                    lineno, whole.col);
  std::vector<Jet<Rational>> c;
  for (const auto& p : parts) c.push_back(jet_at(p, vars, lineno));
  return VectorField(c);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return s != "i";
}

void finish(SystemFile& s, const std::vector<bool>& seen, std::size_t last_line) {
  for (std::size_t i = 0; i < s.n(); ++i)
    if (!seen[i]) throw FileError("no equation for " + s.vars[i] + "'", last_line);
  if (s.g.empty()) throw FileError("missing input line", last_line);
  if (s.map && s.map->size() != s.n()) throw FileError("map must have one line per state", last_line);
}

}  // namespace

SystemFile parse_system_text(const std::string& text) {
  SystemFile s;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<bool> seen;
  enum class Section { main, witness, map } section = Section::main;

  auto need_vars = [&](std::size_t col) {
    if (s.vars.empty()) throw FileError("'vars:' must come first", lineno, col);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    Piece whole = piece(line, 0, line.size());
    const std::string& t = whole.text;
    std::size_t off = whole.col - 1;
    auto colon = t.find(':');
    std::string key = colon == std::string::npos ? "" : trim(t.substr(0, colon));
    std::size_t rest = off + colon + 1;

    if (key == "vars") {
      if (!s.vars.empty()) throw FileError("duplicate 'vars:'", lineno, whole.col);
      std::istringstream vs(t.substr(colon + 1));
      std::string v;
      std::set<std::string> uniq;
      while (vs >> v) {
        if (!valid_name(v)) throw FileError("bad variable name '" + v + "'", lineno, whole.col);
        if (!uniq.insert(v).second) throw FileError("duplicate variable '" + v + "'", lineno, whole.col);
        s.vars.push_back(v);
      }
      if (s.vars.empty()) throw FileError("no variables declared", lineno, whole.col);
      s.f.assign(s.n(), Jet<Rational>(s.n()));
      seen.assign(s.n(), false);
      section = Section::main;
    } else if (key == "deg") {
      Piece p = piece(line, rest, line.size());
      try {
        std::size_t used = 0;
        long d = std::stol(p.text, &used);
        if (used != p.text.size() || d < 1) throw std::invalid_argument("");
        s.deg = d;
      } catch (const std::exception&) {
        throw FileError("deg must be a positive integer", lineno, p.col);
      }
      section = Section::main;
    } else if (key == "input") {
      need_vars(whole.col);
      if (!s.g.empty()) throw FileError("duplicate 'input:'", lineno, whole.col);
      auto parts = split(line, rest, line.size(), ';');
      if (parts.size() != 1 && parts.size() != s.n())
        throw FileError("input needs 1 or " + std::to_string(s.n()) + " expressions", lineno, whole.col);
      for (const auto& p : parts) s.g.push_back(jet_at(p, s.vars, lineno));
      section = Section::main;
    } else if (key == "witness" || key == "map") {
      need_vars(whole.col);
      if (!trim(t.substr(colon + 1)).empty()) throw FileError("section header takes no value", lineno, whole.col);
      section = key == "map" ? Section::map : Section::witness;
      if (section == Section::map) {
        if (s.map) throw FileError("duplicate 'map:'", lineno, whole.col);
        s.map = RatMap{};
      }
    } else if (key == "candidate-l") {
      need_vars(whole.col);
      std::vector<MultiIndex> l;
      std::size_t k = rest;
      while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
        if (k >= line.size()) break;
        std::size_t close = line.find(')', k);
        if (line[k] != '(' || close == std::string::npos) throw FileError("expected a multi-index", lineno, k + 1);
        try {
          l.push_back(parse_multiindex(line.substr(k, close - k + 1)));
        } catch (const std::exception& e) {
          throw FileError(e.what(), lineno, k + 1);
        }
        k = close + 1;
      }
      s.candidate_l = l;
      section = Section::main;
    } else if (key == "candidate-e") {
      need_vars(whole.col);
      std::vector<IndexSet> e;
      for (const auto& p : split(line, rest, line.size(), ';')) {
        try {
          e.push_back(parse_index_set(p.text));
        } catch (const std::exception& ex) {
          throw FileError(ex.what(), lineno, p.col);
        }
      }
      s.candidate_e = e;
      section = Section::main;
    } else {
      // assignment line
      need_vars(whole.col);
      auto eq = line.find('=');
      if (eq == std::string::npos) throw FileError("expected 'name = expression' or 'key: value'", lineno, whole.col);
      Piece lhs = piece(line, 0, eq);
      if (section == Section::witness) {
        if (!valid_name(lhs.text)) throw FileError("bad field name", lineno, lhs.col);
        if (s.witness.count(lhs.text)) throw FileError("duplicate field " + lhs.text, lineno, lhs.col);
        s.witness[lhs.text] = field_at(line, eq + 1, line.size(), s.vars, lineno);
      } else if (section == Section::map) {
        if (!valid_name(lhs.text)) throw FileError("bad coordinate name", lineno, lhs.col);
        s.map_names.push_back(lhs.text);
        s.map->comps.push_back(jet_at(piece(line, eq + 1, line.size()), s.vars, lineno));
      } else {
        if (lhs.text.size() < 2 || lhs.text.back() != '\'')
          throw FileError("equation must start with name'", lineno, lhs.col);
        std::string name = trim(lhs.text.substr(0, lhs.text.size() - 1));
        auto it = std::find(s.vars.begin(), s.vars.end(), name);
        if (it == s.vars.end()) throw FileError("unknown state " + name, lineno, lhs.col);
        std::size_t i = static_cast<std::size_t>(it - s.vars.begin());
        if (seen[i]) throw FileError("duplicate equation for " + name, lineno, lhs.col);
        seen[i] = true;
        s.f[i] = jet_at(piece(line, eq + 1, line.size()), s.vars, lineno);
      }
    }
  }
  if (s.vars.empty()) throw FileError("no 'vars:' line", lineno ? lineno : 1);
  finish(s, seen, lineno);
  return s;
}

namespace {

Jet<Rational> json_jet(const json& j, const std::vector<std::string>& vars, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + ": expected an expression string");
  try {
    return parse_jet(j.get<std::string>(), vars);
  } catch (const ParseError& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

}  // namespace

SystemFile parse_system_json(const json& j) {
  SystemFile s;
  if (!j.is_object()) throw std::invalid_argument("system JSON must be an object");
  if (j.contains("vars")) {
    s.vars = j.at("vars").get<std::vector<std::string>>();
  } else {
    s.vars = default_var_names(j.at("n").get<std::size_t>());
  }
  if (j.contains("n") && j.at("n").get<std::size_t>() != s.n()) throw std::invalid_argument("n does not match vars");
  const auto& f = j.at("f");
  if (!f.is_array() || f.size() != s.n()) throw std::invalid_argument("f must list one expression per state");
  for (std::size_t i = 0; i < s.n(); ++i) s.f.push_back(json_jet(f[i], s.vars, "f[" + std::to_string(i) + "]"));
  if (j.contains("g")) {
    s.g.push_back(json_jet(j.at("g"), s.vars, "g"));
  } else if (j.contains("G")) {
    const auto& g = j.at("G");
    if (!g.is_array() || g.size() != s.n()) throw std::invalid_argument("G must list one expression per state");
    for (std::size_t i = 0; i < s.n(); ++i) s.g.push_back(json_jet(g[i], s.vars, "G[" + std::to_string(i) + "]"));
  } else {
    throw std::invalid_argument("missing g");
  }
  if (j.contains("deg") && !j.at("deg").is_null()) s.deg = j.at("deg").get<long>();
  if (j.contains("witness"))
    for (const auto& [name, comps] : j.at("witness").items()) {
      if (!comps.is_array() || comps.size() != s.n()) throw std::invalid_argument("witness " + name + ": wrong size");
      std::vector<Jet<Rational>> c;
      for (const auto& e : comps) c.push_back(json_jet(e, s.vars, "witness " + name));
      s.witness[name] = VectorField(c);
    }
  if (j.contains("map")) {
    const auto& m = j.at("map");
    RatMap r;
    if (!m.is_array()) throw std::invalid_argument("map must be a list of {name, expr} pairs");
    for (const auto& e : m) {
      s.map_names.push_back(e.at("name").get<std::string>());
      r.comps.push_back(json_jet(e.at("expr"), s.vars, "map " + s.map_names.back()));
    }
    if (r.size() != s.n()) throw std::invalid_argument("map must have one component per state");
    s.map = r;
  }
  if (j.contains("candidate_l")) {
    std::vector<MultiIndex> l;
    for (const auto& e : j.at("candidate_l")) l.push_back(parse_multiindex(e.get<std::string>()));
    s.candidate_l = l;
  }
  if (j.contains("candidate_e")) {
    std::vector<IndexSet> e;
    for (const auto& set : j.at("candidate_e")) {
      IndexSet x;
      for (const auto& a : set) x.insert(parse_multiindex(a.get<std::string>()));
      e.push_back(x);
    }
    s.candidate_e = e;
  }
  return s;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    json j;
    try {
      j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
    return parse_system_json(j);
  }
  return parse_system_text(buf.str());
}

json to_json(const SystemFile& s) {
  json j;
  j["n"] = s.n();
  j["vars"] = s.vars;
  json f = json::array();
  for (const auto& fi : s.f) f.push_back(fi.str(s.vars));
  j["f"] = f;
  if (s.g.size() == 1 && s.n() > 1) {
    j["g"] = s.g[0].str(s.vars);
  } else {
    json g = json::array();
    for (const auto& gi : s.g) g.push_back(gi.str(s.vars));
    j["G"] = g;
  }
  j["deg"] = s.deg ? json(*s.deg) : json(nullptr);
  if (!s.witness.empty()) {
    json w = json::object();
    for (const auto& [name, v] : s.witness) {
      json c = json::array();
      for (const auto& e : v.c) c.push_back(e.str(s.vars));
      w[name] = c;
    }
    j["witness"] = w;
  }
  if (s.map) {
    json m = json::array();
    for (std::size_t i = 0; i < s.map->size(); ++i)
      m.push_back({{"name", s.map_names[i]}, {"expr", s.map->comps[i].str(s.vars)}});
    j["map"] = m;
  }
  if (s.candidate_l) {
    json l = json::array();
    for (const auto& a : *s.candidate_l) l.push_back(a.str());
    j["candidate_l"] = l;
  }
  if (s.candidate_e) {
    json e = json::array();
    for (const auto& set : *s.candidate_e) {
      json x = json::array();
      for (const auto& a : set) x.push_back(a.str());
      e.push_back(x);
    }
    j["candidate_e"] = e;
  }
  return j;
}

std::string to_text(const SystemFile& s) {
  std::ostringstream o;
  o << "vars:";
  for (const auto& v : s.vars) o << ' ' << v;
  o << '\n';
  if (s.deg) o << "deg: " << *s.deg << '\n';
  for (std::size_t i = 0; i < s.n(); ++i) o << s.vars[i] << "' = " << s.f[i].str(s.vars) << '\n';
  o << "input: ";
  for (std::size_t i = 0; i < s.g.size(); ++i) o << (i ? "; " : "") << s.g[i].str(s.vars);
  o << '\n';
  if (!s.witness.empty()) {
    o << "witness:\n";
    for (const auto& [name, v] : s.witness) {
      o << "  " << name << " = (";
      for (std::size_t k = 0; k < v.n(); ++k) o << (k ? ", " : "") << v.c[k].str(s.vars);
      o << ")\n";
    }
  }
  if (s.map) {
    o << "map:\n";
    for (std::size_t i = 0; i < s.map->size(); ++i)
      o << "  " << s.map_names[i] << " = " << s.map->comps[i].str(s.vars) << '\n';
  }
  if (s.candidate_l) {
    o << "candidate-l:";
    for (const auto& a : *s.candidate_l) o << ' ' << a.str();
    o << '\n';
  }
  if (s.candidate_e) {
    o << "candidate-e: ";
    for (std::size_t k = 0; k < s.candidate_e->size(); ++k) o << (k ? " ; " : "") << to_string((*s.candidate_e)[k]);
    o << '\n';
  }
  return o.str();
}

}  // namespace trilin
