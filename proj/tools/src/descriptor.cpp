#include "meropencil_cli/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mero::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void check(const Descriptor& d) {
  if (d.affine && (d.P || d.Q)) throw InputError("descriptor: give either P and Q or affine, not both");
  if (!d.affine && (!d.P || !d.Q)) throw InputError("descriptor: P and Q are both required");
}

Descriptor from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("descriptor: expected a JSON object");
  Descriptor d;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw InputError("descriptor: field '" + k + "' must be a string");
    std::string s = v.get<std::string>();
    if (k == "P")
      d.P = s;
    else if (k == "Q")
      d.Q = s;
    else if (k == "V")
      d.V = parse_vchoice(s);
    else if (k == "affine")
      d.affine = s;
    else
      throw InputError("descriptor: unknown field '" + k + "'");
  }
  check(d);
  return d;
}

}  // namespace

Descriptor parse_descriptor(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("descriptor: ") + e.what());
    }
    return from_json(j);
  }
  nlohmann::json j = nlohmann::json::object();
  std::istringstream in(t);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t pos = line.find_first_of(":=");
    if (pos == std::string::npos) throw InputError("descriptor: cannot read line '" + line + "'");
    j[trim(line.substr(0, pos))] = trim(line.substr(pos + 1));
  }
  return from_json(j);
}

Descriptor read_descriptor_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_descriptor(ss.str());
}

Descriptor descriptor_from_pair(const std::string& pq, VChoice V) {
  size_t pos = pq.find(';');
  if (pos == std::string::npos) throw InputError("--pencil expects \"P;Q\"");
  Descriptor d;
  d.P = trim(pq.substr(0, pos));
  d.Q = trim(pq.substr(pos + 1));
  d.V = V;
  return d;
}

Pencil to_pencil(const Descriptor& d) {
  if (d.affine) return from_affine(*d.affine);
  return make_pencil(*d.P, *d.Q, d.V);
}

ValueClass parse_value(const std::string& text) {
  std::string t = trim(text);
  if (t == "inf" || t == "infinity" || t == "oo") return ValueClass::infinity();
  try {
    return ValueClass::rational_value(Rational::parse(t));
  } catch (const std::invalid_argument&) {
    throw InputError("cannot read value '" + text + "'");
  }
}

std::array<Rational, 3> parse_point(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') t = t.substr(1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  std::array<Rational, 3> p;
  std::istringstream in(t);
  std::string part;
  size_t k = 0;
  while (std::getline(in, part, ':')) {
    if (k == 3) throw InputError("a point has three coordinates");
    try {
      p[k++] = Rational::parse(trim(part));
    } catch (const std::invalid_argument&) {
      throw InputError("cannot read coordinate '" + part + "'");
    }
  }
  if (k != 3) throw InputError("a point has three coordinates");
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) throw InputError("[0:0:0] is not a point");
  return p;
}

}  // namespace mero::cli
