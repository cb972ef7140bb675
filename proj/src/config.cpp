#include "chermnykh/config.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "chermnykh/errors.hpp"

namespace chermnykh {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double to_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ModelError("parameter '" + key + "': '" + value + "' is not a number");
}

}  // namespace

PiMode parse_pi_mode(const std::string& text) {
  if (text == "exact" || text == "Exact") return PiMode::Exact;
  if (text == "paper" || text == "Paper314" || text == "3.14") return PiMode::Paper314;
  throw ModelError("pi mode must be 'exact' or 'paper', got '" + text + "'");
}

PotentialForm parse_potential(const std::string& text) {
  if (text == "consistent") return PotentialForm::ForceConsistent;
  if (text == "printed") return PotentialForm::Printed;
  throw ModelError("potential must be 'consistent' or 'printed', got '" + text + "'");
}

SystemParams parse_params(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ModelError("line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (!kv.emplace(key, value).second) {
      throw ModelError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  static const char* known[] = {"mu",     "q1",     "a2",      "disk.a",  "disk.b",   "disk.h",
                                "disk.c", "disk.mb", "r_ref",  "pi_mode", "potential"};
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ModelError("unknown parameter '" + key + "'");
  }

  auto number = [&](const char* key) -> std::optional<double> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return to_number(key, it->second);
  };

  SystemParams p;
  const auto mu = number("mu");
  if (!mu) throw ModelError("parameter file is missing 'mu'");
  p.mu = *mu;
  p.q1 = number("q1").value_or(p.q1);
  p.a2 = number("a2").value_or(p.a2);
  p.r_ref = number("r_ref").value_or(p.r_ref);
  if (kv.count("pi_mode")) p.pi_mode = parse_pi_mode(kv.at("pi_mode"));
  if (kv.count("potential")) p.potential = parse_potential(kv.at("potential"));

  const double a = number("disk.a").value_or(1.0);
  const double b = number("disk.b").value_or(a);
  const double h = number("disk.h").value_or(1e-4);
  const auto c = number("disk.c");
  const auto mb = number("disk.mb");
  if (c && mb) throw ModelError("give only one of disk.c and disk.mb");
  if (b != a && !c && !mb) throw ModelError("disk with b != a needs disk.c or disk.mb");
  if (mb) {
    p.disk = DiskProfile::from_mass(a, b, h, *mb, p.pi_mode);
  } else {
    p.disk = DiskProfile{a, b, h, c.value_or(0.0)};
  }
  p.validate();
  return p;
}

SystemParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read parameter file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_params(buf.str());
}

}  // namespace chermnykh
