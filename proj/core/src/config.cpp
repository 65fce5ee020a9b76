#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "racah/verifier.hpp"

namespace racah {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_int(const std::string& key, const std::string& v) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw std::invalid_argument("config key '" + key + "' needs an integer, got '" + v + "'");
  return out;
}

}  // namespace

std::vector<std::string> parse_suite_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item == "all") {
      auto all = all_suites();
      out.insert(out.end(), all.begin(), all.end());
    } else {
      out.push_back(item);
    }
  }
  return out;
}

ConfigFile parse_config(const std::string& text) {
  ConfigFile cfg;
  std::optional<Rational> c[4], N;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.size() == 2 && key[0] == 'c' && key[1] >= '1' && key[1] <= '4') {
      c[key[1] - '1'] = Rational::parse(value);
    } else if (key == "N") {
      N = Rational::parse(value);
    } else if (key == "window") {
      cfg.window = parse_int<int>(key, value);
    } else if (key == "rank") {
      cfg.rank = parse_int<int>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "suites") {
      cfg.suites = parse_suite_list(value);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  bool any = N.has_value();
  bool all = N.has_value();
  for (const auto& x : c) {
    any = any || x.has_value();
    all = all && x.has_value();
  }
  if (any && !all) throw std::invalid_argument("parameters need all of c1, c2, c3, c4 and N");
  if (all) cfg.params = RepParams{*c[0], *c[1], *c[2], *c[3], *N};
  return cfg;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace racah
