#include "hamgrid/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hamgrid/errors.hpp"

namespace hamgrid {

using nlohmann::json;

namespace {

void check_header(const json& j, const std::string& format) {
  if (!j.is_object() || j.value("format", "") != format) {
    throw DomainError("expected a '" + format + "' document");
  }
  if (j.value("version", 0) != kFormatVersion) {
    throw DomainError("unsupported " + format + " version");
  }
}

json coefficient_array(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

json to_json(const Rational& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("rational must be a [num, den] pair");
  Integer n(j[0].get<std::string>()), d(j[1].get<std::string>());
  if (sgn(d) == 0) throw DomainError("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

json to_json(const UniPoly& p) {
  return json{{"format", "unipoly"}, {"version", kFormatVersion}, {"coefficients", coefficient_array(p)}};
}

UniPoly unipoly_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("coefficients") : j;
  std::vector<Rational> c;
  for (const auto& x : arr) c.push_back(rational_from_json(x));
  return UniPoly(std::move(c));
}

json to_json(const RatFunc& f) {
  return json{{"format", "ratfunc"},
              {"version", kFormatVersion},
              {"numerator", coefficient_array(f.numerator())},
              {"denominator", coefficient_array(f.denominator())}};
}

RatFunc ratfunc_from_json(const json& j) {
  check_header(j, "ratfunc");
  return RatFunc(unipoly_from_json(j.at("numerator")), unipoly_from_json(j.at("denominator")));
}

json to_json(const MultiPoly& p, const std::vector<std::string>& variables) {
  json terms = json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    json exps = json::array();
    for (std::size_t i = 0; i < variables.size(); ++i) exps.push_back(e[i]);
    terms.push_back(json::array({exps, to_json(c)}));
  }
  return json{{"format", "multipoly"},
              {"version", kFormatVersion},
              {"variables", variables},
              {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
  check_header(j, "multipoly");
  const auto vars = j.at("variables").get<std::vector<std::string>>();
  MultiPoly p(vars.size());
  for (const auto& t : j.at("terms")) {
    Exponents e{};
    const auto& exps = t.at(0);
    if (exps.size() != vars.size()) throw DomainError("multipoly term arity mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i].get<std::uint16_t>();
    p.add_term(e, rational_from_json(t.at(1)));
  }
  return p;
}

json to_json(const SSAutomaton& a) {
  json states = json::array();
  for (const auto& s : a.states()) {
    states.push_back(json{{"column", s.column.to_string()}, {"partition", s.partition.blocks()}});
  }
  json succ = json::array();
  for (std::size_t v = 0; v < a.vertex_count(); ++v) succ.push_back(a.successors(v));
  return json{{"format", "ss-automaton"},
              {"version", kFormatVersion},
              {"width", a.width()},
              {"states", states},
              {"successors", succ}};
}

SSAutomaton automaton_from_json(const json& j) {
  check_header(j, "ss-automaton");
  const int width = j.at("width").get<int>();
  std::vector<SSState> states;
  for (const auto& s : j.at("states")) {
    Column c = Column::parse(s.at("column").get<std::string>());
    if (c.width() != width) throw DomainError("automaton cache: column width mismatch");
    states.push_back({c, Partition(s.at("partition").get<std::vector<std::vector<int>>>())});
  }
  auto succ = j.at("successors").get<std::vector<std::vector<std::size_t>>>();
  return SSAutomaton(width, std::move(states), std::move(succ));
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {
std::string automaton_cache_path(const std::string& dir, int width) {
  return (std::filesystem::path(dir) / ("automaton-M" + std::to_string(width) + ".json")).string();
}
}  // namespace

std::optional<SSAutomaton> load_automaton_cache(const std::string& dir, int width) {
  auto text = read_file(automaton_cache_path(dir, width));
  if (!text) return std::nullopt;
  try {
    auto a = automaton_from_json(json::parse(*text));
    if (a.width() != width) return std::nullopt;
    return a;
  } catch (const std::exception&) {
    // A stale or damaged cache entry is rebuilt.
    return std::nullopt;
  }
}

void store_automaton_cache(const std::string& dir, const SSAutomaton& a) {
  write_file_atomic(automaton_cache_path(dir, a.width()), to_json(a).dump());
}

}  // namespace hamgrid
