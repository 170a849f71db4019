// hamgrid: command-line front end.
//
// Exit codes: 0 success, 2 domain error, 3 resource guard, 64 usage,
// 70 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamgrid/errors.hpp"
#include "hamgrid/geometry.hpp"
#include "hamgrid/grid_count.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/sampler.hpp"
#include "hamgrid/serialize.hpp"
#include "hamgrid/statistics.hpp"

using namespace hamgrid;
using nlohmann::json;

namespace {

constexpr const char* kCacheEnv = "HAMGRID_CACHE_DIR";

struct Global {
  std::string cache_dir;
  bool json = false;
};

GridOptions grid_options(const Global& g, bool no_cache = false) {
  GridOptions o;
  o.cache_dir = g.cache_dir;
  o.no_cache = no_cache;
  return o;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "all", "none", or "rows" followed by a comma list.
WeightSpec parse_weights(const std::vector<std::string>& args, int m) {
  const int M = m - 1;
  if (args.empty() || args[0] == "all") {
    if (args.size() > 1) throw DomainError("--weights all takes no list");
    return WeightSpec::all(M);
  }
  if (args[0] == "none") return WeightSpec::none(M);
  if (args[0] == "rows") {
    if (args.size() != 2) throw DomainError("--weights rows needs a comma-separated row list");
    return WeightSpec::rows(M, parse_int_list(args[1]));
  }
  throw DomainError("--weights expects 'all' or 'rows LIST'");
}

std::vector<std::optional<unsigned>> parse_exponents(const std::string& text) {
  std::vector<std::optional<unsigned>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "*" || item == "_") {
      out.push_back(std::nullopt);
      continue;
    }
    const auto v = parse_int_list(item);
    if (v.size() != 1 || v[0] < 0) throw DomainError("bad exponent '" + item + "'");
    out.push_back(static_cast<unsigned>(v[0]));
  }
  return out;
}

json weighted_json(const WeightedGF& g) {
  const auto names = grid_variable_names(g.width);
  return {{"format", "weighted-gf"},
          {"version", kFormatVersion},
          {"numerator", to_json(to_rational(g.numerator), names)},
          {"denominator", to_json(to_rational(g.denominator), names)}};
}

json edges_json(const CycleEdges& c) {
  json edges = json::array();
  for (const auto& e : c.edges()) edges.push_back({e.a.row, e.a.col, e.b.row, e.b.col});
  return edges;
}

json matrix_json(const CellMatrix& a) {
  json rows = json::array();
  std::stringstream ss(a.to_string());
  std::string line;
  while (std::getline(ss, line)) rows.push_back(line);
  return rows;
}

void print_edges(std::ostream& os, const CycleEdges& c) {
  for (const auto& e : c.edges()) {
    os << "(" << e.a.row << "," << e.a.col << ")-(" << e.b.row << "," << e.b.col << ")\n";
  }
}

std::string svg_path_for(const std::string& file, int index, int count) {
  if (count == 1) return file;
  std::filesystem::path p(file);
  std::string stem = p.stem().string() + "-" + std::to_string(index + 1);
  return (p.parent_path() / (stem + (p.has_extension() ? p.extension().string() : ".svg"))).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles of grid graphs via the column automaton"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--cache-dir", g.cache_dir, std::string("Cache directory (default: $") + kCacheEnv + ")");
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  // Subcommands pass unknown options up, so --json may follow the subcommand.
  app.fallthrough();

  int m = 0, n = 0, width = 0, terms = 0;
  bool no_cache = false, list = false, asymptotic = false, ascii = false;
  std::vector<std::string> weights;
  std::string exps, rows, rows2, svg_file, cache_path;
  unsigned precision = 12;
  std::uint64_t seed = 0;
  int count = 1;

  auto* alphabet = app.add_subcommand("alphabet", "States, starters, enders and successors of the automaton");
  alphabet->add_option("--width", width, "Automaton width M = m - 1")->required();

  auto* count_cmd = app.add_subcommand("count", "Number of Hamiltonian cycles of P_m x P_n");
  count_cmd->add_option("-m", m, "Grid height")->required();
  count_cmd->add_option("-n", n, "Grid length")->required();

  auto* series = app.add_subcommand("series", "Counts for n = 0..K");
  series->add_option("-m", m, "Grid height")->required();
  series->add_option("--terms", terms, "Last n")->required();

  auto* gf = app.add_subcommand("gf", "Rational generating function in z (or weighted)");
  gf->add_option("-m", m, "Grid height")->required();
  gf->add_flag("--no-cache", no_cache, "Recompute instead of reading the cache");
  gf->add_option("--weights", weights, "all | rows LIST")->expected(1, 2);

  auto* enumerator = app.add_subcommand("enumerator", "Weight enumerator of P_m x P_n");
  enumerator->add_option("-m", m, "Grid height")->required();
  enumerator->add_option("-n", n, "Grid length")->required();
  enumerator->add_option("--weights", weights, "all | rows LIST")->expected(1, 2);

  auto* coeff = app.add_subcommand("coeff", "One coefficient of the weight enumerator");
  coeff->add_option("-m", m, "Grid height")->required();
  coeff->add_option("-n", n, "Grid length")->required();
  coeff->add_option("--exps", exps, "Exponents E1,...,E_{m-1}; '*' or '_' leaves a row unmarked")->required();

  auto* stats = app.add_subcommand("stats", "Moments of row statistics");
  stats->add_option("-m", m, "Grid height")->required();
  auto* stats_n = stats->add_option("-n", n, "Grid length");
  auto* stats_asym = stats->add_flag("--asymptotic", asymptotic, "n -> infinity");
  stats_n->excludes(stats_asym);
  stats->add_option("--rows", rows, "Marked rows, comma separated")->required();
  stats->add_option("--rows2", rows2, "Second row set (correlation)");
  stats->add_option("--precision", precision, "Decimal digits");

  auto* sample = app.add_subcommand("sample", "Uniformly random Hamiltonian cycles");
  sample->add_option("-m", m, "Grid height")->required();
  sample->add_option("-n", n, "Grid length")->required();
  sample->add_option("--seed", seed, "Generator seed")->required();
  sample->add_option("--count", count, "Number of samples");
  auto* sample_ascii = sample->add_flag("--ascii", ascii, "Draw each cycle");
  auto* sample_svg = sample->add_option("--svg", svg_file, "Write SVG drawing(s)");
  sample_ascii->excludes(sample_svg);

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle->add_option("-m", m, "Grid height")->required();
  oracle->add_option("-n", n, "Grid length")->required();
  oracle->add_flag("--list", list, "Print every cycle's matrix");

  auto* cache = app.add_subcommand("cache", "Show the contents of a cache directory");
  cache->add_option("--dir", cache_path, "Cache directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  if (g.cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) g.cache_dir = env;
  }

  std::ostream& out = std::cout;
  try {
    if (*alphabet) {
      if (width < 1 || width > kMaxAutomatonWidth) {
        throw DomainError("width must be in 1.." + std::to_string(kMaxAutomatonWidth));
      }
      const SSAutomaton& a = automaton_for(width, g.cache_dir);
      std::vector<std::size_t> starters, enders;
      for (std::size_t v = 1; v <= a.state_count(); ++v) {
        if (a.starter(v)) starters.push_back(v);
        if (a.ender(v)) enders.push_back(v);
      }
      if (g.json) {
        json j = to_json(a);
        j["starters"] = starters;
        j["enders"] = enders;
        out << j.dump() << "\n";
      } else {
        out << "width " << a.width() << ": " << a.state_count() << " states, " << a.edge_count()
            << " edges (vertex 0 = START, " << a.end_vertex() << " = END)\n";
        for (std::size_t v = 1; v <= a.state_count(); ++v) {
          out << v << " " << a.state(v).to_string() << (a.starter(v) ? " starter" : "")
              << (a.ender(v) ? " ender" : "") << " ->";
          for (std::size_t t : a.successors(v)) out << " " << t;
          out << "\n";
        }
      }
    } else if (*count_cmd) {
      const Integer c = count_cycles(m, n, grid_options(g));
      if (g.json) {
        out << json{{"m", m}, {"n", n}, {"count", c.get_str()}}.dump() << "\n";
      } else {
        out << c.get_str() << "\n";
      }
    } else if (*series) {
      if (terms < 0) throw DomainError("--terms must be non-negative");
      const auto s = count_series(m, static_cast<std::size_t>(terms), grid_options(g));
      if (g.json) {
        json arr = json::array();
        for (const auto& x : s) arr.push_back(x.get_str());
        out << json{{"m", m}, {"counts", arr}}.dump() << "\n";
      } else {
        for (std::size_t k = 0; k < s.size(); ++k) out << k << " " << s[k].get_str() << "\n";
      }
    } else if (*gf) {
      if (!weights.empty()) {
        const WeightedGF w = gf_weighted(m, parse_weights(weights, m));
        out << (g.json ? weighted_json(w).dump() : w.to_string()) << "\n";
      } else {
        const CountGF c = gf_count_detailed(m, grid_options(g, no_cache));
        if (g.json) {
          json j = to_json(c.gf);
          j["m"] = m;
          j["recurrence_order"] = c.recurrence.order();
          j["verified_terms"] = c.verified_terms;
          out << j.dump() << "\n";
        } else {
          out << c.gf.to_string() << "\n";
        }
      }
    } else if (*enumerator) {
      const WeightSpec spec = parse_weights(weights, m);
      const MultiPoly p = weight_enumerator(m, n, spec);
      const auto names = grid_variable_names(m - 1);
      out << (g.json ? to_json(p, names).dump() : p.to_string(names)) << "\n";
    } else if (*coeff) {
      const Integer c = monomial_coefficient(m, n, parse_exponents(exps));
      if (g.json) {
        out << json{{"m", m}, {"n", n}, {"exponents", exps}, {"coefficient", c.get_str()}}.dump() << "\n";
      } else {
        out << c.get_str() << "\n";
      }
    } else if (*stats) {
      if (!asymptotic && stats_n->count() == 0) throw DomainError("stats needs -n N or --asymptotic");
      const auto ra = parse_int_list(rows);
      const auto rb = rows2.empty() ? std::vector<int>{} : parse_int_list(rows2);
      StatReport r;
      AsymptoticOptions ao;
      ao.precision = precision;
      ao.grid = grid_options(g);
      if (asymptotic) {
        r = rb.empty() ? asymptotic_moments(m, ra, ao) : asymptotic_correlation(m, ra, rb, ao);
      } else {
        r = rb.empty() ? moments(m, n, ra) : correlation(m, n, ra, rb);
      }
      r.precision = precision;
      out << (g.json ? r.to_json().dump() + "\n" : r.to_text());
    } else if (*sample) {
      const auto samples = sample_cycles({m, n, seed, count});
      json arr = json::array();
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const CycleEdges c = matrix_to_cycle(samples[i].matrix);
        if (!svg_file.empty()) {
          write_text(svg_path_for(svg_file, static_cast<int>(i), count), render_svg(c));
        }
        if (g.json) {
          json j{{"matrix", matrix_json(samples[i].matrix)}, {"edges", edges_json(c)}};
          if (ascii) j["ascii"] = render_ascii(c);
          arr.push_back(j);
        } else {
          if (i) out << "\n";
          out << "sample " << i + 1 << "\n" << samples[i].matrix.to_string() << "\n";
          print_edges(out, c);
          if (ascii) out << render_ascii(c) << "\n";
        }
      }
      if (g.json) out << json{{"m", m}, {"n", n}, {"seed", seed}, {"samples", arr}}.dump() << "\n";
    } else if (*oracle) {
      const auto cycles = enumerate_cycles_bruteforce(m, n);
      if (g.json) {
        json j{{"m", m}, {"n", n}, {"count", cycles.size()}};
        if (list) {
          json arr = json::array();
          for (const auto& c : cycles) arr.push_back(matrix_json(cycle_to_matrix(c)));
          j["matrices"] = arr;
        }
        out << j.dump() << "\n";
      } else {
        out << cycles.size() << "\n";
        if (list) {
          for (const auto& c : cycles) out << "\n" << cycle_to_matrix(c).to_string() << "\n";
        }
      }
    } else if (*cache) {
      namespace fs = std::filesystem;
      json files = json::array();
      if (fs::is_directory(cache_path)) {
        std::vector<std::string> names;
        for (const auto& e : fs::directory_iterator(cache_path)) {
          if (e.path().extension() == ".json") names.push_back(e.path().filename().string());
        }
        std::sort(names.begin(), names.end());
        for (const auto& s : names) files.push_back(s);
      }
      if (g.json) {
        out << json{{"dir", cache_path}, {"files", files}}.dump() << "\n";
      } else {
        out << cache_path << ": " << files.size() << " cached file(s)\n";
        for (const auto& f : files) out << "  " << f.get<std::string>() << "\n";
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
