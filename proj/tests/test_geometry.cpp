#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "hamgrid/errors.hpp"
#include "hamgrid/geometry.hpp"
#include "hamgrid/oracle.hpp"

using namespace hamgrid;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HAMGRID_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_svg_parses(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  CHECK_NOTHROW(boost::property_tree::read_xml(in, tree));
  CHECK(tree.get_child("svg").count("path") == 1);
  auto d = tree.get<std::string>("svg.path.<xmlattr>.d");
  CHECK(d.front() == 'M');
  CHECK(d.back() == 'Z');
}

}  // namespace

TEST_CASE("boundary cycle of P_2 x P_3") {
  CycleEdges c = matrix_to_cycle(CellMatrix::parse_rows({"11"}));
  CHECK(c.edges().size() == 6);
  CHECK(c.is_hamiltonian_cycle());
  CHECK(c.top_edges() == 2);
  CHECK(c.bottom_edges() == 2);
  CHECK(cycle_to_matrix(c) == CellMatrix::parse_rows({"11"}));
}

TEST_CASE("P_4 x P_3 with columns 111, 101") {
  CellMatrix a = CellMatrix::from_columns({Column::parse("111"), Column::parse("101")});
  CHECK(a.to_string() == "11\n10\n11");
  CycleEdges c = matrix_to_cycle(a);
  CHECK(c.edges().size() == 12);
  CHECK(c.contains(make_edge({1, 1}, {2, 1})));
  CHECK_FALSE(c.contains(make_edge({1, 2}, {2, 2})));
  CHECK(cycle_to_matrix(c) == a);
  auto all = enumerate_cycles_bruteforce(4, 3);
  CHECK(std::find(all.begin(), all.end(), c) != all.end());
}

TEST_CASE("invalid matrices and edge sets are reported") {
  // Ring with a hole: the inner boundary is a second cycle.
  CellMatrix ring = CellMatrix::from_columns({Column::parse("111"), Column::parse("101"), Column::parse("111")});
  CHECK_THROWS_AS(matrix_to_cycle(ring), DomainError);
  // Diagonal pattern: degree 4 at the shared corner.
  try {
    matrix_to_cycle(CellMatrix::parse_rows({"10", "01"}));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
  }
  CycleEdges open(2, 2, {make_edge({0, 0}, {0, 1}), make_edge({0, 1}, {1, 1})});
  CHECK_FALSE(open.is_hamiltonian_cycle());
  CHECK_THROWS_AS(cycle_to_matrix(open), DomainError);
  CHECK_THROWS_AS(make_edge({0, 0}, {1, 1}), DomainError);
}

TEST_CASE("bijection on every oracle cycle up to 6 x 6") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& c : enumerate_cycles_bruteforce(m, n)) {
        CellMatrix a = cycle_to_matrix(c);
        CHECK(matrix_to_cycle(a) == c);
        CHECK(validate_matrix_global(a));
        CHECK(a.row_ones(0) == c.top_edges());
        CHECK(a.row_ones(a.rows() - 1) == c.bottom_edges());
        CHECK(c.traversal().size() == static_cast<std::size_t>(m * n));
      }
    }
  }
}

TEST_CASE("ascii drawing") {
  CycleEdges unit = matrix_to_cycle(CellMatrix::parse_rows({"1"}));
  CHECK(render_ascii(unit) == "+-+\n| |\n+-+");
  auto c44 = enumerate_cycles_bruteforce(4, 4).front();
  auto c34 = enumerate_cycles_bruteforce(3, 4).front();
  CHECK(render_ascii(c44) == slurp("cycle_4x4.txt"));
  CHECK(render_ascii(c34) == slurp("cycle_3x4.txt"));
}

TEST_CASE("svg drawing") {
  CycleEdges unit = matrix_to_cycle(CellMatrix::parse_rows({"1"}));
  const std::string svg = render_svg(unit);
  CHECK(svg.find("d=\"M10 10 L30 10 L30 30 L10 30 Z\"") != std::string::npos);
  check_svg_parses(svg);
  auto c44 = enumerate_cycles_bruteforce(4, 4).front();
  auto c34 = enumerate_cycles_bruteforce(3, 4).front();
  CHECK(render_svg(c44) == slurp("cycle_4x4.svg"));
  CHECK(render_svg(c34) == slurp("cycle_3x4.svg"));
  check_svg_parses(render_svg(c44));
  check_svg_parses(render_svg(c34, {RenderOptions::Format::Svg, 7, 3, 1}));
  CHECK_THROWS_AS(render_svg(unit, {RenderOptions::Format::Svg, 0, 3, 1}), DomainError);
}
