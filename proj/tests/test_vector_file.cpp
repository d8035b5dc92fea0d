#include "doctest.h"

#include <sstream>

#include "polylat/vector_file.hpp"

using namespace polylat;

namespace {

GeneratingVector gv(unsigned b, int m, const std::vector<std::uint64_t>& idx) {
  std::vector<Poly> comps;
  for (auto i : idx) comps.push_back(poly_from_index(i, b));
  return GeneratingVector(b, m, comps);
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_vector_file(in);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("write format") {
  std::ostringstream out;
  write_vector_file(out, gv(2, 4, {1, 11, 7}), {"weights=poly:2"});
  CHECK(out.str() == "2 4 3\n1\n11\n7\n# weights=poly:2\n");
  std::ostringstream prim;
  write_vector_file(prim, GeneratingVector(2, 4, {Poly::from_bits(1)}, primitive_poly_f2(4)));
  CHECK(prim.str() == "2 4 1\n1\n# modulus=19\n");
}

TEST_CASE("round trip") {
  for (const auto& g : {gv(2, 4, {1, 11, 7}), gv(3, 3, {1, 22, 4}), gv(2, 20, {1, 1048575, 12345})}) {
    std::stringstream io;
    write_vector_file(io, g, {"a", "b c"});
    const auto back = read_vector_file(io);
    CHECK(back.vector == g);
    CHECK(back.comments == std::vector<std::string>{"a", "b c"});
  }
  std::stringstream io;
  const GeneratingVector prim(2, 5, {Poly::from_bits(1), Poly::from_bits(9)}, primitive_poly_f2(5));
  write_vector_file(io, prim);
  CHECK(read_vector_file(io).vector == prim);
}

TEST_CASE("malformed files report the line") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("2 4\n1\n") == 1);
  CHECK(parse_error_line("4 4 1\n1\n") == 1);
  CHECK(parse_error_line("2 4 2\n1\n") == 3);
  CHECK(parse_error_line("2 4 2\n1\nx7\n") == 3);
  CHECK(parse_error_line("2 4 2\n1\n16\n") == 3);
  CHECK(parse_error_line("2 4 1\n1\n5\n") == 3);
  CHECK(parse_error_line("2 4 1\n1\n# modulus=7\n") == 3);
  CHECK(parse_error_line("2 4 1\n1 2\n") == 2);
  CHECK(parse_error_line("2 4 1\n-1\n") == 2);
}
