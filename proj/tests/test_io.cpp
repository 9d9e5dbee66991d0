#include <doctest.h>

#include "rp2/diagram_io.hpp"
#include "rp2/normal_form.hpp"
#include "rp2/random_diagram.hpp"
#include "support.hpp"

using namespace rp2;
using fixtures::pt;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    diagram_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("JSON layout of a small diagram") {
  const std::string expected =
      "{\n"
      "  \"n\": 1,\n"
      "  \"vertex\": [0,1,0,1],\n"
      "  \"loops\": [\n"
      "    {\"legs\": [\n"
      "      [[0,1,0,1], [1,2,0,1], [1,2,1,2], [0,1,1,2], [0,1,0,1]]\n"
      "    ]}\n"
      "  ]\n"
      "}\n";
  CHECK(to_json(fixtures::circle()) == expected);
  CHECK(diagram_from_json(expected) == fixtures::circle());
}

TEST_CASE("JSON round trip is exact and byte-stable") {
  for (const BouquetDiagram& d : {fixtures::seam_chord(), fixtures::chord_with_kink(), fixtures::two_loops_crossing_twice()}) {
    const std::string a = to_json(d);
    const BouquetDiagram back = diagram_from_json(a);
    CHECK(back == d);
    CHECK(to_json(back) == a);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = random_diagram(1 + static_cast<int>(seed % 3), seed, 6);
    CHECK(diagram_from_json(to_json(r.diagram)) == r.diagram);
  }
}

TEST_CASE("JSON integers beyond 64 bits survive") {
  const std::string big = "123456789012345678901234567890";
  const std::string text = "{\"n\":1,\"vertex\":[0,1,0,1],\"loops\":[{\"legs\":[[[0,1,0,1],[1," + big +
                           ",0,1],[1," + big + ",1," + big + "],[0,1,0,1]]]}]}";
  const BouquetDiagram d = diagram_from_json(text);
  const Rat expected(mpz_class(1), mpz_class(big));
  CHECK(d.loop(0).legs[0].points[1].x == expected);
  CHECK(to_json(d).find(big) != std::string::npos);
  // unreduced input is normalized
  const BouquetDiagram h = diagram_from_json(
      "{\"n\":1,\"vertex\":[0,1,0,1],\"loops\":[{\"legs\":[[[0,1,0,1],[2,4,0,3],[3,6,-2,-4],[0,5,2,4],[0,1,0,1]]]}]}");
  CHECK(h == fixtures::circle());
}

TEST_CASE("JSON errors are ParseError") {
  CHECK(parse_code("{") == ErrorCode::ParseError);
  CHECK(parse_code("[]") == ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":2,\"vertex\":[0,1,0,1],\"loops\":[{\"legs\":[[[0,1,0,1],[1,2,0,1],[0,1,0,1]]]}]}") ==
        ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":1,\"vertex\":[0,0,0,1],\"loops\":[{\"legs\":[[[0,1,0,1],[1,2,0,1],[0,1,0,1]]]}]}") ==
        ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":1,\"vertex\":[0,1,0,1],\"loops\":[{\"legs\":[[[0,1,0,1],[0.5,1,0,1],[0,1,0,1]]]}]}") ==
        ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":1,\"vertex\":[0,1,0],\"loops\":[]}") == ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":1,\"n\":1,\"vertex\":[0,1,0,1],\"loops\":[]}") == ErrorCode::ParseError);
  CHECK(parse_code("{\"n\":0,\"loops\":[]}") == ErrorCode::ParseError);
  try {
    load_diagram("/nonexistent/diagram.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("realized diagrams serialize identically across runs") {
  const auto t = parse_tuple("order=e1,e2,e1^-1,e2^-1; h=01; w=11");
  CHECK(to_json(realize(t)) == to_json(realize(t)));
}
