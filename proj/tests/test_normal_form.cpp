#include <doctest.h>

#include <set>

#include "rp2/normal_form.hpp"
#include "support.hpp"

using namespace rp2;

TEST_CASE("class counts match the brute-force word orbits") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t words = oracle::word_class_count(n);
    CHECK(enumerate_words(n).size() == words);
    CHECK(enumerate_classes(n).size() == words << (2 * n));
  }
  CHECK(enumerate_classes(1).size() == 4);
  CHECK(enumerate_classes(2).size() == 48);
  CHECK(enumerate_classes(3).size() == 3840);
}

TEST_CASE("enumeration is free of duplicates and canonical") {
  const auto all = enumerate_classes(3);
  std::set<std::string> seen;
  for (const auto& t : all) {
    CHECK(seen.insert(to_string(t)).second);
    CHECK(parse_tuple(to_string(t)) == t);
  }
  CHECK(to_string(all.front()) == "order=e1,e1^-1,e2,e2^-1,e3,e3^-1; h=000; w=000");
}

TEST_CASE("enumerate rejects n outside 1..4") {
  for (int n : {0, 5, -1}) {
    try {
      enumerate_classes(n);
      FAIL("expected LimitExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LimitExceeded);
    }
  }
}

TEST_CASE("realize round trips every class with at most two loops") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : enumerate_classes(n)) {
      const BouquetDiagram d = realize(t);
      CHECK(is_valid(d));
      CHECK(invariants(d) == t);
      CHECK(classify(d) == t);
    }
  }
}

TEST_CASE("realize round trips a spread of three-loop classes") {
  const auto all = enumerate_classes(3);
  for (std::size_t k = 0; k < all.size(); k += 37) {
    const BouquetDiagram d = realize(all[k]);
    CHECK(invariants(d) == all[k]);
  }
}

TEST_CASE("realize is deterministic") {
  const auto t = parse_tuple("order=e1,e2,e1^-1,e2^-1; h=11; w=10");
  CHECK(realize(t) == realize(t));
}
