#include <doctest.h>

#include <random>

#include "boolinfo/core.hpp"
#include "oracles.hpp"

using namespace boolinfo;

TEST_CASE("entropy_f") {
  CHECK(entropy_f(0.0) == 0.0);
  CHECK(entropy_f(1.0) == 0.0);
  CHECK(entropy_f(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(entropy_f(-0.1), std::domain_error);
  CHECK_THROWS_AS(entropy_f(1.5), std::domain_error);
}

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  // mpmath, 40 digits
  CHECK(binary_entropy(0.1) == doctest::Approx(0.46899559358928122).epsilon(1e-15));
  CHECK(binary_entropy(0.1) == doctest::Approx(entropy_f(0.1) + entropy_f(0.9)).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(2.0), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    // 1 - p is exact for p in [1/2, 1]
    const double p = 0.5 + 0.5 * u(rng);
    CHECK(binary_entropy(p) == binary_entropy(1.0 - p));
  }
}

TEST_CASE("entropy_f is concave") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const double x = u(rng), y = u(rng), theta = u(rng);
    CHECK(entropy_f(theta * x + (1 - theta) * y) >= theta * entropy_f(x) + (1 - theta) * entropy_f(y) - 1e-12);
  }
}

TEST_CASE("initial_segment and is_lex") {
  const auto l34 = initial_segment(3, 4);
  CHECK(l34.points() == std::vector<Point>{0b000, 0b001, 0b010, 0b011});
  CHECK(is_lex(l34));
  CHECK(initial_segment(3, 0).count() == 0);
  CHECK(initial_segment(3, 8).count() == 8);
  CHECK_THROWS_AS(initial_segment(3, 9), std::out_of_range);

  const std::vector<Point> gap{0b000, 0b010};
  CHECK_FALSE(is_lex(TruthTable::from_points(3, gap)));
  CHECK(is_lex(TruthTable(4)));

  std::mt19937_64 rng(3);
  for (int n = 0; n <= 10; ++n) {
    std::uniform_int_distribution<std::size_t> m(0, std::size_t{1} << n);
    for (int t = 0; t < 20; ++t) {
      const auto size = m(rng);
      const auto seg = initial_segment(n, size);
      CHECK(seg.count() == size);
      CHECK(is_lex(seg));
    }
  }
  // crosses 64-bit word boundaries
  CHECK(initial_segment(8, 130).count() == 130);
  CHECK(is_lex(initial_segment(8, 130)));
}

TEST_CASE("lex_of") {
  CHECK(lex_of(LexSpec(2, 3)).points() == std::vector<Point>{0b00, 0b01, 0b10});
  CHECK(lex_of(LexSpec(1, 1)).points() == std::vector<Point>{0});
  CHECK(lex_of(LexSpec(3, 4)) == initial_segment(3, 4));
  CHECK_THROWS_AS(lex_of(LexSpec(15, 3)), CapExceeded);
}

TEST_CASE("LexSpec reduction") {
  CHECK(LexSpec(3, 4) == LexSpec(1, 1));
  CHECK(LexSpec(5, 0) == LexSpec(0, 0));
  CHECK(LexSpec(2, 4) == LexSpec(0, 1));
  CHECK_FALSE(LexSpec(3, 3) == LexSpec(2, 1));
  CHECK(LexSpec(4, 12).reduced().depth() == 2);
  CHECK(LexSpec(2, 3).at_depth(4).numerator() == 12);
  CHECK_THROWS_AS(LexSpec(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(LexSpec(-1, 0), std::invalid_argument);
}

TEST_CASE("ChannelParam range") {
  CHECK_NOTHROW(ChannelParam(0.0));
  CHECK_NOTHROW(ChannelParam(0.5));
  CHECK_THROWS_AS(ChannelParam(0.51), std::domain_error);
  CHECK_THROWS_AS(ChannelParam(-1e-9), std::domain_error);
}

TEST_CASE("hex serialization") {
  // dictator x_1 on two inputs: B = {00, 01} = bits 0 and 1
  CHECK(to_hex(initial_segment(2, 2)) == "n=2:3");
  CHECK(to_hex(TruthTable(1)) == "n=1:0");
  CHECK(to_hex(initial_segment(3, 8)) == "n=3:ff");
  CHECK(to_hex(initial_segment(5, 4)) == "n=5:0000000f");
  CHECK(from_hex("n=5:0008088E") == from_hex("n=5:0008088e"));

  std::mt19937_64 rng(5);
  for (int n = 0; n <= 10; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto table = oracle::random_table(n, rng);
      CHECK(from_hex(to_hex(table)) == table);
    }

  CHECK_THROWS_AS(from_hex("n=2:13"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("n=1:4"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("2:3"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("n=2:g"), std::invalid_argument);
  CHECK_THROWS_AS(from_hex("n=15:0"), CapExceeded);
}

TEST_CASE("complement and permutation") {
  const auto b = from_hex("n=3:2b");
  CHECK(b.complement().count() == 8 - b.count());
  CHECK(b.complement().complement() == b);
  const std::vector<int> identity{1, 2, 3};
  CHECK(b.permuted(identity) == b);
  const std::vector<int> swap12{2, 1, 3};
  CHECK(b.permuted(swap12).permuted(swap12) == b);
  const std::vector<int> bad{1, 1, 3};
  CHECK_THROWS(b.permuted(bad));
}
