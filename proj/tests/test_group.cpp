#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/constructions.hpp"
#include "grouplaw/group.hpp"
#include "grouplaw/mat2.hpp"

using namespace grouplaw;

TEST_CASE("mod_norm gives least nonnegative residues") {
  CHECK(mod_norm(7, 5) == 2);
  CHECK(mod_norm(-1, 9) == 8);
  CHECK(mod_norm(-18, 9) == 0);
  CHECK(mod_norm(0, 3) == 0);
}

TEST_CASE("2x2 matrices mod n") {
  Mat2 x(9, {1, -1, 3, -2});
  Mat2 y(9, {-2, 0, 0, 4});

  SECTION("entries normalize into [0, n)") {
    CHECK(x.a == std::array<int64_t, 4>{1, 8, 3, 7});
  }
  SECTION("multiplication and powers") {
    Mat2 x2 = x * x;
    CHECK(x2 == Mat2(9, {-2, 1, -3, 1}));
    CHECK(x.pow(3) == Mat2::identity(9));
    CHECK(y.pow(3) == Mat2::identity(9));
    CHECK(x.pow(0) == Mat2::identity(9));
  }
  SECTION("inverse matches negative powers") {
    CHECK(x.inverse() * x == Mat2::identity(9));
    CHECK(x.pow(-2) == (x * x).inverse());
  }
  SECTION("unit determinant check") {
    CHECK(x.unit_det());
    CHECK_FALSE(Mat2(9, {3, 0, 0, 1}).unit_det());
  }
  SECTION("non-unit inversion throws") {
    CHECK_THROWS_AS(Mat2(9, {3, 0, 0, 1}).inverse(), Error);
  }
}

TEST_CASE("cyclic group arithmetic") {
  Group z6 = cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.mul({4}, {5}) == Elem{3});
  CHECK(z6.inv({2}) == Elem{4});
  CHECK(z6.pow({1}, -1) == Elem{5});
  CHECK(z6.pow({5}, 13) == Elem{5});
  CHECK(order_of(z6, {4}) == 3);
  CHECK(z6.identity() == Elem{0});
  CHECK(cyclic(1).order() == 1);
}

TEST_CASE("group handle utilities") {
  Group z5 = cyclic(5);
  CHECK(z5.index_of({3}) == 3);
  CHECK(z5.index_of({7}) == -1);
  CHECK(z5.contains({0}));
  CHECK(z5.conj({2}, {1}) == Elem{2});
  CHECK(z5.comm({2}, {3}) == Elem{0});
  CHECK(elem_str(Elem{1, 2}) == "(1,2)");
}

TEST_CASE("direct products") {
  Group g = direct_product(cyclic(2), cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.width() == 2);
  CHECK(g.mul({1, 2}, {1, 2}) == Elem{0, 1});
  CHECK(order_of(g, {1, 1}) == 6);
  CHECK(g.generators().size() == 2);

  Group h = direct_product({cyclic(2), cyclic(2), cyclic(2)});
  CHECK(h.order() == 8);
  for (std::size_t i = 0; i < h.order(); ++i)
    CHECK(h.mul(h.element(i), h.element(i)) == h.identity());
}

TEST_CASE("mod-3 Heisenberg group") {
  Group h = heisenberg3();
  REQUIRE(h.order() == 27);

  Elem x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
  SECTION("commutator of the generators is the central element") {
    CHECK(h.comm(x, y) == z);
    for (std::size_t i = 0; i < h.order(); ++i) {
      CHECK(h.mul(h.element(i), z) == h.mul(z, h.element(i)));
    }
  }
  SECTION("every nontrivial element has order 3") {
    for (std::size_t i = 0; i < h.order(); ++i) {
      Elem g = h.element(i);
      CHECK(h.pow(g, 3) == h.identity());
    }
  }
  SECTION("nonabelian") {
    CHECK(h.mul(x, y) != h.mul(y, x));
  }
  SECTION("group axioms hold on all triples") {
    for (std::size_t i = 0; i < h.order(); ++i) {
      Elem a = h.element(i);
      CHECK(h.mul(a, h.inv(a)) == h.identity());
      for (std::size_t j = 0; j < h.order(); ++j)
        for (std::size_t k = 0; k < h.order(); ++k) {
          Elem b = h.element(j), c = h.element(k);
          CHECK(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)));
        }
    }
  }
}

TEST_CASE("symmetric groups") {
  Group s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  Group s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(symmetric_group(1).order() == 1);

  // generators really generate
  CHECK(closure(s4, s4.generators()).order() == 24);

  Elem p{1, 2, 0};  // 3-cycle
  CHECK(order_of(s3, p) == 3);
  CHECK(s3.mul(p, s3.inv(p)) == s3.identity());
}

TEST_CASE("units groups") {
  Group u7 = units_mod(7);
  CHECK(u7.order() == 6);
  Group u9 = units_mod(9);
  CHECK(u9.order() == 6);
  // generators are pruned but still generate
  CHECK(closure(u9, u9.generators()).order() == 6);
  CHECK(u9.mul({2}, {5}) == Elem{1});
  CHECK(u9.inv({2}) == Elem{5});
}
