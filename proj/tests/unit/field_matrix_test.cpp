#include <random>

#include "doctest.h"
#include "qgrass/error.hpp"
#include "qgrass/matrix.hpp"

using namespace qgrass;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % p);
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic reduces into [0, p)") {
  const Field k = Field::prime(7);
  CHECK(k.normalize(Rational(-1)) == 6);
  CHECK(k.normalize(Rational(1, 3)) == 5);  // 3 * 5 = 15 = 1
  CHECK(k.mul(k.inv(4), 4) == 1);
  CHECK_THROWS_AS(k.inv(0), DomainError);
  CHECK_FALSE(k.reduces(Rational(1, 7)));
  CHECK_THROWS_AS(Field::prime(9), DomainError);
}

TEST_CASE("field names parse back") {
  for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(101)}) CHECK(Field::parse(k.name()) == k);
  CHECK_THROWS(Field::parse("F_x"));
}

TEST_CASE("rank plus nullity equals column count; kernel is annihilated") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    const Field k = p ? Field::prime(p) : Field::rationals();
    for (int t = 0; t < 40; ++t) {
      const Matrix a = random_matrix(rng() % 5, 1 + rng() % 5, p ? p : 4, rng);
      const Matrix ker = kernel(k, a);  // columns span the kernel
      CHECK(rank(k, a) + ker.cols() == a.cols());
      if (ker.cols()) CHECK(multiply(k, a, ker).is_zero());
      CHECK(rank(k, a) == rank(k, a.transposed()));
    }
  }
}

TEST_CASE("rref is idempotent and records pivots") {
  std::mt19937_64 rng(11);
  const Field k = Field::prime(3);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(1 + rng() % 4, 1 + rng() % 4, 3, rng);
    const auto e = rref(k, a);
    CHECK(rref(k, e.reduced).reduced == e.reduced);
    CHECK(e.pivots.size() == rank(k, a));
  }
}

TEST_CASE("rank over Q and over F_p differ exactly at bad primes") {
  const Matrix a{{1, 1}, {1, -1}};
  CHECK(rank(Field::rationals(), a) == 2);
  CHECK(rank(Field::prime(2), normalized(Field::prime(2), a)) == 1);
  CHECK(rank(Field::prime(3), normalized(Field::prime(3), a)) == 2);
}
