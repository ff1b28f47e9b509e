#include <doctest.h>

#include "uvr/extended_real.hpp"

using uvr::ExtendedReal;

TEST_CASE("extended real ordering") {
  const auto neg = ExtendedReal::neg_inf();
  const auto pos = ExtendedReal::pos_inf();
  const auto zero = ExtendedReal::finite(0.0);
  const auto one = ExtendedReal::finite(1.0);

  CHECK(uvr::extended_compare(neg, zero) == std::strong_ordering::less);
  CHECK(uvr::extended_compare(pos, pos) == std::strong_ordering::equal);
  CHECK(uvr::extended_compare(one, ExtendedReal::finite(1.0)) ==
        std::strong_ordering::equal);
  CHECK(neg < zero);
  CHECK(zero < one);
  CHECK(one < pos);
  CHECK(neg < pos);
}

TEST_CASE("infinities never coerce to finite") {
  CHECK_THROWS_AS(ExtendedReal::pos_inf().value(), std::domain_error);
  CHECK_THROWS_AS(ExtendedReal::neg_inf().value(), std::domain_error);
  CHECK_THROWS_AS(ExtendedReal::finite(1.0 / 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedReal::finite(0.0 / 0.0), std::invalid_argument);
}

TEST_CASE("scaling keeps tags straight") {
  CHECK((2.0 * ExtendedReal::pos_inf()).is_pos_inf());
  CHECK((-3.0 * ExtendedReal::pos_inf()).is_neg_inf());
  CHECK((-1.0 * ExtendedReal::neg_inf()).is_pos_inf());
  CHECK((2.0 * ExtendedReal::finite(3.0)).value() == 6.0);
  CHECK((0.0 * ExtendedReal::finite(5.0)).value() == 0.0);
  CHECK_THROWS_AS(0.0 * ExtendedReal::pos_inf(), std::domain_error);
}

TEST_CASE("negation") {
  CHECK((-ExtendedReal::pos_inf()).is_neg_inf());
  CHECK((-ExtendedReal::finite(2.5)).value() == -2.5);
}
