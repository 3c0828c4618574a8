#pragma once

#include "idla/algebra/rational.hpp"

namespace idla::algebra {

/// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
BigInt binomial(long n, long k);

/// n!. Throws std::invalid_argument for n < 0.
BigInt factorial(long n);

}  // namespace idla::algebra
