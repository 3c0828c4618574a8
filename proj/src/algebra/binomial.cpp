#include "idla/algebra/binomial.hpp"

#include <stdexcept>
#include <string>

namespace idla::algebra {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be non-negative, got " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

}  // namespace idla::algebra
