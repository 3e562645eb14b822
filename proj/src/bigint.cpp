#include "monord/bigint.hpp"

#include <cctype>

#include "monord/errors.hpp"

namespace monord {

BigInt binomial(const BigInt& n, unsigned long k) {
  // mpz_bin_ui follows the (-1)^k C(-n+k-1, k) convention for negative n,
  // which is the falling-factorial polynomial evaluated at n.
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected an integer", 0, i + 1);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in integer", 0,
                       j + 1);
    }
  }
  BigInt value(text[0] == '+' ? text.substr(1) : text, 10);
  return value;
}

}  // namespace monord
