#include "eiscensus/int128.hpp"

#include <algorithm>

namespace eiscensus {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(SignedCount value) {
  if (value >= 0) return to_string(static_cast<Count>(value));
  // Negate in unsigned space so the minimum value does not overflow.
  return "-" + to_string(Count{0} - static_cast<Count>(value));
}

std::optional<Count> checked_mul(Count a, Count b, Count bound) {
  if (a != 0 && b > (bound - 1) / a) return std::nullopt;
  Count product = a * b;
  if (product >= bound) return std::nullopt;
  return product;
}

std::optional<Count> checked_pow(Count base, unsigned exp, Count bound) {
  Count result = 1;
  if (result >= bound) return std::nullopt;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base, bound);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

}  // namespace eiscensus
