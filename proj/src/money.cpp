#include "gtpmm/money.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "gtpmm/errors.hpp"

namespace gtpmm {

std::string Money::to_major_string() const {
  if (is_infinite()) return "inf";
  const std::int64_t a = cents_ < 0 ? -cents_ : cents_;
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (cents_ < 0 ? "-" : "") + std::to_string(a / 100) + "." + frac;
}

std::ostream& operator<<(std::ostream& os, Money m) {
  return os << m.value() << "c";
}

std::int64_t parse_fixed_point(const std::string& text, int decimals) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (i == end) throw ConfigError("empty number");
  if (text[i] == '-') throw ConfigError("negative amount '" + text + "'");
  if (text[i] == '+') ++i;

  std::int64_t whole = 0;
  bool digits = false;
  for (; i < end && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    whole = whole * 10 + (text[i] - '0');
    digits = true;
  }
  std::int64_t frac = 0;
  int frac_len = 0;
  bool round_up = false;
  if (i < end && text[i] == '.') {
    ++i;
    for (; i < end && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits = true;
      if (frac_len < decimals) {
        frac = frac * 10 + (text[i] - '0');
        ++frac_len;
      } else if (frac_len == decimals) {
        round_up = text[i] >= '5';
        ++frac_len;
      }
    }
  }
  if (!digits || i != end) throw ConfigError("malformed number '" + text + "'");

  std::int64_t scale = 1;
  for (int d = 0; d < decimals; ++d) scale *= 10;
  for (int d = std::min(frac_len, decimals); d < decimals; ++d) frac *= 10;
  return whole * scale + frac + (round_up ? 1 : 0);
}

}  // namespace gtpmm
