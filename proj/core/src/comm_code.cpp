#include "digalph/comm_code.hpp"

#include "digalph/error.hpp"

namespace digalph {

CommCode CommCode::from_value(unsigned value) {
  if (value > kMax) {
    throw Error(ErrorKind::InvalidArgument, "code value out of range: " + std::to_string(value));
  }
  return CommCode(static_cast<std::uint8_t>(value));
}

std::optional<CommCode> CommCode::try_parse(std::string_view bits) noexcept {
  if (bits.size() != static_cast<std::size_t>(kBits)) return std::nullopt;
  std::uint8_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') return std::nullopt;
    value = static_cast<std::uint8_t>((value << 1) | (c == '1'));
  }
  return CommCode(value);
}

CommCode CommCode::parse(std::string_view bits) {
  if (auto code = try_parse(bits)) return *code;
  throw Error(ErrorKind::Parse, "not a five-bit code: \"" + std::string(bits) + "\"");
}

std::string CommCode::to_string() const {
  std::string out(kBits, '0');
  for (int i = 0; i < kBits; ++i) {
    if ((value_ >> (kBits - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

}  // namespace digalph
