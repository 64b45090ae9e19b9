#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace digalph {

// A five-bit communication state. Bits from most to least significant:
// source, subject, destination, form known, attribute known.
class CommCode {
 public:
  static constexpr int kBits = 5;
  static constexpr std::uint8_t kMax = 31;

  constexpr CommCode() = default;

  // Throws Error(InvalidArgument) when value > 31.
  static CommCode from_value(unsigned value);
  static constexpr CommCode from_bits(bool source, bool subject, bool destination, bool form,
                                      bool attribute) {
    return CommCode(static_cast<std::uint8_t>((source << 4) | (subject << 3) | (destination << 2) |
                                              (form << 1) | attribute));
  }
  // Accepts exactly five '0'/'1' characters. Throws Error(Parse) otherwise.
  static CommCode parse(std::string_view bits);
  static std::optional<CommCode> try_parse(std::string_view bits) noexcept;

  constexpr std::uint8_t value() const { return value_; }

  constexpr bool source_present() const { return (value_ >> 4) & 1U; }
  constexpr bool subject_present() const { return (value_ >> 3) & 1U; }
  constexpr bool destination_present() const { return (value_ >> 2) & 1U; }
  constexpr bool form_known() const { return (value_ >> 1) & 1U; }
  constexpr bool attribute_known() const { return value_ & 1U; }

  constexpr CommCode complement() const { return CommCode(static_cast<std::uint8_t>(~value_ & kMax)); }

  // "10110"
  std::string to_string() const;

  friend constexpr bool operator==(CommCode, CommCode) = default;
  friend constexpr auto operator<=>(CommCode, CommCode) = default;

 private:
  constexpr explicit CommCode(std::uint8_t value) : value_(value) {}

  std::uint8_t value_ = 0;
};

}  // namespace digalph
