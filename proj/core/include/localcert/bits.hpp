#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "localcert/common.hpp"

namespace localcert {

// Append-only bit string, most significant bit first inside each appended
// field.  Certificates are BitStrings; orderings and equality are over the
// exact bit sequence, so two certs of different length never compare equal.
class BitString {
 public:
  BitString() = default;

  void push_bit(bool value);
  // Appends the low `width` bits of `value`, high bit first.
  void append_bits(std::uint64_t value, unsigned width);
  // LEB128, always a whole number of bytes.
  void append_varint(std::uint64_t value);
  void append(const BitString& other);

  bool bit(std::size_t index) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // "deadbeef:30" style: hex of the padded bytes plus the exact bit length.
  std::string to_hex() const;
  static BitString from_hex(const std::string& text);

  bool operator==(const BitString& other) const;
  std::strong_ordering operator<=>(const BitString& other) const;

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

// Sequential reader over a BitString; throws kFormatError on overrun.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(bits) {}

  bool read_bit();
  std::uint64_t read_bits(unsigned width);
  std::uint64_t read_varint();

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bits_.size() - pos_; }
  bool exhausted() const { return pos_ == bits_.size(); }

 private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

// Bit cost of append_varint: whole bytes, 7 payload bits each.
std::size_t varint_bits(std::uint64_t value);

}  // namespace localcert
