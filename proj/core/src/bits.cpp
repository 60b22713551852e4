#include "localcert/bits.hpp"

#include <cctype>
#include <cstdio>

namespace localcert {

void BitString::push_bit(bool value) {
  std::size_t byte = size_ / 8;
  if (byte == bytes_.size()) bytes_.push_back(0);
  if (value) bytes_[byte] |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
  ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  if (width > 64) fail(ErrorCode::kFormatError, "append_bits width > 64");
  for (unsigned i = width; i-- > 0;) push_bit((value >> i) & 1u);
}

void BitString::append_varint(std::uint64_t value) {
  do {
    std::uint8_t chunk = value & 0x7fu;
    value >>= 7;
    append_bits(static_cast<std::uint64_t>(chunk) | (value ? 0x80u : 0x00u), 8);
  } while (value);
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size_; ++i) push_bit(other.bit(i));
}

bool BitString::bit(std::size_t index) const {
  if (index >= size_) fail(ErrorCode::kFormatError, "bit index out of range");
  return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

std::string BitString::to_hex() const {
  std::string out;
  out.reserve(bytes_.size() * 2 + 16);
  char buf[4];
  for (std::uint8_t b : bytes_) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  out += ':';
  out += std::to_string(size_);
  return out;
}

BitString BitString::from_hex(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::kFormatError, "certificate missing ':<bitlen>' suffix: " + text);
  const std::string hex = text.substr(0, colon);
  if (hex.size() % 2 != 0)
    fail(ErrorCode::kFormatError, "odd hex digit count in certificate: " + text);
  std::size_t bitlen = 0;
  try {
    std::size_t used = 0;
    bitlen = std::stoull(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trail");
  } catch (const std::exception&) {
    fail(ErrorCode::kFormatError, "bad bit length in certificate: " + text);
  }
  if (bitlen > hex.size() * 4 || (bitlen + 7) / 8 != hex.size() / 2)
    fail(ErrorCode::kFormatError, "bit length does not match hex size: " + text);

  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    fail(ErrorCode::kFormatError, "bad hex digit in certificate: " + text);
  };

  BitString out;
  out.bytes_.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.bytes_.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4) | nibble(hex[i + 1]));
  out.size_ = bitlen;
  // Padding bits past the declared length must be zero so hex form is unique.
  for (std::size_t i = bitlen; i < out.bytes_.size() * 8; ++i)
    if ((out.bytes_[i / 8] >> (7 - i % 8)) & 1u)
      fail(ErrorCode::kFormatError, "nonzero padding bits in certificate: " + text);
  return out;
}

bool BitString::operator==(const BitString& other) const {
  return size_ == other.size_ && bytes_ == other.bytes_;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
  std::size_t common = std::min(size_, other.size_);
  for (std::size_t i = 0; i < common; ++i) {
    bool a = bit(i), b = other.bit(i);
    if (a != b) return a <=> b;
  }
  return size_ <=> other.size_;
}

bool BitReader::read_bit() {
  if (pos_ >= bits_.size()) fail(ErrorCode::kFormatError, "certificate too short");
  return bits_.bit(pos_++);
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width > 64) fail(ErrorCode::kFormatError, "read_bits width > 64");
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) value = (value << 1) | (read_bit() ? 1u : 0u);
  return value;
}

std::uint64_t BitReader::read_varint() {
  std::uint64_t value = 0;
  unsigned shift = 0;
  for (;;) {
    std::uint64_t byte = read_bits(8);
    if (shift >= 63 && (byte & 0x7fu) > 1u)
      fail(ErrorCode::kFormatError, "varint overflows 64 bits");
    value |= (byte & 0x7fu) << shift;
    if (!(byte & 0x80u)) return value;
    shift += 7;
    if (shift > 63) fail(ErrorCode::kFormatError, "varint too long");
  }
}

std::size_t varint_bits(std::uint64_t value) {
  std::size_t bytes = 1;
  while (value >>= 7) ++bytes;
  return bytes * 8;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kUnknownEndpoint: return "unknown-endpoint";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kUnknownVertex: return "unknown-vertex";
    case ErrorCode::kMissingCertificate: return "missing-certificate";
    case ErrorCode::kMissingPoint: return "missing-point";
    case ErrorCode::kNotTriangleFree: return "not-triangle-free";
    case ErrorCode::kInvalidEmbedding: return "invalid-embedding";
    case ErrorCode::kCoincidentPoints: return "coincident-points";
    case ErrorCode::kBrokenPath: return "broken-path";
    case ErrorCode::kBadIndex: return "bad-index";
    case ErrorCode::kNoValidOrdering: return "no-valid-ordering";
    case ErrorCode::kInfeasibleParameters: return "infeasible-parameters";
    case ErrorCode::kTooShortCorridor: return "too-short-corridor";
    case ErrorCode::kNotMember: return "not-member";
    case ErrorCode::kSpliceMismatch: return "splice-mismatch";
    case ErrorCode::kUnexpectedRejection: return "unexpected-rejection";
    case ErrorCode::kFormatError: return "format-error";
  }
  return "unknown";
}

}  // namespace localcert
