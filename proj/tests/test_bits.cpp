#include "doctest.h"

#include "localcert/bits.hpp"

using namespace localcert;

TEST_CASE("bit append and read round-trips msb-first") {
  BitString b;
  b.append_bits(0b1011, 4);
  CHECK(b.size() == 4);
  CHECK(b.bit(0));
  CHECK(!b.bit(1));
  CHECK(b.bit(2));
  CHECK(b.bit(3));

  b.append_bits(0x2f, 8);
  BitReader r(b);
  CHECK(r.read_bits(4) == 0b1011);
  CHECK(r.read_bits(8) == 0x2f);
  CHECK(r.exhausted());
}

TEST_CASE("varint is byte-aligned little endian base 128") {
  for (std::uint64_t v : {0ull, 1ull, 127ull, 128ull, 300ull, 1ull << 40,
                          ~0ull}) {
    BitString b;
    b.append_varint(v);
    CHECK(b.size() == varint_bits(v));
    BitReader r(b);
    CHECK(r.read_varint() == v);
    CHECK(r.exhausted());
  }
  CHECK(varint_bits(0) == 8);
  CHECK(varint_bits(127) == 8);
  CHECK(varint_bits(128) == 16);
}

TEST_CASE("hex form carries the exact bit length") {
  BitString b;
  b.append_bits(0b101, 3);
  std::string hex = b.to_hex();
  CHECK(hex == "a0:3");
  BitString back = BitString::from_hex(hex);
  CHECK(back == b);

  BitString empty;
  CHECK(empty.to_hex() == ":0");
  CHECK(BitString::from_hex(":0") == empty);
}

TEST_CASE("hex rejects malformed input") {
  CHECK_THROWS_AS((void)BitString::from_hex("a0"), Error);
  CHECK_THROWS_AS((void)BitString::from_hex("a0:9"), Error);   // too long
  CHECK_THROWS_AS((void)BitString::from_hex("a1:3"), Error);   // dirty padding
  CHECK_THROWS_AS((void)BitString::from_hex("zz:8"), Error);
  CHECK_THROWS_AS((void)BitString::from_hex("abc:12"), Error); // odd digits
}

TEST_CASE("reader overrun throws format error") {
  BitString b;
  b.append_bits(3, 2);
  BitReader r(b);
  r.read_bits(2);
  CHECK_THROWS_AS((void)r.read_bit(), Error);
  try {
    BitReader r2(b);
    r2.read_bits(3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFormatError);
  }
}

TEST_CASE("ordering is lexicographic then by length") {
  BitString a, b;
  a.append_bits(0b0, 1);
  b.append_bits(0b1, 1);
  CHECK(a < b);
  BitString c;  // prefix of a
  CHECK(c < a);
  BitString d;
  d.append_bits(0b0, 1);
  CHECK(a == d);
  CHECK((a <=> d) == std::strong_ordering::equal);
}

TEST_CASE("append concatenates preserving order") {
  BitString a, b;
  a.append_bits(0b10, 2);
  b.append_bits(0b011, 3);
  a.append(b);
  CHECK(a.size() == 5);
  BitReader r(a);
  CHECK(r.read_bits(5) == 0b10011);
}
