#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>

namespace cryptolab::md5 {

// Standard MD5 (RFC 1321). Used both as a full digest and in the reduced
// 4-byte form the coin format is built on.
std::array<std::uint8_t, 16> digest(std::string_view data);

std::string hex_digest(std::string_view data);

// First 4 digest bytes as 8 lowercase hex characters.
std::string reduced_hex(std::string_view data);

// First digest word (digest bytes 0..3, little-endian) for a message that
// fits a single padded block, i.e. length <= 55 bytes. The prefix check
// "0000####" is (word & 0xffff) == 0.
std::uint32_t first_word_short(const std::uint8_t* msg, std::size_t len);

// Fills a 64-byte MD5 block with message + padding; len <= 55.
void pad_block(const std::uint8_t* msg, std::size_t len, std::uint8_t block[64]);

// Compresses L independent pre-padded blocks and returns each first digest
// word. Plain loops over the lane index; built so the compiler can keep the
// lanes in vector registers.
template <std::size_t L>
void first_word_lanes(const std::uint8_t blocks[][64], std::uint32_t out[L]);

extern template void first_word_lanes<4>(const std::uint8_t blocks[][64], std::uint32_t out[4]);
extern template void first_word_lanes<8>(const std::uint8_t blocks[][64], std::uint32_t out[8]);
extern template void first_word_lanes<16>(const std::uint8_t blocks[][64], std::uint32_t out[16]);

}  // namespace cryptolab::md5
