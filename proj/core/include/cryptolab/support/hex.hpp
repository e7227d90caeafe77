#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cryptolab::support {

bool is_hex_digit(char c);
int hex_value(char c);  // throws std::invalid_argument on non-hex input
char hex_digit(unsigned v);

// "689e..." -> bytes. Whitespace is ignored; an odd digit count is an error.
std::vector<std::uint8_t> parse_hex_bytes(std::string_view hex);
std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const std::vector<std::uint8_t>& data);

// Reads a whole file, throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

// Splits into non-empty lines; '#' starts a comment, surrounding blanks are trimmed.
std::vector<std::string> read_data_lines(const std::string& path);

std::string trim(std::string_view s);

}  // namespace cryptolab::support
