#include "cryptolab/support/hex.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cryptolab::support {

bool is_hex_digit(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("not a hex digit: '") + c + "'");
}

char hex_digit(unsigned v) { return "0123456789abcdef"[v & 0xf]; }

std::vector<std::uint8_t> parse_hex_bytes(std::string_view hex) {
  std::vector<int> nibbles;
  for (char c : hex) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    nibbles.push_back(hex_value(c));
  }
  if (nibbles.size() % 2 != 0) throw std::invalid_argument("odd number of hex digits");
  std::vector<std::uint8_t> out(nibbles.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((nibbles[2 * i] << 4) | nibbles[2 * i + 1]);
  return out;
}

std::string to_hex(const std::uint8_t* data, std::size_t len) {
  std::string s(2 * len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    s[2 * i] = hex_digit(data[i] >> 4);
    s[2 * i + 1] = hex_digit(data[i]);
  }
  return s;
}

std::string to_hex(const std::vector<std::uint8_t>& data) { return to_hex(data.data(), data.size()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> read_data_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

}  // namespace cryptolab::support
