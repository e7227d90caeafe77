#include "cryptolab/cipherlab/progressive_caesar.hpp"

#include <charconv>
#include <stdexcept>

namespace cryptolab::cipherlab {

ShiftSchedule ShiftSchedule::from_turn_counts(const std::vector<unsigned>& turns_before_letter) {
  ShiftSchedule s;
  unsigned total = 0;
  for (unsigned t : turns_before_letter) {
    total += t;
    s.shifts.push_back(total);
  }
  return s;
}

ShiftSchedule ShiftSchedule::parse(std::string_view text) {
  ShiftSchedule s;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\n' ||
                               text[i] == '\t' || text[i] == '\r'))
      ++i;
    if (i >= text.size()) break;
    unsigned v = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad shift amount in schedule");
    s.shifts.push_back(v);
    i = static_cast<std::size_t>(p - text.data());
  }
  return s;
}

std::string progressive_caesar_decrypt(std::string_view ciphertext, const ShiftSchedule& schedule) {
  if (ciphertext.size() != schedule.shifts.size())
    throw std::invalid_argument("schedule length must match the ciphertext");
  std::string out(ciphertext.size(), '?');
  for (std::size_t i = 0; i < ciphertext.size(); ++i) {
    char c = ciphertext[i];
    if (c < 'A' || c > 'Z') throw std::invalid_argument("ciphertext must be A..Z");
    unsigned shifted = (static_cast<unsigned>(c - 'A') + 26 * 26 - schedule.shifts[i] % 26) % 26;
    out[i] = static_cast<char>('A' + shifted);
  }
  return out;
}

const char* const kLabyrinthCiphertext = "ONFIWQHWJJFLHZAOAXWESPPNGRCTPXGJXFWUDTOXYMCWJKML";

const ShiftSchedule& labyrinth_shift_schedule() {
  static const ShiftSchedule schedule{{0,  0,  1,  1,  2,  3,  4,  5,  5,  6,  7,  7,
                                       7,  8,  8,  9,  9,  9,  10, 11, 11, 11, 12, 13,
                                       13, 13, 14, 14, 14, 15, 15, 16, 16, 17, 17, 18,
                                       18, 19, 20, 20, 20, 20, 21, 22, 22, 23, 24, 24}};
  return schedule;
}

}  // namespace cryptolab::cipherlab
