#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cryptolab::cipherlab {

// Per-letter shift amounts. When built from turn counts the shifts are the
// running totals and therefore non-decreasing.
struct ShiftSchedule {
  std::vector<unsigned> shifts;

  static ShiftSchedule from_turn_counts(const std::vector<unsigned>& turns_before_letter);
  // Whitespace/comma separated decimal amounts.
  static ShiftSchedule parse(std::string_view text);
};

// letter_i - shift_i mod 26 over A..Z; rejects non-alphabetic ciphertext.
std::string progressive_caesar_decrypt(std::string_view ciphertext, const ShiftSchedule& schedule);

// The maze walk: its ciphertext and the shift at each step.
extern const char* const kLabyrinthCiphertext;
const ShiftSchedule& labyrinth_shift_schedule();

}  // namespace cryptolab::cipherlab
