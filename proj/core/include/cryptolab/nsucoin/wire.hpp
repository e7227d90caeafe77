#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cryptolab::nsucoin {

// Wire-format error with a machine-checkable reason.
class WireError : public std::runtime_error {
 public:
  enum class Kind { FieldOrder, BadHash, Range, Malformed };
  WireError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// transaction = "txHash:{h};inputTx:{tx1[,tx2]};value1:{v1};pubKey1:{pk1};sign1:{s1}
//               [;value2:{v2};pubKey2:{pk2};sign2:{s2}]"
// Special transactions mint 10 coins: no inputs, empty sign1, no buyer part.
struct Transaction {
  std::string tx_hash;                // 8 lowercase hex chars
  std::vector<std::string> inputs;    // 0..2 parent hashes, order as written
  unsigned value1 = 0;                // coins to the seller, 1..10
  std::uint64_t pub_key1 = 0;
  std::string sign1;                  // hex, empty for special transactions
  bool has_buyer = false;
  unsigned value2 = 0;                // change back to the buyer, 0..10
  std::uint64_t pub_key2 = 0;
  std::string sign2;

  bool is_special() const { return inputs.empty() && !has_buyer; }

  std::string transaction_info() const;  // everything after "txHash:{h};"
  std::string serialize() const;
  // Parses and recomputes the hash; field order is strict.
  static Transaction parse(std::string_view line);

  // Builds a transaction with both signatures and the hash filled in.
  static Transaction make(const std::vector<std::string>& inputs, unsigned value1,
                          std::uint64_t pub_key1, unsigned value2, std::uint64_t pub_key2,
                          std::uint64_t buyer_private_exp);
  static Transaction make_special(std::uint64_t pub_key);
};

// block = "height:{h};prevHash:{ph};ctxHash:{ch};nonce:{nonce}"
struct Block {
  unsigned height = 0;
  std::string prev_hash;  // 8 hex chars
  std::string ctx_hash;   // 8 hex chars
  unsigned nonce = 0;

  std::string serialize() const;
  std::string hash() const;  // reduced MD5 of the serialization
  static Block parse(std::string_view line);
};

// A chain as stored on disk: each block preceded by the transactions it
// verifies, in ctxHash concatenation order.
struct Chain {
  struct Entry {
    Block block;
    std::vector<Transaction> transactions;
  };
  std::vector<Entry> entries;

  std::string serialize() const;  // one record per line
  static Chain parse(const std::string& text);
};

}  // namespace cryptolab::nsucoin
