#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schroder {

using BigInt = boost::multiprecision::cpp_int;

enum class Sequence { Motzkin32, LargeMotzkin, LargeSchroder, LittleSchroder, Ncl };

// "m", "L", "S", "s", "f".
std::string sequence_symbol(Sequence seq);
std::optional<Sequence> sequence_from_symbol(const std::string& symbol);

// Exact values a_first .. a_last of one sequence, with a note on how they were
// computed.
class SequenceTable {
 public:
  SequenceTable(Sequence seq, std::size_t first_index, std::vector<BigInt> values,
                std::string recurrence);

  Sequence sequence() const noexcept { return seq_; }
  std::size_t first_index() const noexcept { return first_; }
  std::size_t last_index() const noexcept { return first_ + values_.size() - 1; }
  const std::vector<BigInt>& values() const noexcept { return values_; }
  const std::string& recurrence() const noexcept { return recurrence_; }
  // Throws std::out_of_range outside [first_index, last_index].
  const BigInt& at(std::size_t n) const;

 private:
  Sequence seq_;
  std::size_t first_;
  std::vector<BigInt> values_;
  std::string recurrence_;
};

// m_0 .. m_N from M = 1 + 3xM + 2x^2 M^2.
SequenceTable motzkin32_numbers(std::size_t N);
// L_0 .. L_N from L = 1 + 2xL + 2x^2 M L.
SequenceTable large_motzkin_numbers(std::size_t N);

struct SchroderTables {
  SequenceTable large;   // S_0 .. S_N
  SequenceTable little;  // s_0 .. s_N
};
SchroderTables schroder_numbers(std::size_t N);

// f_1 .. f_N (f_{n+1} = L_n). Throws std::invalid_argument for N < 1.
SequenceTable ncl_counts(std::size_t N);

// Any table by symbol; for f the range is 1..N, otherwise 0..N.
SequenceTable sequence_table(Sequence seq, std::size_t N);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> first_failure;
};

struct IdentityReport {
  std::size_t N = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// For 1 <= n <= N: L_n = 2 m_{n-1}, L_n = S_n, S_n = 2 s_n, s_n = m_{n-1}.
IdentityReport verify_identities(std::size_t N);

}  // namespace schroder
