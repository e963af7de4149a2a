#include "schroder/counting.hpp"

#include <stdexcept>

namespace schroder {

std::string sequence_symbol(Sequence seq) {
  switch (seq) {
    case Sequence::Motzkin32:
      return "m";
    case Sequence::LargeMotzkin:
      return "L";
    case Sequence::LargeSchroder:
      return "S";
    case Sequence::LittleSchroder:
      return "s";
    case Sequence::Ncl:
      return "f";
  }
  return "?";
}

std::optional<Sequence> sequence_from_symbol(const std::string& symbol) {
  for (Sequence seq : {Sequence::Motzkin32, Sequence::LargeMotzkin, Sequence::LargeSchroder,
                       Sequence::LittleSchroder, Sequence::Ncl}) {
    if (sequence_symbol(seq) == symbol) return seq;
  }
  return std::nullopt;
}

SequenceTable::SequenceTable(Sequence seq, std::size_t first_index, std::vector<BigInt> values,
                             std::string recurrence)
    : seq_(seq), first_(first_index), values_(std::move(values)), recurrence_(std::move(recurrence)) {
  if (values_.empty()) throw std::invalid_argument("a sequence table needs at least one value");
}

const BigInt& SequenceTable::at(std::size_t n) const {
  if (n < first_ || n > last_index()) {
    throw std::out_of_range(sequence_symbol(seq_) + "_" + std::to_string(n) + " is not in the table");
  }
  return values_[n - first_];
}

namespace {

std::vector<BigInt> motzkin32_values(std::size_t N) {
  std::vector<BigInt> m(N + 1);
  m[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt conv = 0;
    for (std::size_t j = 0; j + 2 <= n; ++j) conv += m[j] * m[n - 2 - j];
    m[n] = 3 * m[n - 1] + 2 * conv;
  }
  return m;
}

std::vector<BigInt> large_values(std::size_t N, const std::vector<BigInt>& m) {
  std::vector<BigInt> L(N + 1);
  L[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt conv = 0;
    for (std::size_t j = 0; j + 2 <= n; ++j) conv += m[j] * L[n - 2 - j];
    L[n] = 2 * L[n - 1] + 2 * conv;
  }
  return L;
}

}  // namespace

SequenceTable motzkin32_numbers(std::size_t N) {
  return SequenceTable(Sequence::Motzkin32, 0, motzkin32_values(N),
                       "m_0 = 1, m_n = 3 m_{n-1} + 2 sum_{j=0}^{n-2} m_j m_{n-2-j}");
}

SequenceTable large_motzkin_numbers(std::size_t N) {
  return SequenceTable(Sequence::LargeMotzkin, 0, large_values(N, motzkin32_values(N)),
                       "L_0 = 1, L_n = 2 L_{n-1} + 2 sum_{j=0}^{n-2} m_j L_{n-2-j}");
}

SchroderTables schroder_numbers(std::size_t N) {
  std::vector<BigInt> S(N + 1);
  S[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt conv = 0;
    for (std::size_t k = 0; k < n; ++k) conv += S[k] * S[n - 1 - k];
    S[n] = S[n - 1] + conv;
  }
  std::vector<BigInt> s(N + 1);
  s[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt rem;
    boost::multiprecision::divide_qr(S[n], BigInt(2), s[n], rem);
    if (rem != 0) {
      throw std::logic_error("S_" + std::to_string(n) + " is odd; Schroder table is inconsistent");
    }
  }
  return {SequenceTable(Sequence::LargeSchroder, 0, std::move(S),
                        "S_0 = 1, S_n = S_{n-1} + sum_{k=0}^{n-1} S_k S_{n-1-k}"),
          SequenceTable(Sequence::LittleSchroder, 0, std::move(s), "s_0 = 1, s_n = S_n / 2")};
}

SequenceTable ncl_counts(std::size_t N) {
  if (N < 1) throw std::invalid_argument("f is indexed from 1");
  return SequenceTable(Sequence::Ncl, 1, large_values(N - 1, motzkin32_values(N - 1)),
                       "f_{n+1} = L_n");
}

SequenceTable sequence_table(Sequence seq, std::size_t N) {
  switch (seq) {
    case Sequence::Motzkin32:
      return motzkin32_numbers(N);
    case Sequence::LargeMotzkin:
      return large_motzkin_numbers(N);
    case Sequence::LargeSchroder:
      return schroder_numbers(N).large;
    case Sequence::LittleSchroder:
      return schroder_numbers(N).little;
    case Sequence::Ncl:
      return ncl_counts(N);
  }
  throw std::invalid_argument("unknown sequence");
}

bool IdentityReport::all_passed() const {
  for (const IdentityCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

IdentityReport verify_identities(std::size_t N) {
  if (N < 1) throw std::invalid_argument("identities are checked from n = 1");
  const std::vector<BigInt> m = motzkin32_values(N);
  const std::vector<BigInt> L = large_values(N, m);
  const SchroderTables sch = schroder_numbers(N);
  const auto& S = sch.large.values();
  const auto& s = sch.little.values();

  IdentityReport report;
  report.N = N;
  auto check = [&](std::string name, auto&& holds) {
    IdentityCheck c{std::move(name), true, std::nullopt};
    for (std::size_t n = 1; n <= N; ++n) {
      if (!holds(n)) {
        c.passed = false;
        c.first_failure = n;
        break;
      }
    }
    report.checks.push_back(std::move(c));
  };
  check("L_n = 2 m_{n-1}", [&](std::size_t n) { return L[n] == 2 * m[n - 1]; });
  check("L_n = S_n", [&](std::size_t n) { return L[n] == S[n]; });
  check("S_n = 2 s_n", [&](std::size_t n) { return S[n] == 2 * s[n]; });
  check("s_n = m_{n-1}", [&](std::size_t n) { return s[n] == m[n - 1]; });
  return report;
}

}  // namespace schroder
