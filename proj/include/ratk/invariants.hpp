#pragma once

#include <optional>
#include <vector>

namespace ratk {

/// Nondecreasing tuple of cycle lengths (all entries >= 1).
class CycleLengthTuple {
 public:
  CycleLengthTuple() = default;
  explicit CycleLengthTuple(std::vector<long> entries);  // sorts and checks

  const std::vector<long>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool operator==(const CycleLengthTuple& o) const = default;

 private:
  std::vector<long> entries_;
};

/// sum_i gcd(a_i, n)
long gcd_sum(const CycleLengthTuple& a, long n);

/// The Fatou-cycle counts of the iterates: [gcd_sum(L, 1), ..., gcd_sum(L, n_max)].
std::vector<long> fatou_count_sequence(const CycleLengthTuple& lengths, long n_max);

enum class RecoverStatus { Unique, Ambiguous, Inconsistent };

struct RecoverResult {
  RecoverStatus status;
  std::optional<CycleLengthTuple> tuple;       // set for Unique
  std::vector<CycleLengthTuple> candidates;    // survivors, for Ambiguous
};

/// Inverts the gcd-sum sequence by brute force: tuple length is seq[0],
/// entries are bounded by the largest observed value. Unique once the
/// sequence is long enough (past the lcm of the entries).
RecoverResult recover_tuple(const std::vector<long>& seq);

struct InjectivityReport {
  long tuple_count = 0;
  bool injective = false;
  long max_distinguishing_n = 0;  // worst-case first index separating a pair
  std::vector<long> lhs_of_worst, rhs_of_worst;
};

/// Exhaustively verifies that tuples (length <= max_len, entries <=
/// max_val) are separated by their gcd-sum sequences up to lcm(1..max_val),
/// and reports the hardest pair. Desk budget: max_len <= 4, max_val <= 10.
InjectivityReport lemma_number_bruteforce(long max_len, long max_val);

}  // namespace ratk
