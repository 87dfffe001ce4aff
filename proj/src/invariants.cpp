#include "ratk/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ratk/errors.hpp"

namespace ratk {

CycleLengthTuple::CycleLengthTuple(std::vector<long> entries)
    : entries_(std::move(entries)) {
  for (long e : entries_) {
    if (e < 1) throw ValidationError("cycle lengths must be >= 1");
  }
  std::sort(entries_.begin(), entries_.end());
}

long gcd_sum(const CycleLengthTuple& a, long n) {
  if (n < 1) throw ValidationError("gcd_sum requires n >= 1");
  long total = 0;
  for (long e : a.entries()) total += std::gcd(e, n);
  return total;
}

std::vector<long> fatou_count_sequence(const CycleLengthTuple& lengths, long n_max) {
  if (n_max < 1) throw ValidationError("fatou_count_sequence requires n_max >= 1");
  std::vector<long> out;
  out.reserve(n_max);
  for (long n = 1; n <= n_max; ++n) out.push_back(gcd_sum(lengths, n));
  return out;
}

namespace {

void enumerate_tuples(long len, long max_val, long min_entry, std::vector<long>& prefix,
                      const std::function<void(const std::vector<long>&)>& visit) {
  if (static_cast<long>(prefix.size()) == len) {
    visit(prefix);
    return;
  }
  for (long v = min_entry; v <= max_val; ++v) {
    prefix.push_back(v);
    enumerate_tuples(len, max_val, v, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

RecoverResult recover_tuple(const std::vector<long>& seq) {
  if (seq.empty() || seq[0] < 1) {
    throw ValidationError("sequence must start with the tuple length >= 1");
  }
  const long len = seq[0];  // gcd(a, 1) = 1 summed over the tuple
  const long bound = *std::max_element(seq.begin(), seq.end());

  std::vector<CycleLengthTuple> survivors;
  std::vector<long> prefix;
  enumerate_tuples(len, bound, 1, prefix, [&](const std::vector<long>& tuple) {
    CycleLengthTuple cand{std::vector<long>(tuple)};
    for (size_t i = 0; i < seq.size(); ++i) {
      if (gcd_sum(cand, static_cast<long>(i) + 1) != seq[i]) return;
    }
    survivors.push_back(std::move(cand));
  });

  RecoverResult out;
  if (survivors.empty()) {
    out.status = RecoverStatus::Inconsistent;
    return out;
  }
  if (survivors.size() == 1) {
    out.status = RecoverStatus::Unique;
    out.tuple = survivors.front();
    return out;
  }
  // A candidate whose full period fits inside the observed window has its
  // entire sequence pinned down; a lone such candidate wins over lurkers
  // whose periods extend past the data.
  const long window = static_cast<long>(seq.size());
  std::vector<CycleLengthTuple> closed;
  for (const CycleLengthTuple& cand : survivors) {
    long l = 1;
    for (long e : cand.entries()) l = std::lcm(l, e);
    if (l <= window) closed.push_back(cand);
  }
  if (closed.size() == 1) {
    out.status = RecoverStatus::Unique;
    out.tuple = closed.front();
    return out;
  }
  out.status = RecoverStatus::Ambiguous;
  out.candidates = std::move(survivors);
  return out;
}

InjectivityReport lemma_number_bruteforce(long max_len, long max_val) {
  if (max_len < 1 || max_len > 4 || max_val < 1 || max_val > 10) {
    throw ValidationError("lemma brute force is desk-scale: len <= 4, val <= 10");
  }
  long horizon = 1;
  for (long v = 2; v <= max_val; ++v) horizon = std::lcm(horizon, v);

  std::vector<CycleLengthTuple> tuples;
  for (long len = 1; len <= max_len; ++len) {
    std::vector<long> prefix;
    enumerate_tuples(len, max_val, 1, prefix, [&](const std::vector<long>& t) {
      tuples.push_back(CycleLengthTuple{std::vector<long>(t)});
    });
  }

  std::vector<std::vector<long>> signatures;
  signatures.reserve(tuples.size());
  for (const CycleLengthTuple& t : tuples) {
    signatures.push_back(fatou_count_sequence(t, horizon));
  }

  InjectivityReport report;
  report.tuple_count = static_cast<long>(tuples.size());
  report.injective = true;
  for (size_t i = 0; i < tuples.size(); ++i) {
    for (size_t j = i + 1; j < tuples.size(); ++j) {
      long first_diff = 0;  // 1-based n of the first separating index
      for (long n = 0; n < horizon; ++n) {
        if (signatures[i][n] != signatures[j][n]) {
          first_diff = n + 1;
          break;
        }
      }
      if (first_diff == 0) {
        report.injective = false;
        report.lhs_of_worst = tuples[i].entries();
        report.rhs_of_worst = tuples[j].entries();
        return report;
      }
      if (first_diff > report.max_distinguishing_n) {
        report.max_distinguishing_n = first_diff;
        report.lhs_of_worst = tuples[i].entries();
        report.rhs_of_worst = tuples[j].entries();
      }
    }
  }
  return report;
}

}  // namespace ratk
