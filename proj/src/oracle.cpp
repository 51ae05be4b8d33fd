#include "qcong/oracle.hpp"

#include <sstream>
#include <vector>

#include "qcong/qcombinatorics.hpp"

namespace qcong {

namespace {

// Row n of Pascal's triangle, built by repeated addition.
std::vector<std::vector<Integer>> pascal_rows(std::int64_t max_n) {
  std::vector<std::vector<Integer>> rows{{1}};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<Integer> row(static_cast<std::size_t>(n + 1));
    row.front() = 1;
    row.back() = 1;
    for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

Integer pascal_at(const std::vector<std::vector<Integer>>& rows, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

OracleOutcome run_oracle(std::int64_t max_n, const PolyFn2& qbinom_fn, const PolyFn2& qtrinom_fn) {
  OracleOutcome out;
  const auto rows = pascal_rows(max_n);
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.counterexample = msg;
    return out;
  };

  // expansion[j + n] is the coefficient of x^j in (1 + x + 1/x)^n.
  std::vector<Integer> expansion{1};
  for (std::int64_t n = 0; n <= max_n; ++n) {
    if (n > 0) {
      std::vector<Integer> next(expansion.size() + 2);
      for (std::size_t i = 0; i < expansion.size(); ++i) {
        next[i] += expansion[i];
        next[i + 1] += expansion[i];
        next[i + 2] += expansion[i];
      }
      expansion = std::move(next);
    }

    for (std::int64_t k = 0; k <= n; ++k) {
      const Integer got = qbinom_fn(n, k).eval_at_one();
      ++out.comparisons;
      if (got != pascal_at(rows, n, k)) {
        std::ostringstream os;
        os << "qbinom(" << n << "," << k << ") at q=1 is " << got << ", expected " << pascal_at(rows, n, k);
        return fail(os.str());
      }
    }

    for (std::int64_t j = -n; j <= n; ++j) {
      Integer by_sum = 0;
      for (std::int64_t k = 0; k <= n; ++k) by_sum += pascal_at(rows, n, k) * pascal_at(rows, n - k, k + j);
      const Integer by_expansion = expansion[static_cast<std::size_t>(j + n)];
      const LaurentPoly poly = qtrinom_fn(n, j);
      const Integer got = poly.eval_at_one();
      out.comparisons += 3;
      if (by_sum != by_expansion) {
        std::ostringstream os;
        os << "trinomial(" << n << "," << j << "): binomial sum " << by_sum << " != expansion " << by_expansion;
        return fail(os.str());
      }
      if (got != by_expansion) {
        std::ostringstream os;
        os << "qtrinom(" << n << "," << j << ") at q=1 is " << got << ", expected " << by_expansion;
        return fail(os.str());
      }
      if (j > 0 && !(poly == qtrinom_fn(n, -j))) {
        std::ostringstream os;
        os << "qtrinom(" << n << "," << j << ") != qtrinom(" << n << "," << -j << ")";
        return fail(os.str());
      }
    }
  }
  return out;
}

OracleOutcome run_oracle(std::int64_t max_n) {
  return run_oracle(
      max_n, [](std::int64_t n, std::int64_t k) { return qbinom(n, k); },
      [](std::int64_t n, std::int64_t j) { return qtrinom(n, j); });
}

}  // namespace qcong
