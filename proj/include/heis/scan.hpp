#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heis::scan {

// Exhaustive-scan kernels.  Every expensive loop in this library (cocycle
// identity checks, table enumeration, brute-force subgroup scans,
// all-pairs homomorphism verification, refinement search) is an
// independent sweep over a flat index range, so it funnels through these
// four primitives.  Each has a serial reference implementation and an
// OpenMP one; both always produce identical results, which the tests
// check and the bench tool times.  Results are deterministic regardless
// of thread count: violation searches reduce with min over the index
// range, collection sorts candidate indices ascending.

enum class Mode { serial, parallel };

inline constexpr std::uint64_t kBlock = 1024;

// Smallest index in [0, n) where ok(i) is false, or nothing.
template <typename Pred>
std::optional<std::uint64_t> first_violation_serial(std::uint64_t n, Pred&& ok) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

template <typename Pred>
std::optional<std::uint64_t> first_violation_parallel(std::uint64_t n, Pred&& ok) {
#ifdef _OPENMP
  std::atomic<std::uint64_t> best{n};
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  // Blocks whose start lies at or past the current best cannot improve the
  // minimum, so skipping them keeps the reduction exact.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t hi = std::min(n, lo + kBlock);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) break;
      if (!ok(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  }
  const std::uint64_t r = best.load();
  if (r < n) return r;
  return std::nullopt;
#else
  return first_violation_serial(n, ok);
#endif
}

template <typename Pred>
std::optional<std::uint64_t> first_violation(std::uint64_t n, Pred&& ok,
                                             Mode mode = Mode::parallel) {
  return mode == Mode::serial ? first_violation_serial(n, ok)
                              : first_violation_parallel(n, ok);
}

template <typename Pred>
bool all_ok(std::uint64_t n, Pred&& ok, Mode mode = Mode::parallel) {
  return !first_violation(n, ok, mode).has_value();
}

// Number of indices in [0, n) with match(i) true.
template <typename Pred>
std::uint64_t count_matching_serial(std::uint64_t n, Pred&& match) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (match(i)) ++c;
  return c;
}

template <typename Pred>
std::uint64_t count_matching_parallel(std::uint64_t n, Pred&& match) {
#ifdef _OPENMP
  std::uint64_t c = 0;
#pragma omp parallel for schedule(static) reduction(+ : c)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    if (match(static_cast<std::uint64_t>(i))) ++c;
  return c;
#else
  return count_matching_serial(n, match);
#endif
}

template <typename Pred>
std::uint64_t count_matching(std::uint64_t n, Pred&& match,
                             Mode mode = Mode::parallel) {
  return mode == Mode::serial ? count_matching_serial(n, match)
                              : count_matching_parallel(n, match);
}

// Ascending list of indices in [0, n) with match(i) true.
template <typename Pred>
std::vector<std::uint64_t> collect_matching_serial(std::uint64_t n, Pred&& match) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < n; ++i)
    if (match(i)) out.push_back(i);
  return out;
}

template <typename Pred>
std::vector<std::uint64_t> collect_matching_parallel(std::uint64_t n, Pred&& match) {
#ifdef _OPENMP
  std::vector<std::uint64_t> out;
#pragma omp parallel
  {
    std::vector<std::uint64_t> mine;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      if (match(static_cast<std::uint64_t>(i))) mine.push_back(static_cast<std::uint64_t>(i));
#pragma omp critical
    out.insert(out.end(), mine.begin(), mine.end());
  }
  std::sort(out.begin(), out.end());
  return out;
#else
  return collect_matching_serial(n, match);
#endif
}

template <typename Pred>
std::vector<std::uint64_t> collect_matching(std::uint64_t n, Pred&& match,
                                            Mode mode = Mode::parallel) {
  return mode == Mode::serial ? collect_matching_serial(n, match)
                              : collect_matching_parallel(n, match);
}

// Smallest index in [0, n) with match(i) true, or nothing.  The dual of
// first_violation, used by searches that want the first hit.
template <typename Pred>
std::optional<std::uint64_t> first_match(std::uint64_t n, Pred&& match,
                                         Mode mode = Mode::parallel) {
  return first_violation(
      n, [&](std::uint64_t i) { return !match(i); }, mode);
}

}  // namespace heis::scan
