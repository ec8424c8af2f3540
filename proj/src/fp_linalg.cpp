#include "arakelov/fp_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "arakelov/parallel.hpp"

namespace arakelov {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p >= (1U << 31)) throw std::domain_error("FpMatrix: modulus out of range");
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  const auto p = static_cast<std::int64_t>(p_);
  at(r, c) = static_cast<std::uint32_t>(((v % p) + p) % p);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(((s0 % m) + m) % m);
}

namespace {

// Eliminates column `col` from row `r` using the normalized pivot row.
void eliminate_row(FpMatrix& m, std::size_t pivot_row, std::size_t r, std::size_t col) {
  const std::uint32_t p = m.modulus();
  const std::uint32_t factor = m.at(r, col);
  if (factor == 0) return;
  const std::uint32_t neg = p - factor;
  for (std::size_t c = col; c < m.cols(); ++c)
    m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + std::uint64_t{neg} * m.at(pivot_row, c)) % p);
}

template <bool Parallel>
std::size_t rank_impl(FpMatrix m) {
  const std::uint32_t p = m.modulus();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const std::uint32_t inv = inverse_mod(m.at(rank, col), p);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(rank, c) = mul_mod(m.at(rank, c), inv, p);

    const std::size_t first = rank + 1;
    const auto below = static_cast<std::ptrdiff_t>(m.rows() - first);
    if constexpr (Parallel) {
      // Each row update touches (cols - col) entries; below ~4k entries of
      // work the fork costs more than it saves.
      const auto work = static_cast<std::ptrdiff_t>(m.cols() - col) * below;
      parallel_for(
          below, [&](std::ptrdiff_t i) { eliminate_row(m, rank, first + static_cast<std::size_t>(i), col); },
          work >= 4096 ? 2 : below + 1);
    } else {
      for (std::ptrdiff_t i = 0; i < below; ++i) eliminate_row(m, rank, first + static_cast<std::size_t>(i), col);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(FpMatrix m) { return rank_impl<true>(std::move(m)); }

namespace serial {
std::size_t rank_mod_p(FpMatrix m) { return rank_impl<false>(std::move(m)); }
}  // namespace serial

}  // namespace arakelov
