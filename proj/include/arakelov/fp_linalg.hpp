#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace arakelov {

/// Dense row-major matrix over F_p, entries kept in [0, p).
class FpMatrix {
 public:
  /// Throws std::domain_error unless 2 <= p < 2^31.
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v mod p (v may be negative).
  void set(std::size_t r, std::size_t c, std::int64_t v);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
/// Inverse in F_p; throws std::domain_error for a == 0 mod p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Rank by Gaussian elimination; the row updates below each pivot run in
/// parallel once the matrix is large enough to pay for the fork.
std::size_t rank_mod_p(FpMatrix m);

namespace serial {
/// Reference implementation of rank_mod_p, single-threaded.
std::size_t rank_mod_p(FpMatrix m);
}  // namespace serial

}  // namespace arakelov
