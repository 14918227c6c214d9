#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcanon {

/// Coefficient field K: the rationals (exact) or Z/p for a prime p.
class FieldChoice {
public:
    static FieldChoice rationals() { return FieldChoice(0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldChoice prime_field(std::uint64_t p);
    /// "q" or "p<prime>", e.g. "p32003".
    static FieldChoice parse(const std::string& spec);

    bool is_rationals() const noexcept { return prime_ == 0; }
    std::uint32_t prime() const noexcept { return prime_; }
    std::string to_string() const;

    friend bool operator==(const FieldChoice&, const FieldChoice&) = default;

private:
    explicit FieldChoice(std::uint32_t p) : prime_(p) {}
    std::uint32_t prime_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t p);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const noexcept;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact rank over the chosen field. Over the rationals this is fraction-free
/// (Bareiss) elimination; entries stay in machine integers while they fit and
/// the elimination restarts on GMP integers otherwise.
std::size_t matrix_rank(const IntMatrix& m, const FieldChoice& field);

/// Bareiss rank on arbitrary-precision integers only.
std::size_t bareiss_rank_mpz(const IntMatrix& m);

}  // namespace mcanon
