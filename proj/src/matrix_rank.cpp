#include "mcanon/matrix_rank.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "mcanon/errors.hpp"

namespace mcanon {

namespace {

constexpr std::size_t kOverflow = static_cast<std::size_t>(-1);
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

// Fraction-free elimination: after pivot k every entry of the trailing block
// is a (k+1)-minor of the input, so dividing by the previous pivot is exact.
// `update(x, pivot, y, lead, prev)` computes (pivot*x - lead*y)/prev in place
// and returns false on overflow.
template <typename Int, typename Update>
std::size_t bareiss(std::vector<Int>& a, std::size_t rows, std::size_t cols, Update&& update) {
    auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const Int p = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int lead = at(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (!update(at(r, j), p, at(rank, j), lead, prev)) return kOverflow;
            }
            at(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank_small(const IntMatrix& m) {
    std::vector<std::int64_t> a(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) >= kSmallLimit || m(r, c) <= -kSmallLimit) return kOverflow;
            a[r * m.cols() + c] = m(r, c);
        }
    }
    return bareiss(a, m.rows(), m.cols(),
                   [](std::int64_t& x, std::int64_t p, std::int64_t y, std::int64_t lead, std::int64_t prev) {
                       const __int128 v = (static_cast<__int128>(p) * x - static_cast<__int128>(lead) * y) / prev;
                       if (v >= kSmallLimit || v <= -kSmallLimit) return false;
                       x = static_cast<std::int64_t>(v);
                       return true;
                   });
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t v = m(i / cols, i % cols) % static_cast<std::int64_t>(p);
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            const std::uint64_t f = at(r, c) * inv % p;
            for (std::size_t j = c; j < cols; ++j) {
                at(r, j) = (at(r, j) + (p - f) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

FieldChoice FieldChoice::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
    return FieldChoice(static_cast<std::uint32_t>(p));
}

FieldChoice FieldChoice::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.size() > 1 && (spec[0] == 'p' || spec[0] == 'P')) {
        const std::string digits = spec.substr(1);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10) {
            return prime_field(std::stoull(digits));
        }
    }
    throw std::invalid_argument("unknown field '" + spec + "' (expected q or p<prime>)");
}

std::string FieldChoice::to_string() const { return is_rationals() ? "q" : "p" + std::to_string(prime_); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

bool IntMatrix::is_zero() const noexcept {
    for (auto v : data_) {
        if (v != 0) return false;
    }
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t v = a(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += v * b(k, j);
        }
    }
    return out;
}

std::size_t bareiss_rank_mpz(const IntMatrix& m) {
    std::vector<mpz_class> a(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = static_cast<long>(m(r, c));
    }
    return bareiss(a, m.rows(), m.cols(),
                   [](mpz_class& x, const mpz_class& p, const mpz_class& y, const mpz_class& lead,
                      const mpz_class& prev) {
                       mpz_class t = p * x - lead * y;
                       mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                       return true;
                   });
}

std::size_t matrix_rank(const IntMatrix& m, const FieldChoice& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (!field.is_rationals()) return modular_rank(m, field.prime());
    const std::size_t r = bareiss_rank_small(m);
    return r == kOverflow ? bareiss_rank_mpz(m) : r;
}

}  // namespace mcanon
