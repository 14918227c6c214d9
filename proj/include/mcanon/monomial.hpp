#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mcanon/errors.hpp"

namespace mcanon {

using Exponent = std::uint32_t;

/// Largest exponent accepted anywhere in the library (2^31 - 1).
inline constexpr Exponent kMaxExponent = 0x7fffffffu;

/// A monomial x^a, stored as its exponent vector over a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps);
    Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

    std::size_t nvars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t total_degree() const noexcept;
    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;

    /// Copy with the exponent of variable `var` replaced.
    Monomial with_exponent(std::size_t var, Exponent e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// u | v, i.e. componentwise u <= v. Throws DimensionError on length mismatch.
bool divides(const Monomial& u, const Monomial& v);

/// Least common multiple (componentwise max).
Monomial lcm(const Monomial& u, const Monomial& v);

/// Output order used everywhere: ascending total degree, ties broken so that
/// x^2 < x*y < y^2 (lexicographically larger exponent vector first).
bool deglex_less(const Monomial& u, const Monomial& v);

/// Divisibility-minimal, duplicate-free subset of `gens`, sorted by deglex_less.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// A monomial ideal given by its minimal generating set G(I).
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
    static MonomialIdeal unit(std::size_t nvars);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Monomial>& gens() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    bool contains(const Monomial& m) const;
    bool contains(std::span<const Exponent> exps) const;

    /// Every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t nvars_ = 0;
    std::vector<Monomial> gens_;
};

/// The module I/J for monomial ideals J strictly contained in I.
///
/// Construction is the only place the containment is validated; every
/// transformation in the library builds its result through this constructor.
class Factor {
public:
    Factor(MonomialIdeal numerator, MonomialIdeal denominator);
    explicit Factor(MonomialIdeal ideal) : Factor(ideal, MonomialIdeal::zero(ideal.nvars())) {}

    std::size_t nvars() const noexcept { return num_.nvars(); }
    const MonomialIdeal& numerator() const noexcept { return num_; }
    const MonomialIdeal& denominator() const noexcept { return den_; }

    /// x^a lies in I but not in J.
    bool supports(std::span<const Exponent> exps) const {
        return num_.contains(exps) && !den_.contains(exps);
    }

    friend bool operator==(const Factor&, const Factor&) = default;

private:
    MonomialIdeal num_;
    MonomialIdeal den_;
};

/// g_j = max exponent of x_j over G(I) and G(J).
std::vector<Exponent> join_exponents(const Factor& f);

bool is_squarefree(const Factor& f);

}  // namespace mcanon
