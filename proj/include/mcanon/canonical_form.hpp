#pragma once

#include <cstddef>
#include <vector>

#include "mcanon/monomial.hpp"

namespace mcanon {

/// The type (k_1, ..., k_s) of a factor with respect to one variable: the
/// distinct positive exponents of that variable among G(I) and G(J), ascending.
struct VariableType {
    std::size_t var = 0;
    std::vector<Exponent> powers;

    std::size_t size() const noexcept { return powers.size(); }
    /// powers == (1, 2, ..., s).
    bool is_canonical() const noexcept;
    /// 1-based rank of `e` among the powers, 0 for e == 0. `e` must occur.
    Exponent rank_of(Exponent e) const;

    friend bool operator==(const VariableType&, const VariableType&) = default;
};

VariableType type_wrt(const Factor& f, std::size_t var);
VariableType type_wrt(const MonomialIdeal& ideal, std::size_t var);

/// Replaces the exponent k_i of `var` by i in every generator of I and J.
Factor canonicalize_var(const Factor& f, std::size_t var);

/// canonicalize_var for every variable in ascending order.
Factor canonicalize(const Factor& f);

/// Canonical form of a single ideal; also accepts the zero ideal.
MonomialIdeal canonicalize(const MonomialIdeal& ideal);

bool is_canonical(const Factor& f);
bool is_canonical(const MonomialIdeal& ideal);

/// Gap indices j (0 <= j < s, k_0 = 0) with k_j + 1 < k_{j+1} for `var`.
std::vector<std::size_t> gap_indices(const Factor& f, std::size_t var);

/// Lowers every exponent k_i of `var` with i > j by exactly one.
/// Throws PreconditionError unless j is a gap index.
Factor collapse_gap_step(const Factor& f, std::size_t var, std::size_t j);

/// Multiplies by x_var every generator (of I and of J) whose x_var-degree is at least k.
/// Throws PreconditionError for k == 0.
Factor shift_transform(const Factor& f, std::size_t var, Exponent k);

}  // namespace mcanon
