#include "mcanon/canonical_form.hpp"

#include <algorithm>
#include <string>

namespace mcanon {

namespace {

void check_var(std::size_t nvars, std::size_t var) {
    if (var >= nvars) {
        throw DimensionError("variable index " + std::to_string(var) + " out of range for " +
                             std::to_string(nvars) + " variables");
    }
}

std::vector<Exponent> sorted_powers(std::initializer_list<const MonomialIdeal*> ideals, std::size_t var) {
    std::vector<Exponent> powers;
    for (const auto* I : ideals) {
        for (const auto& g : I->gens()) {
            if (g[var] > 0) powers.push_back(g[var]);
        }
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    return powers;
}

template <typename Map>
MonomialIdeal remap_ideal(const MonomialIdeal& I, std::size_t var, Map&& map) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.with_exponent(var, map(g[var])));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

// Every map used here is strictly increasing on exponents and fixes 0, so
// divisibility between generators is preserved in both directions and the
// result must again be a valid factor.
template <typename Map>
Factor remap_factor(const Factor& f, std::size_t var, Map&& map) {
    MonomialIdeal num = remap_ideal(f.numerator(), var, map);
    MonomialIdeal den = remap_ideal(f.denominator(), var, map);
    if (num.gens().size() != f.numerator().gens().size() || den.gens().size() != f.denominator().gens().size()) {
        throw InternalError("exponent remapping merged generators");
    }
    try {
        return Factor(std::move(num), std::move(den));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("exponent remapping broke J < I: ") + e.what());
    }
}

}  // namespace

bool VariableType::is_canonical() const noexcept {
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] != i + 1) return false;
    }
    return true;
}

Exponent VariableType::rank_of(Exponent e) const {
    if (e == 0) return 0;
    auto it = std::lower_bound(powers.begin(), powers.end(), e);
    if (it == powers.end() || *it != e) {
        throw PreconditionError("exponent " + std::to_string(e) + " does not occur in the type");
    }
    return static_cast<Exponent>(it - powers.begin()) + 1;
}

VariableType type_wrt(const Factor& f, std::size_t var) {
    check_var(f.nvars(), var);
    return {var, sorted_powers({&f.numerator(), &f.denominator()}, var)};
}

VariableType type_wrt(const MonomialIdeal& ideal, std::size_t var) {
    check_var(ideal.nvars(), var);
    return {var, sorted_powers({&ideal}, var)};
}

Factor canonicalize_var(const Factor& f, std::size_t var) {
    const VariableType type = type_wrt(f, var);
    if (type.is_canonical()) return f;
    return remap_factor(f, var, [&](Exponent e) { return type.rank_of(e); });
}

Factor canonicalize(const Factor& f) {
    Factor out = f;
    for (std::size_t v = 0; v < f.nvars(); ++v) out = canonicalize_var(out, v);
    return out;
}

MonomialIdeal canonicalize(const MonomialIdeal& ideal) {
    MonomialIdeal out = ideal;
    for (std::size_t v = 0; v < ideal.nvars(); ++v) {
        const VariableType type = type_wrt(out, v);
        if (!type.is_canonical()) out = remap_ideal(out, v, [&](Exponent e) { return type.rank_of(e); });
    }
    return out;
}

bool is_canonical(const Factor& f) {
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        if (!type_wrt(f, v).is_canonical()) return false;
    }
    return true;
}

bool is_canonical(const MonomialIdeal& ideal) {
    for (std::size_t v = 0; v < ideal.nvars(); ++v) {
        if (!type_wrt(ideal, v).is_canonical()) return false;
    }
    return true;
}

std::vector<std::size_t> gap_indices(const Factor& f, std::size_t var) {
    const VariableType type = type_wrt(f, var);
    std::vector<std::size_t> gaps;
    Exponent prev = 0;
    for (std::size_t j = 0; j < type.size(); ++j) {
        if (prev + 1 < type.powers[j]) gaps.push_back(j);
        prev = type.powers[j];
    }
    return gaps;
}

Factor collapse_gap_step(const Factor& f, std::size_t var, std::size_t j) {
    const VariableType type = type_wrt(f, var);
    if (j >= type.size()) {
        throw PreconditionError("gap index " + std::to_string(j) + " out of range for type of length " +
                                std::to_string(type.size()));
    }
    const Exponent below = j == 0 ? 0 : type.powers[j - 1];
    const Exponent above = type.powers[j];
    if (below + 1 >= above) {
        throw PreconditionError("no gap between k_" + std::to_string(j) + " = " + std::to_string(below) +
                                " and k_" + std::to_string(j + 1) + " = " + std::to_string(above));
    }
    // k_i with i > j (1-based) are exactly the exponents >= k_{j+1}.
    return remap_factor(f, var, [&](Exponent e) { return e >= above ? e - 1 : e; });
}

Factor shift_transform(const Factor& f, std::size_t var, Exponent k) {
    check_var(f.nvars(), var);
    if (k == 0) throw PreconditionError("shift_transform requires k >= 1");
    for (const auto* I : {&f.numerator(), &f.denominator()}) {
        for (const auto& g : I->gens()) {
            if (g[var] >= kMaxExponent) throw std::out_of_range("shift would exceed the exponent limit");
        }
    }
    return remap_factor(f, var, [&](Exponent e) { return e >= k ? e + 1 : e; });
}

}  // namespace mcanon
