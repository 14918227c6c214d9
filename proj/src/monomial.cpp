#include "mcanon/monomial.hpp"

#include <algorithm>
#include <string>

namespace mcanon {

namespace {

void check_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionError("variable count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_) {
        if (e > kMaxExponent) {
            throw std::out_of_range("exponent " + std::to_string(e) + " exceeds 2^31-1");
        }
    }
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Monomial Monomial::with_exponent(std::size_t var, Exponent e) const {
    std::vector<Exponent> exps = exps_;
    exps.at(var) = e;
    return Monomial(std::move(exps));
}

bool divides(const Monomial& u, const Monomial& v) {
    check_same_length(u.nvars(), v.nvars());
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u[i] > v[i]) return false;
    }
    return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    check_same_length(u.nvars(), v.nvars());
    std::vector<Exponent> e(u.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u[i], v[i]);
    return Monomial(std::move(e));
}

bool deglex_less(const Monomial& u, const Monomial& v) {
    const auto du = u.total_degree();
    const auto dv = v.total_degree();
    if (du != dv) return du < dv;
    return v < u;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), deglex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // A proper divisor has strictly smaller degree, so it is already kept.
    std::vector<Monomial> kept;
    for (auto& m : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
        if (!redundant) kept.push_back(std::move(m));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens) check_same_length(nvars, g.nvars());
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
    return MonomialIdeal(nvars, {Monomial(nvars)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    check_same_length(nvars_, m.nvars());
    return contains(m.exponents());
}

bool MonomialIdeal::contains(std::span<const Exponent> exps) const {
    check_same_length(nvars_, exps.size());
    for (const auto& g : gens_) {
        bool ok = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (g[i] > exps[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_length(nvars_, other.nvars_);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

Factor::Factor(MonomialIdeal numerator, MonomialIdeal denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    check_same_length(num_.nvars(), den_.nvars());
    if (!num_.contains(den_)) {
        throw ValidationError("invalid factor: J is not contained in I");
    }
    if (den_.contains(num_)) {
        throw ValidationError("invalid factor: J equals I");
    }
}

std::vector<Exponent> join_exponents(const Factor& f) {
    std::vector<Exponent> g(f.nvars(), 0);
    for (const auto* ideal : {&f.numerator(), &f.denominator()}) {
        for (const auto& m : ideal->gens()) {
            for (std::size_t j = 0; j < g.size(); ++j) g[j] = std::max(g[j], m[j]);
        }
    }
    return g;
}

bool is_squarefree(const Factor& f) {
    auto sqf = [](const MonomialIdeal& I) {
        return std::all_of(I.gens().begin(), I.gens().end(), [](const Monomial& m) { return m.is_squarefree(); });
    };
    return sqf(f.numerator()) && sqf(f.denominator());
}

}  // namespace mcanon
