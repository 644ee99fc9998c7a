// degree.hpp - truth degrees on [0,1] and the t-norm / t-conorm algebra over them.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ftm {

// A truth degree. Construction checks the [0,1] range; every algebra
// operation keeps its result inside it.
class Degree {
public:
    constexpr Degree() = default;
    explicit Degree(double v);

    double value() const { return value_; }

    static constexpr Degree zero() { return Degree(0.0, unchecked{}); }
    static constexpr Degree one() { return Degree(1.0, unchecked{}); }

    friend auto operator<=>(Degree a, Degree b) = default;

private:
    struct unchecked {};
    constexpr Degree(double v, unchecked) : value_(v) {}
    double value_ = 0.0;
};

enum class TNormKind { Product, Goedel, Lukasiewicz };

std::string to_string(TNormKind kind);
std::optional<TNormKind> tnorm_from_string(std::string_view name);

// A t-norm together with its dual t-conorm. All three built-in kinds are
// continuous; the dual is a ∗' b = 1 - ((1-a) ∗ (1-b)).
class DegreeAlgebra {
public:
    explicit DegreeAlgebra(TNormKind kind) : kind_(kind) {}

    TNormKind kind() const { return kind_; }

    Degree tnorm(Degree a, Degree b) const;
    Degree tconorm(Degree a, Degree b) const;

    // Left fold of the t-norm; the empty sequence folds to 1.
    Degree fold_tnorm(std::span<const Degree> xs) const;

    // Least i >= 0 such that composing k onto d_prime i times by the t-norm
    // drops the value to d or below. Empty result when no i <= cap works,
    // e.g. when the composition stalls at a fixed point above d or k = 1.
    std::optional<std::uint64_t> min_power_steps(Degree d_prime, Degree k, Degree d,
                                                 std::uint64_t cap) const;

    friend bool operator==(const DegreeAlgebra&, const DegreeAlgebra&) = default;

private:
    TNormKind kind_;
};

}  // namespace ftm
