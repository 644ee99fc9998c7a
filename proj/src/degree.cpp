#include "ftm/degree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftm {

Degree::Degree(double v) : value_(v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("degree out of [0,1]: " + std::to_string(v));
}

std::string to_string(TNormKind kind) {
    switch (kind) {
        case TNormKind::Product: return "product";
        case TNormKind::Goedel: return "goedel";
        case TNormKind::Lukasiewicz: return "lukasiewicz";
    }
    return "?";
}

std::optional<TNormKind> tnorm_from_string(std::string_view name) {
    if (name == "product") return TNormKind::Product;
    if (name == "goedel") return TNormKind::Goedel;
    if (name == "lukasiewicz") return TNormKind::Lukasiewicz;
    return std::nullopt;
}

namespace {
double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }
}  // namespace

Degree DegreeAlgebra::tnorm(Degree da, Degree db) const {
    const double a = da.value();
    const double b = db.value();
    // Unit and zero cases first so the identity laws hold bit-exactly;
    // the level search relies on tnorm(x, 1) == x.
    if (a == 1.0) return db;
    if (b == 1.0) return da;
    if (a == 0.0 || b == 0.0) return Degree::zero();
    switch (kind_) {
        case TNormKind::Product: return Degree(clamp01(a * b));
        case TNormKind::Goedel: return Degree(std::min(a, b));
        case TNormKind::Lukasiewicz: return Degree(std::max(0.0, a + b - 1.0));
    }
    return Degree::zero();
}

Degree DegreeAlgebra::tconorm(Degree da, Degree db) const {
    const double a = da.value();
    const double b = db.value();
    if (a == 0.0) return db;
    if (b == 0.0) return da;
    if (a == 1.0 || b == 1.0) return Degree::one();
    switch (kind_) {
        case TNormKind::Product: return Degree(clamp01(a + b - a * b));
        case TNormKind::Goedel: return Degree(std::max(a, b));
        case TNormKind::Lukasiewicz: return Degree(std::min(1.0, a + b));
    }
    return Degree::one();
}

Degree DegreeAlgebra::fold_tnorm(std::span<const Degree> xs) const {
    Degree acc = Degree::one();
    for (Degree x : xs) acc = tnorm(acc, x);
    return acc;
}

std::optional<std::uint64_t> DegreeAlgebra::min_power_steps(Degree d_prime, Degree k, Degree d,
                                                            std::uint64_t cap) const {
    Degree v = d_prime;
    for (std::uint64_t i = 0; i <= cap; ++i) {
        if (v <= d) return i;
        Degree next = tnorm(v, k);
        if (next == v) return std::nullopt;  // fixed point above d; no i can work
        v = next;
    }
    return std::nullopt;
}

}  // namespace ftm
