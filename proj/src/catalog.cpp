#include "addact/catalog.hpp"

namespace addact {

std::optional<unsigned> isomorphism_class_count(std::size_t dim) {
    switch (dim) {
        case 1: return 1;
        case 2: return 1;
        case 3: return 2;
        case 4: return 4;
        case 5: return 9;
        case 6: return 25;
        default: return dim == 0 ? std::optional<unsigned>(0) : std::nullopt;
    }
}

namespace {

// Q[S1..Sn]/(Si*Sj for all i <= j): the square-zero maximal ideal behind
// the coordinate-translation action.
IdealPresentation standard_presentation(std::size_t n) {
    const RingPtr ring = Ring::numbered("S", n);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
    return IdealPresentation(ring, std::move(gens));
}

// Q[S1]/(S1^{n+1}): one generator of maximal nilpotency.
IdealPresentation truncated_presentation(std::size_t n) {
    const RingPtr ring = Ring::numbered("S", 1);
    const Polynomial s = Polynomial::variable(ring, 0);
    return IdealPresentation(ring, {s.pow(static_cast<std::uint32_t>(n + 1))});
}

IdealPresentation two_generator_example() {
    const RingPtr ring = Ring::numbered("S", 2);
    const Polynomial s1 = Polynomial::variable(ring, 0);
    const Polynomial s2 = Polynomial::variable(ring, 1);
    return IdealPresentation(ring, {s1 * s2, s1.pow(3) - s2.pow(2)});
}

IdealPresentation dim3_square_zero_presentation() {
    const RingPtr ring = Ring::numbered("S", 2);
    const Polynomial s1 = Polynomial::variable(ring, 0);
    const Polynomial s2 = Polynomial::variable(ring, 1);
    return IdealPresentation(ring, {s1 * s1, s1 * s2, s2 * s2});
}

}  // namespace

Catalog::Catalog() {
    for (std::size_t n = 1; n <= 6; ++n)
        entries_.push_back(CatalogEntry{
            "standard-" + std::to_string(n), standard_presentation(n), n + 1,
            "square-zero maximal ideal; the coordinate-translation action on P^" +
                std::to_string(n)});
    for (std::size_t n = 1; n <= 6; ++n)
        entries_.push_back(CatalogEntry{
            "truncated-" + std::to_string(n), truncated_presentation(n), n + 1,
            "truncated polynomial algebra Q[S1]/(S1^" + std::to_string(n + 1) +
                "); a single generator of maximal nilpotency"});
    entries_.push_back(CatalogEntry{
        "example-3.2", truncated_presentation(2), 3,
        "worked example: the smallest algebra whose action is not the "
        "coordinate translation"});
    entries_.push_back(CatalogEntry{
        "example-3.3", two_generator_example(), 5,
        "worked example: two generators with S1*S2 = 0 and S1^3 = S2^2"});
    entries_.push_back(CatalogEntry{
        "dim3-square-zero", dim3_square_zero_presentation(), 3,
        "the second of the two dimension-3 classes; all products vanish"});
}

const Catalog& Catalog::instance() {
    static const Catalog c;
    return c;
}

bool Catalog::has(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw NotFoundError("no catalog entry named '" + name + "'");
}

AlgebraPtr Catalog::algebra(const std::string& name) const {
    const CatalogEntry& entry = get(name);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = built_.find(name);
    if (it != built_.end()) return it->second;
    AlgebraPtr a = algebra_from_presentation(entry.presentation);
    built_.emplace(name, a);
    return a;
}

}  // namespace addact
