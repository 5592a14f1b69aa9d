#pragma once

// Built-in catalog of local algebras: every isomorphism class through
// dimension 3 and named samples beyond (the classification is finite only
// through dimension 6, so the catalog is a non-exhaustive sample for
// dimension >= 4).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "addact/groebner.hpp"
#include "addact/local_algebra.hpp"

namespace addact {

struct CatalogEntry {
    std::string name;
    IdealPresentation presentation;
    std::size_t dim;          // n + 1
    std::string provenance;   // one-line description of where it comes from
};

// Isomorphism-class counts by algebra dimension; nullopt means infinitely
// many (dimension >= 7).
std::optional<unsigned> isomorphism_class_count(std::size_t dim);

// Largest dimension for which the catalog carries every class.
constexpr std::size_t catalog_exhaustive_through_dim = 3;

class Catalog {
public:
    static const Catalog& instance();

    Catalog();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry& get(const std::string& name) const;  // throws NotFoundError
    bool has(const std::string& name) const;

    // Builds (once, thread-safely) and returns the entry's algebra.
    AlgebraPtr algebra(const std::string& name) const;

private:
    std::vector<CatalogEntry> entries_;
    mutable std::mutex mu_;
    mutable std::map<std::string, AlgebraPtr> built_;
};

}  // namespace addact
