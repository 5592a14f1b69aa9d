#include "doctest.h"

#include "addact/catalog.hpp"
#include "addact/errors.hpp"
#include "addact/groebner.hpp"
#include "addact/local_algebra.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <vector>

using namespace addact;

TEST_SUITE("catalog contents") {
    TEST_CASE("entry roster") {
        const auto& c = Catalog::instance();
        CHECK(c.entries().size() == 15);
        std::set<std::string> names;
        for (const auto& e : c.entries()) names.insert(e.name);
        CHECK(names.size() == 15);
        for (const char* expected :
             {"standard-1", "standard-6", "truncated-1", "truncated-6",
              "example-3.2", "example-3.3", "dim3-square-zero"}) {
            CHECK(c.has(expected));
        }
        CHECK_FALSE(c.has("no-such-algebra"));
        CHECK_THROWS_AS(c.get("no-such-algebra"), NotFoundError);
    }

    TEST_CASE("dimensions and presentations are consistent") {
        const auto& c = Catalog::instance();
        for (const auto& e : c.entries()) {
            auto a = c.algebra(e.name);
            CHECK(a->dim() == e.dim);
            // Rebuilding from the printed presentation gives the same table.
            auto rebuilt = algebra_from_presentation(e.presentation);
            CHECK(rebuilt->dim() == a->dim());
            CHECK_FALSE(e.provenance.empty());
        }
        CHECK(c.get("standard-2").dim == 3);
        CHECK(c.get("truncated-2").dim == 3);
        CHECK(c.get("example-3.3").dim == 5);
        CHECK(c.get("example-3.2").presentation.str() == "Q[S1]/(S1^3)");
    }

    TEST_CASE("every catalog algebra is a valid local algebra") {
        const auto& c = Catalog::instance();
        for (const auto& e : c.entries()) {
            auto report = check_axioms(*c.algebra(e.name));
            CAPTURE(e.name);
            CHECK(report.all_pass());
        }
    }

    TEST_CASE("algebras are built once and shared") {
        const auto& c = Catalog::instance();
        auto first = c.algebra("example-3.3");
        auto second = c.algebra("example-3.3");
        CHECK(first == second);  // same shared_ptr, not just equal content

        // Concurrent access resolves to the same instance.
        std::vector<AlgebraPtr> seen(8);
        std::vector<std::thread> workers;
        for (std::size_t i = 0; i < seen.size(); ++i)
            workers.emplace_back([&c, &seen, i] { seen[i] = c.algebra("truncated-5"); });
        for (auto& w : workers) w.join();
        for (const auto& p : seen) CHECK(p == seen.front());
    }
}

TEST_SUITE("classification counts") {
    TEST_CASE("known counts by dimension") {
        CHECK(isomorphism_class_count(1) == 1u);
        CHECK(isomorphism_class_count(2) == 1u);
        CHECK(isomorphism_class_count(3) == 2u);
        CHECK(isomorphism_class_count(4) == 4u);
        CHECK(isomorphism_class_count(5) == 9u);
        CHECK(isomorphism_class_count(6) == 25u);
        CHECK_FALSE(isomorphism_class_count(7).has_value());   // infinitely many
        CHECK_FALSE(isomorphism_class_count(42).has_value());
    }

    TEST_CASE("the catalog is exhaustive exactly through dimension 3") {
        CHECK(catalog_exhaustive_through_dim == 3);
        const auto& c = Catalog::instance();
        // In dimensions 2 and 3 the Hilbert function is a complete
        // isomorphism invariant, so counting distinct Hilbert functions
        // among the entries counts the classes represented. (Dimension 1 is
        // the base field itself; there is nothing to act with.)
        for (std::size_t d = 2; d <= catalog_exhaustive_through_dim; ++d) {
            std::set<std::vector<std::size_t>> signatures;
            for (const auto& e : c.entries())
                if (e.dim == d) signatures.insert(hilbert_function(*c.algebra(e.name)));
            CHECK(signatures.size() == isomorphism_class_count(d).value());
        }
        // Dimension 4 has four classes but the catalog only samples them:
        // the square-zero and chain algebras are its two entries.
        std::set<std::vector<std::size_t>> dim4;
        for (const auto& e : c.entries())
            if (e.dim == 4) dim4.insert(hilbert_function(*c.algebra(e.name)));
        CHECK(dim4.size() < isomorphism_class_count(4).value());
    }

    TEST_CASE("the two dimension-3 classes are genuinely different") {
        const auto& c = Catalog::instance();
        auto chain = c.algebra("truncated-2");       // Q[S]/(S^3)
        auto square_zero = c.algebra("dim3-square-zero");
        CHECK(chain->dim() == 3);
        CHECK(square_zero->dim() == 3);
        // Distinguished by nilpotency index and Hilbert function.
        CHECK(nilpotency_index(*chain) == 3);
        CHECK(nilpotency_index(*square_zero) == 2);
        CHECK(hilbert_function(*chain) == std::vector<std::size_t>{1, 1, 1});
        CHECK(hilbert_function(*square_zero) == std::vector<std::size_t>{1, 2});
    }

    TEST_CASE("standard and truncated families have the expected invariants") {
        const auto& c = Catalog::instance();
        for (std::size_t n = 1; n <= 6; ++n) {
            auto sq = c.algebra("standard-" + std::to_string(n));
            CHECK(sq->mdim() == n);
            CHECK(nilpotency_index(*sq) == (n == 0 ? 1 : 2));
            auto tr = c.algebra("truncated-" + std::to_string(n));
            CHECK(tr->mdim() == n);
            CHECK(nilpotency_index(*tr) == n + 1);
            CHECK(hilbert_function(*tr) == std::vector<std::size_t>(n + 1, 1));
        }
        // standard-1 and truncated-1 present the same algebra.
        CHECK(hilbert_function(*c.algebra("standard-1")) ==
              hilbert_function(*c.algebra("truncated-1")));
    }
}
