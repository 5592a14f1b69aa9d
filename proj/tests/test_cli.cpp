#include "doctest.h"

#include "addact/cli.hpp"
#include "addact/parser.hpp"
#include "addact/polynomial.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace addact;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// A scratch file that removes itself.
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/addact-test-" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("cli basics") {
    TEST_CASE("help succeeds and usage errors are distinct") {
        CHECK(run({"--help"}).code == 0);
        CHECK(run({"basic-polys", "--help"}).code == 0);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"basic-polys"}).code == 2);  // --algebra is required
    }

    TEST_CASE("unreadable algebra file") {
        auto r = run({"basic-polys", "--algebra", "@/no/such/file.alg"});
        CHECK(r.code == 2);
        CHECK(r.err.find("cannot read file") != std::string::npos);
    }

    TEST_CASE("malformed presentations report a position") {
        auto r = run({"parse", "--algebra", "Q[S1]/(S1^3"});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 1, column 12") != std::string::npos);

        auto bad = run({"parse", "--algebra", "Z[S1]/(S1^2)"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("error:") != std::string::npos);
    }

    TEST_CASE("infinite-dimensional quotients are an input error") {
        auto r = run({"basic-polys", "--algebra", "Q[S1,S2]/(S1*S2)"});
        CHECK(r.code == 2);
        CHECK(r.err.find("infinite-dimensional") != std::string::npos);
    }
}

TEST_SUITE("cli parse") {
    TEST_CASE("echoes the canonical presentation") {
        // Whitespace is free-form and monomial factors are reordered, but
        // generator order is the author's.
        auto r = run({"parse", "--algebra", "Q[S1, S2] / (S2 * S1, S1^3 - S2^2)"});
        CHECK(r.code == 0);
        CHECK(r.out == "Q[S1,S2]/(S1*S2, S1^3 - S2^2)\n");
        // Canonical output parses back to itself.
        auto again = run({"parse", "--algebra", "Q[S1,S2]/(S1*S2, S1^3 - S2^2)"});
        CHECK(again.out == r.out);
    }

    TEST_CASE("structure tables are accepted and canonicalized") {
        TempFile f("roundtrip.table",
                   "# a comment\n"
                   "dim 3\n"
                   "basis 1 s1 s2\n"
                   "s1*s1 = s2\n");
        auto r = run({"parse", "--algebra", "@" + f.path});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("dim 3") != std::string::npos);
        CHECK(r.out.find("s1*s1 = s2") != std::string::npos);
        CHECK(r.out.find("s1*s2 = 0") != std::string::npos);  // omitted pairs made explicit

        // The canonical form feeds back in unchanged.
        TempFile f2("roundtrip2.table", r.out);
        auto r2 = run({"parse", "--algebra", "@" + f2.path});
        CHECK(r2.out == r.out);
    }

    TEST_CASE("table errors carry document line numbers") {
        TempFile f("broken.table",
                   "dim 3\n"
                   "basis 1 s1 s2\n"
                   "s1*s1 = s9\n");
        auto r = run({"parse", "--algebra", "@" + f.path});
        CHECK(r.code == 2);
        CHECK(r.err.find("unknown label 's9' (line 3") != std::string::npos);
    }
}

TEST_SUITE("cli computations") {
    TEST_CASE("basic-polys text output") {
        auto r = run({"basic-polys", "--algebra", "example-3.2"});
        CHECK(r.code == 0);
        CHECK(r.out == "f1 = x1\nf2 = 1/2*x1^2 + x2\n");
    }

    TEST_CASE("action-matrix symbolic and evaluated") {
        auto r = run({"action-matrix", "--algebra", "example-3.2"});
        CHECK(r.code == 0);
        CHECK(r.out == "1, 0, 0;\ny1, 1, 0;\n1/2*y1^2 + y2, y1, 1\n");

        auto at = run({"action-matrix", "--algebra", "example-3.2", "--at", "1,0"});
        CHECK(at.code == 0);
        CHECK(at.out == "1, 0, 0;\n1, 1, 0;\n1/2, 1, 1\n");

        auto wrong = run({"action-matrix", "--algebra", "example-3.2", "--at", "1"});
        CHECK(wrong.code == 2);
    }

    TEST_CASE("exp and log, symbolic and at an element") {
        auto symbolic = run({"exp", "--algebra", "example-3.2"});
        CHECK(symbolic.code == 0);
        CHECK(symbolic.out == "1 + x1*s1 + (1/2*x1^2 + x2)*s2\n");

        auto logsym = run({"log", "--algebra", "example-3.2"});
        CHECK(logsym.code == 0);
        CHECK(logsym.out == "x1*s1 + (-1/2*x1^2 + x2)*s2\n");

        auto at = run({"exp", "--algebra", "example-3.2", "--element", "1,1"});
        CHECK(at.code == 0);
        CHECK(at.out == "1 + s1 + 3/2*s2\n");

        auto logat = run({"log", "--algebra", "example-3.2", "--element", "1,1"});
        CHECK(logat.code == 0);
        CHECK(logat.out == "s1 + 1/2*s2\n");
    }

    TEST_CASE("hilbert invariants") {
        auto r = run({"hilbert", "--algebra", "example-3.3"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "dim = 5\n"
              "nilpotency index = 4\n"
              "hilbert function = [1, 2, 1, 1]\n");
    }

    TEST_CASE("groebner output and order flag") {
        auto r = run({"groebner", "--algebra", "example-3.3", "--order", "grlex"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "order = grlex\n"
              "groebner basis:\n"
              "  S1*S2\n"
              "  S1^3 - S2^2\n"
              "  S2^3\n"
              "standard monomials: 1, S1, S2, S1^2, S2^2\n"
              "quotient dimension = 5\n");

        CHECK(run({"groebner", "--algebra", "example-3.3", "--order", "sideways"}).code == 2);

        // A structure table has no presentation to run Buchberger on.
        TempFile f("nopres.table", "dim 2\nbasis 1 s1\n");
        auto table = run({"groebner", "--algebra", "@" + f.path});
        CHECK(table.code == 2);
        CHECK(table.err.find("presentation") != std::string::npos);
    }
}

TEST_SUITE("cli verify") {
    TEST_CASE("a healthy algebra passes every check") {
        auto r = run({"verify", "--algebra", "example-3.3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("algebra example-3.3 (dim 5)") != std::string::npos);
        CHECK(r.out.find("[PASS] conjugation") != std::string::npos);
        CHECK(r.out.find("=> PASS") != std::string::npos);
        CHECK(r.out.find("all checks passed") != std::string::npos);
        CHECK(r.out.find("FAIL]") == std::string::npos);
    }

    TEST_CASE("a corrupted table fails verification with exit code 1") {
        TempFile f("corrupt.table",
                   "dim 5\n"
                   "basis 1 s1 s2 s3 s4\n"
                   "s1*s1 = s3\n"
                   "s1*s2 = s3\n"   // corrupted: should be 0
                   "s1*s3 = s4\n"
                   "s2*s2 = s4\n");
        auto r = run({"verify", "--algebra", "@" + f.path});
        CHECK(r.code == 1);
        CHECK(r.out.find("algebra structure table (dim 5)") != std::string::npos);
        CHECK(r.out.find("[FAIL] axioms") != std::string::npos);
        CHECK(r.out.find("(s1*s1)*s2 != s1*(s1*s2)") != std::string::npos);
        CHECK(r.out.find("verification FAILED") != std::string::npos);
    }

    TEST_CASE("the whole catalog passes") {
        auto r = run({"verify", "--all-catalog"});
        CHECK(r.code == 0);
        CHECK(r.out.find("all checks passed") != std::string::npos);
        CHECK(r.out.find("FAIL") == std::string::npos);
        // One block per catalog entry.
        std::size_t blocks = 0;
        for (std::size_t pos = 0; (pos = r.out.find("algebra ", pos)) != std::string::npos;
             ++blocks, ++pos) {
        }
        CHECK(blocks == 15);
    }
}

TEST_SUITE("cli catalog") {
    TEST_CASE("list shows counts, coverage, and all entries") {
        auto r = run({"catalog", "list"});
        CHECK(r.code == 0);
        CHECK(r.out.find("1: 1, 2: 1, 3: 2, 4: 4, 5: 9, 6: 25, >= 7: infinitely many") !=
              std::string::npos);
        CHECK(r.out.find("every class through dim 3") != std::string::npos);
        CHECK(r.out.find("example-3.3") != std::string::npos);
        CHECK(r.out.find("standard-6") != std::string::npos);
    }

    TEST_CASE("show prints the full record") {
        auto r = run({"catalog", "show", "example-3.3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("Q[S1,S2]/(S1*S2, S1^3 - S2^2)") != std::string::npos);
        CHECK(r.out.find("dim 5") != std::string::npos);           // table block
        CHECK(r.out.find("s1*s1 = s3") != std::string::npos);
        CHECK(r.out.find("nilpotency index = 4") != std::string::npos);
        CHECK(run({"catalog", "show", "nonexistent"}).code == 2);
    }
}

TEST_SUITE("cli json") {
    TEST_CASE("basic-polys json matches the text output") {
        auto r = run({"basic-polys", "--algebra", "example-3.2", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("ring") == nlohmann::json::array({"x1", "x2"}));
        REQUIRE(j.at("basic_polynomials").size() == 2);
        CHECK(j.at("basic_polynomials")[0] == "x1");
        CHECK(j.at("basic_polynomials")[1] == "1/2*x1^2 + x2");

        // The JSON strings parse back to the same polynomials.
        auto ring = Ring::numbered("x", 2);
        auto f2 = parse_polynomial(j.at("basic_polynomials")[1].get<std::string>(), ring);
        auto x1 = Polynomial::variable(ring, 0);
        auto x2 = Polynomial::variable(ring, 1);
        CHECK(f2 == x1 * x1 * Rational(1, 2) + x2);
    }

    TEST_CASE("action-matrix json is a row-major grid") {
        auto r = run({"action-matrix", "--algebra", "example-3.2", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("size") == 3);
        const auto& rows = j.at("entries");
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == nlohmann::json::array({"1", "0", "0"}));
        CHECK(rows[2][0] == "1/2*y1^2 + y2");
    }

    TEST_CASE("verify json carries per-check results and an overall verdict") {
        auto r = run({"verify", "--algebra", "example-3.2", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.at("algebras").size() == 1);
        const auto& block = j.at("algebras")[0];
        CHECK(block.at("pass") == true);
        bool saw_conjugation = false;
        for (const auto& check : block.at("checks")) {
            CHECK(check.at("pass") == true);
            if (check.at("name") == "conjugation") saw_conjugation = true;
        }
        CHECK(saw_conjugation);
        CHECK(j.at("pass") == true);
    }

    TEST_CASE("hilbert json uses numbers, not strings") {
        auto r = run({"hilbert", "--algebra", "example-3.3", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("dim") == 5);
        CHECK(j.at("nilpotency_index") == 4);
        CHECK(j.at("hilbert") == nlohmann::json::array({1, 2, 1, 1}));
    }

    TEST_CASE("catalog list json enumerates entries") {
        auto r = run({"catalog", "list", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("entries").size() == 15);
        CHECK(j.at("exhaustive_through_dim") == 3);
    }
}
