#include "addact/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "addact/action.hpp"
#include "addact/basic_polynomials.hpp"
#include "addact/catalog.hpp"
#include "addact/groebner.hpp"
#include "addact/local_algebra.hpp"
#include "addact/parser.hpp"
#include "addact/polynomial_map.hpp"

namespace addact {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// ===== Algebra resolution =====

struct AlgebraSource {
    AlgebraPtr algebra;
    std::optional<IdealPresentation> presentation;
    std::string display;
};

bool looks_like_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string clean;
        for (char c : line) {
            if (c == '#') break;
            clean += c;
        }
        std::istringstream ls(clean);
        std::string word;
        if (ls >> word) return word == "dim";
    }
    return false;
}

AlgebraSource resolve_algebra(const std::string& spec) {
    const Catalog& cat = Catalog::instance();
    if (cat.has(spec)) {
        const CatalogEntry& e = cat.get(spec);
        return AlgebraSource{cat.algebra(spec), e.presentation, e.name};
    }

    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        const std::string path = spec.substr(1);
        std::ifstream in(path);
        if (!in) throw Error("cannot read file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    if (looks_like_table(text)) {
        AlgebraPtr a = parse_structure_table(text);
        return AlgebraSource{a, std::nullopt, "structure table"};
    }
    IdealPresentation pres = parse_presentation(text);
    AlgebraPtr a = algebra_from_presentation(pres);
    std::string display = pres.str();
    return AlgebraSource{a, std::move(pres), std::move(display)};
}

const IdealPresentation& need_presentation(const AlgebraSource& src,
                                           const std::string& op) {
    if (!src.presentation)
        throw Error(op + " needs an ideal presentation, but the algebra was "
                         "given as a structure table");
    return *src.presentation;
}

// ===== Small helpers =====

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expect) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // trim
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw Error("empty entry in '" + text + "'");
        out.push_back(Rational::from_string(item.substr(a, b - a + 1)));
    }
    if (out.size() != expect)
        throw Error("expected " + std::to_string(expect) + " comma-separated values, got " +
                    std::to_string(out.size()));
    return out;
}

std::string monomial_text(const RingPtr& ring, const Monomial& m) {
    return Polynomial::term(ring, m, Rational(1)).str();
}

MonomialOrder order_by_name(const std::string& name, std::size_t nvars) {
    if (name == "lex") return MonomialOrder::lex(nvars);
    if (name == "grlex") return MonomialOrder::grlex(nvars);
    if (name == "grevlex") return MonomialOrder::grevlex(nvars);
    throw Error("unknown monomial order '" + name + "'");
}

std::vector<std::string> matrix_row_strings(const ActionMatrix& m, std::size_t i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
    return row;
}

// ===== Verification battery =====

struct CheckResult {
    std::string name;
    bool pass;
    std::string note;
};

std::vector<CheckResult> run_battery(const AlgebraPtr& a) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& name, std::function<bool(std::string&)> fn) {
        std::string note;
        bool pass = false;
        try {
            pass = fn(note);
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        results.push_back({name, pass, note});
        return pass;
    };

    const bool axioms_ok = run("axioms", [&](std::string& note) {
        const AxiomReport rep = check_axioms(*a);
        if (!rep.all_pass()) note = rep.detail;
        return rep.all_pass();
    });
    if (!axioms_ok) return results;  // everything else presumes a real algebra

    run("filtration", [&](std::string&) { return filtration_compatible(*a); });

    const BasicPolynomials bp = basic_polynomials(a, Ring::numbered("x", a->mdim()),
                                                  /*allow_incompatible_basis=*/true);

    run("triangular", [&](std::string&) { return is_triangular(bp); });

    const SubspaceReport sub = check_basic_subspace(bp);
    run("span-dimension", [&](std::string&) { return sub.span_dimension_ok; });
    run("translation-invariance", [&](std::string&) { return sub.translation_invariant; });
    run("generation", [&](std::string&) { return sub.generates; });

    const GroupLawReport law = check_group_law(a);
    run("homomorphism", [&](std::string& note) {
        if (!law.homomorphism) note = law.detail;
        return law.homomorphism;
    });
    run("identity-at-zero", [&](std::string&) { return law.identity_at_zero; });
    run("effectiveness", [&](std::string&) { return law.effective; });

    const RingPtr yring = Ring::numbered("y", a->mdim());
    const ActionMatrix m = action_matrix(a, yring);
    run("determinant-one", [&](std::string& note) {
        const Polynomial d = det(m);
        if (d != Polynomial::one(yring)) note = "det = " + d.str();
        return d == Polynomial::one(yring);
    });
    run("unipotence", [&](std::string&) {
        return unipotent_within(m, nilpotency_index(*a));
    });

    run("exp-log-inverse", [&](std::string&) {
        const RingPtr xring = Ring::numbered("x", a->mdim());
        const GenericElement x = generic_m_element(a, xring);
        const GenericElement u = generic_unipotent(a, xring);
        return log(exp(x)) == x && exp(log(u)) == u;
    });

    run("exp-additivity", [&](std::string&) {
        const RingPtr xring = Ring::numbered("x", a->mdim());
        const RingPtr wring = Ring::numbered("w", a->mdim());
        const RingPtr u = union_ring(xring, wring);
        const GenericElement ax = embed_element(generic_m_element(a, xring), u);
        const GenericElement aw = embed_element(generic_m_element(a, wring), u);
        return exp(ax + aw) == elem_mul(exp(ax), exp(aw));
    });

    run("conjugation", [&](std::string& note) {
        const ConjugationReport rep = verify_conjugation(a);
        if (!rep.passed) note = rep.summary();
        return rep.passed;
    });

    run("inverse-via-log", [&](std::string&) {
        return phi_inverse_via_log(a) == invert_triangular(phi_from_algebra(a));
    });

    return results;
}

// ===== Subcommand implementations =====

struct Options {
    std::string algebra;
    std::string format = "text";
    std::string at;        // action-matrix --at
    std::string element;   // exp/log --element
    std::string order = "grlex";
    bool all_catalog = false;
    std::string catalog_name;  // catalog show NAME
};

int cmd_parse(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    if (opt.format == "json") {
        json j;
        if (src.presentation) {
            j["kind"] = "presentation";
            j["variables"] = json::array();
            for (const auto& v : src.presentation->ring->vars()) j["variables"].push_back(v);
            j["generators"] = json::array();
            for (const auto& g : src.presentation->generators)
                j["generators"].push_back(g.str());
            j["canonical"] = src.presentation->str();
        } else {
            j["kind"] = "structure-table";
            j["canonical"] = format_structure_table(*src.algebra);
        }
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (src.presentation)
        out << src.presentation->str() << "\n";
    else
        out << format_structure_table(*src.algebra);
    return kOk;
}

int cmd_basic_polys(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const BasicPolynomials bp = basic_polynomials(src.algebra);
    if (opt.format == "json") {
        json j;
        j["ring"] = json::array();
        for (const auto& v : bp.ring->vars()) j["ring"].push_back(v);
        j["basic_polynomials"] = json::array();
        for (const auto& f : bp.f) j["basic_polynomials"].push_back(f.str());
        out << j.dump(2) << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < bp.f.size(); ++i)
        out << "f" << (i + 1) << " = " << bp.f[i].str() << "\n";
    return kOk;
}

int cmd_action_matrix(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const std::size_t n = src.algebra->mdim();
    ActionMatrix m = [&] {
        if (!opt.at.empty()) {
            const std::vector<Rational> vals = parse_rational_list(opt.at, n);
            return action_matrix(src.algebra, std::span<const Rational>(vals));
        }
        return action_matrix(src.algebra, Ring::numbered("y", n));
    }();
    if (opt.format == "json") {
        json j;
        j["size"] = m.size();
        j["entries"] = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) j["entries"].push_back(matrix_row_strings(m, i));
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << m.str() << "\n";
    return kOk;
}

int cmd_exp(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const std::size_t n = src.algebra->mdim();
    if (!opt.element.empty()) {
        const std::vector<Rational> vals = parse_rational_list(opt.element, n);
        std::vector<Rational> coords(n + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) coords[i + 1] = vals[i];
        const AlgebraElement e = exp(AlgebraElement(src.algebra, std::move(coords)));
        if (opt.format == "json") {
            json j;
            j["coordinates"] = json::array();
            for (const auto& c : e.coords()) j["coordinates"].push_back(c.str());
            j["element"] = element_str(e);
            out << j.dump(2) << "\n";
        } else {
            out << element_str(e) << "\n";
        }
        return kOk;
    }
    const GenericElement e = exp(generic_m_element(src.algebra, Ring::numbered("x", n)));
    if (opt.format == "json") {
        json j;
        j["coordinates"] = json::array();
        for (const auto& c : e.coords()) j["coordinates"].push_back(c.str());
        j["element"] = element_str(e);
        out << j.dump(2) << "\n";
    } else {
        out << element_str(e) << "\n";
    }
    return kOk;
}

int cmd_log(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const std::size_t n = src.algebra->mdim();
    if (!opt.element.empty()) {
        const std::vector<Rational> vals = parse_rational_list(opt.element, n);
        std::vector<Rational> coords(n + 1, Rational(0));
        coords[0] = Rational(1);
        for (std::size_t i = 0; i < n; ++i) coords[i + 1] = vals[i];
        const AlgebraElement e = log(AlgebraElement(src.algebra, std::move(coords)));
        if (opt.format == "json") {
            json j;
            j["coordinates"] = json::array();
            for (const auto& c : e.coords()) j["coordinates"].push_back(c.str());
            j["element"] = element_str(e);
            out << j.dump(2) << "\n";
        } else {
            out << element_str(e) << "\n";
        }
        return kOk;
    }
    const GenericElement e = log(generic_unipotent(src.algebra, Ring::numbered("x", n)));
    if (opt.format == "json") {
        json j;
        j["coordinates"] = json::array();
        for (const auto& c : e.coords()) j["coordinates"].push_back(c.str());
        j["element"] = element_str(e);
        out << j.dump(2) << "\n";
    } else {
        out << element_str(e) << "\n";
    }
    return kOk;
}

int cmd_hilbert(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const std::vector<std::size_t> h = hilbert_function(*src.algebra);
    const std::size_t d = nilpotency_index(*src.algebra);
    if (opt.format == "json") {
        json j;
        j["dim"] = src.algebra->dim();
        j["nilpotency_index"] = d;
        j["hilbert"] = h;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "dim = " << src.algebra->dim() << "\n";
    out << "nilpotency index = " << d << "\n";
    out << "hilbert function = [";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out << ", ";
        out << h[i];
    }
    out << "]\n";
    return kOk;
}

int cmd_groebner(const Options& opt, std::ostream& out) {
    const AlgebraSource src = resolve_algebra(opt.algebra);
    const IdealPresentation& pres = need_presentation(src, "groebner");
    const MonomialOrder order = order_by_name(opt.order, pres.ring->nvars());
    const GroebnerBasis gb = buchberger(pres, order);
    const std::vector<Monomial> std_monos = quotient_basis(gb);

    if (opt.format == "json") {
        json j;
        j["order"] = opt.order;
        j["basis"] = json::array();
        for (const auto& g : gb.elements()) j["basis"].push_back(g.str());
        j["standard_monomials"] = json::array();
        for (const auto& m : std_monos)
            j["standard_monomials"].push_back(monomial_text(pres.ring, m));
        j["dimension"] = std_monos.size();
        out << j.dump(2) << "\n";
        return kOk;
    }

    out << "order = " << opt.order << "\n";
    out << "groebner basis:\n";
    for (const auto& g : gb.elements()) out << "  " << g.str() << "\n";
    out << "standard monomials: ";
    for (std::size_t i = 0; i < std_monos.size(); ++i) {
        if (i) out << ", ";
        out << monomial_text(pres.ring, std_monos[i]);
    }
    out << "\n";
    out << "quotient dimension = " << std_monos.size() << "\n";
    return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    struct Target {
        std::string name;
        AlgebraPtr algebra;
    };
    std::vector<Target> targets;
    if (opt.all_catalog) {
        for (const auto& e : Catalog::instance().entries())
            targets.push_back({e.name, Catalog::instance().algebra(e.name)});
    } else {
        if (opt.algebra.empty()) throw Error("verify needs --algebra or --all-catalog");
        const AlgebraSource src = resolve_algebra(opt.algebra);
        targets.push_back({src.display, src.algebra});
    }

    bool all_pass = true;
    json jout;
    jout["algebras"] = json::array();

    for (const auto& t : targets) {
        const std::vector<CheckResult> results = run_battery(t.algebra);
        bool pass = true;
        for (const auto& r : results) pass = pass && r.pass;
        all_pass = all_pass && pass;

        if (opt.format == "json") {
            json ja;
            ja["name"] = t.name;
            ja["dim"] = t.algebra->dim();
            ja["checks"] = json::array();
            for (const auto& r : results) {
                json jc;
                jc["name"] = r.name;
                jc["pass"] = r.pass;
                if (!r.note.empty()) jc["note"] = r.note;
                ja["checks"].push_back(jc);
            }
            ja["pass"] = pass;
            jout["algebras"].push_back(ja);
        } else {
            out << "algebra " << t.name << " (dim " << t.algebra->dim() << ")\n";
            for (const auto& r : results) {
                out << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name;
                if (!r.note.empty()) out << " -- " << r.note;
                out << "\n";
            }
            out << "  => " << (pass ? "PASS" : "FAIL") << "\n";
        }
    }

    if (opt.format == "json") {
        jout["pass"] = all_pass;
        out << jout.dump(2) << "\n";
    } else {
        out << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all_pass ? kOk : kVerifyFailed;
}

int cmd_catalog_list(const Options& opt, std::ostream& out) {
    const Catalog& cat = Catalog::instance();
    if (opt.format == "json") {
        json j;
        j["counts"] = json::object();
        for (std::size_t d = 1; d <= 6; ++d)
            j["counts"][std::to_string(d)] = *isomorphism_class_count(d);
        j["counts"]["7+"] = "infinite";
        j["exhaustive_through_dim"] = catalog_exhaustive_through_dim;
        j["entries"] = json::array();
        for (const auto& e : cat.entries()) {
            json je;
            je["name"] = e.name;
            je["dim"] = e.dim;
            je["presentation"] = e.presentation.str();
            je["provenance"] = e.provenance;
            j["entries"].push_back(je);
        }
        out << j.dump(2) << "\n";
        return kOk;
    }

    out << "isomorphism classes by dimension: ";
    for (std::size_t d = 1; d <= 6; ++d) {
        if (d > 1) out << ", ";
        out << d << ": " << *isomorphism_class_count(d);
    }
    out << ", >= 7: infinitely many\n";
    out << "coverage: every class through dim " << catalog_exhaustive_through_dim
        << "; a non-exhaustive sample for dim >= 4\n";
    out << "entries:\n";
    for (const auto& e : cat.entries()) {
        out << "  " << e.name;
        for (std::size_t pad = e.name.size(); pad < 20; ++pad) out << ' ';
        out << " dim " << e.dim << "  " << e.provenance << "\n";
    }
    return kOk;
}

int cmd_catalog_show(const Options& opt, std::ostream& out) {
    const Catalog& cat = Catalog::instance();
    const CatalogEntry& e = cat.get(opt.catalog_name);
    const AlgebraPtr a = cat.algebra(e.name);
    const std::vector<std::size_t> h = hilbert_function(*a);

    if (opt.format == "json") {
        json j;
        j["name"] = e.name;
        j["dim"] = e.dim;
        j["presentation"] = e.presentation.str();
        j["provenance"] = e.provenance;
        j["structure_table"] = format_structure_table(*a);
        j["nilpotency_index"] = nilpotency_index(*a);
        j["hilbert"] = h;
        out << j.dump(2) << "\n";
        return kOk;
    }

    out << "name: " << e.name << "\n";
    out << "dim: " << e.dim << "\n";
    out << "presentation: " << e.presentation.str() << "\n";
    out << "provenance: " << e.provenance << "\n";
    out << format_structure_table(*a);
    out << "nilpotency index = " << nilpotency_index(*a) << "\n";
    out << "hilbert function = [";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out << ", ";
        out << h[i];
    }
    out << "]\n";
    return kOk;
}

}  // namespace

// ===== Entry point =====

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for additive actions on projective space"};
    app.require_subcommand(1);

    Options opt;

    auto add_algebra_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--algebra", opt.algebra,
                                  "catalog name, inline presentation, or @file");
        if (required) o->required();
    };
    auto add_format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "echo the canonical form of an algebra description");
    add_algebra_opt(parse_cmd, true);
    add_format_opt(parse_cmd);

    CLI::App* basic_cmd = app.add_subcommand("basic-polys", "basic polynomials of the additive action");
    add_algebra_opt(basic_cmd, true);
    add_format_opt(basic_cmd);

    CLI::App* matrix_cmd = app.add_subcommand("action-matrix", "matrix of the action, symbolic or at a point");
    add_algebra_opt(matrix_cmd, true);
    add_format_opt(matrix_cmd);
    matrix_cmd->add_option("--at", opt.at, "evaluate at comma-separated rationals y1,...,yn");

    CLI::App* exp_cmd = app.add_subcommand("exp", "exponential of a maximal-ideal element");
    add_algebra_opt(exp_cmd, true);
    add_format_opt(exp_cmd);
    exp_cmd->add_option("--element", opt.element, "coordinates c1,...,cn of c1*s1 + ... + cn*sn");

    CLI::App* log_cmd = app.add_subcommand("log", "logarithm of a unipotent unit 1 + m");
    add_algebra_opt(log_cmd, true);
    add_format_opt(log_cmd);
    log_cmd->add_option("--element", opt.element, "coordinates c1,...,cn of 1 + c1*s1 + ... + cn*sn");

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "dimension, nilpotency index, Hilbert function");
    add_algebra_opt(hilbert_cmd, true);
    add_format_opt(hilbert_cmd);

    CLI::App* groebner_cmd = app.add_subcommand("groebner", "reduced basis, standard monomials, quotient dimension");
    add_algebra_opt(groebner_cmd, true);
    add_format_opt(groebner_cmd);
    groebner_cmd->add_option("--order", opt.order, "lex, grlex, or grevlex")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full verification battery");
    add_algebra_opt(verify_cmd, false);
    add_format_opt(verify_cmd);
    verify_cmd->add_flag("--all-catalog", opt.all_catalog, "verify every catalog entry");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "browse the built-in algebras");
    catalog_cmd->require_subcommand(1);
    CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "counts and entries");
    add_format_opt(list_cmd);
    CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "everything about one entry");
    show_cmd->add_option("name", opt.catalog_name, "catalog entry name")->required();
    add_format_opt(show_cmd);

    std::vector<const char*> argv;
    argv.push_back("addact");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(opt, out);
        if (basic_cmd->parsed()) return cmd_basic_polys(opt, out);
        if (matrix_cmd->parsed()) return cmd_action_matrix(opt, out);
        if (exp_cmd->parsed()) return cmd_exp(opt, out);
        if (log_cmd->parsed()) return cmd_log(opt, out);
        if (hilbert_cmd->parsed()) return cmd_hilbert(opt, out);
        if (groebner_cmd->parsed()) return cmd_groebner(opt, out);
        if (verify_cmd->parsed()) return cmd_verify(opt, out);
        if (catalog_cmd->parsed()) {
            if (list_cmd->parsed()) return cmd_catalog_list(opt, out);
            if (show_cmd->parsed()) return cmd_catalog_show(opt, out);
        }
        err << "error: no subcommand selected\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace addact
