#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "sgb/f5core.hpp"
#include "sgb/rational.hpp"
#include "sgb/system_io.hpp"
#include "sgb/torussolver.hpp"

namespace sgb::cli {

namespace {

struct Options {
    std::string input;
    std::string degree;
    std::vector<std::string> order;
    std::string output = "text";
    std::string var;
};

/// Order choice from --order, falling back to the file.
struct OrderChoice {
    std::optional<IntMatrix> exponent_forms;
    std::optional<TargetOrder> target;
};

OrderChoice resolve_order(const Options& opt, const SystemFile& sys, bool allow_target) {
    OrderChoice choice;
    choice.exponent_forms = sys.order_matrix;
    if (opt.order.empty()) return choice;
    const std::string& head = opt.order.front();
    if (head == "matrix") {
        if (opt.order.size() != 2) throw ParseError("--order matrix needs a file name");
        choice.exponent_forms = read_weight_matrix(opt.order[1]);
        return choice;
    }
    if (opt.order.size() != 1) throw ParseError("unexpected extra value after --order " + head);
    if (head == "lex-default") {
        choice.exponent_forms.reset();
        return choice;
    }
    if (allow_target && (head == "lex" || head == "grlex" || head == "grevlex")) {
        choice.target = parse_target_order(head);
        return choice;
    }
    throw ParseError("unknown order '" + head + "' (expected lex-default or matrix FILE" +
                     std::string(allow_target ? ", or a target order lex, grlex, grevlex)" : ")"));
}

std::vector<IntegerPolytope> newton_polytopes(const SystemFile& sys) {
    std::vector<IntegerPolytope> out;
    for (const auto& f : sys.polynomials) {
        const auto support = f.support();
        out.push_back(newton_polytope(support));
    }
    return out;
}

/// System lifted to its graded algebra plus the default degree Σ d_i.
struct Graded {
    std::unique_ptr<SystemContext> ctx;
    MultiDegree default_degree;
};

Graded graded_system(const SystemFile& sys, const std::optional<IntMatrix>& forms) {
    if (sys.polynomials.empty()) throw DimensionError("the system has no polynomials");
    PolytopeFamily family;
    std::vector<MultiDegree> degrees;
    if (!sys.polytopes.empty()) {
        std::vector<IntegerPolytope> polytopes;
        for (const auto& pts : sys.polytopes) polytopes.emplace_back(std::span<const LatticePoint>(pts));
        family = normalize_translations(std::move(polytopes));
        degrees = sys.degrees;
    } else {
        family = solver_family(newton_polytopes(sys));
        for (std::size_t i = 0; i < sys.polynomials.size(); ++i)
            degrees.push_back(unit_vector(family.size(), static_cast<Index>(i) + 1));
    }
    auto order = std::make_shared<const MonomialOrder>(forms ? weight_order(family, *forms) : default_order(family));
    std::vector<HomogeneousPolynomial> gens;
    MultiDegree total = MultiDegree::Zero(family.size());
    for (std::size_t i = 0; i < sys.polynomials.size(); ++i) {
        if (!is_nonnegative(degrees[i])) throw DimensionError("degrees must be non-negative");
        gens.push_back(homogenize(sys.polynomials[i], degrees[i], family, order));
        total += degrees[i];
    }
    return {std::make_unique<SystemContext>(std::move(family), std::move(order), std::move(gens)), total};
}

MultiDegree chosen_degree(const Options& opt, const SystemFile& sys, const MultiDegree& fallback, Index size) {
    MultiDegree d = !opt.degree.empty() ? parse_degree_list(opt.degree) : sys.degree ? *sys.degree : fallback;
    if (d.size() != size)
        throw DimensionError("degree " + to_string(d) + " has " + std::to_string(d.size()) + " entries, the family has " +
                             std::to_string(size) + " polytopes");
    if (!is_nonnegative(d)) throw DimensionError("degree entries must be non-negative");
    return d;
}

std::string monomial_name(const LatticePoint& alpha, const std::vector<std::string>& vars) {
    return format_polynomial(LaurentPolynomial::monomial(alpha), vars);
}

ExponentGreater semigroup_greater(const MonomialOrder& order) {
    return [&order](const LatticePoint& a, const LatticePoint& b) { return order.compare_exponents(a, b) > 0; };
}

ExponentGreater target_greater(TargetOrder t) {
    return [t](const LatticePoint& a, const LatticePoint& b) { return compare(t, a, b) > 0; };
}

void emit(std::ostream& out, const Options& opt, const Json& doc, const std::string& text) {
    if (opt.output == "json")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

Json stats_json(const Stats& s) {
    Json matrices = Json::array();
    for (const auto& m : s.matrices)
        matrices.push_back(Json{{"kind", m.kind},
                                {"k", m.k},
                                {"degree", lattice_point_to_json(m.degree)},
                                {"rows", m.rows},
                                {"columns", m.columns},
                                {"rank", m.rank}});
    Json counts = Json::array();
    for (const auto& [d, c] : s.lattice_counts) counts.push_back(Json{{"degree", d}, {"count", c}});
    return Json{{"rows_built", s.rows_built},
                {"zero_reductions", s.zero_reductions},
                {"eliminations", s.eliminations},
                {"matrices", std::move(matrices)},
                {"lattice_counts", std::move(counts)}};
}

std::string stats_text(const Stats& s) {
    std::ostringstream t;
    t << "eliminations: " << s.eliminations << "\nrows built: " << s.rows_built
      << "\nzero reductions: " << s.zero_reductions << "\nmatrices:\n";
    for (const auto& m : s.matrices)
        t << "  " << m.kind << " k=" << m.k << " degree " << to_string(m.degree) << ": " << m.rows << "x" << m.columns
          << " rank " << m.rank << "\n";
    t << "lattice counts:\n";
    for (const auto& [d, c] : s.lattice_counts) t << "  P" << to_string(from_std(d)) << " = " << c << "\n";
    return t.str();
}

Json basis_json(const GroebnerBasis& g, const std::vector<std::string>& vars, const ExponentGreater& greater,
                const PolytopeFamily* family) {
    Json out = Json::array();
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        Json item{{"leading", lattice_point_to_json(g.leading_exponents[i])},
                  {"polynomial", format_polynomial(g.elements[i], vars, greater)},
                  {"terms", polynomial_to_json(g.elements[i], greater)}};
        if (family) item["degree"] = element_degree(g.elements[i], *family);
        out.push_back(std::move(item));
    }
    return out;
}

int cmd_gb(const Options& opt, const SystemFile& sys, std::ostream& out) {
    const OrderChoice oc = resolve_order(opt, sys, false);
    Graded g = graded_system(sys, oc.exponent_forms);
    SystemContext& ctx = *g.ctx;
    const MultiDegree d = chosen_degree(opt, sys, g.default_degree, ctx.family().size());
    const StabilityVerdict v = gb_stability_check(ctx, d);
    const auto greater = semigroup_greater(*ctx.order());

    Integer max_degree = 0;
    for (const auto& e : v.at_degree.elements) max_degree = std::max(max_degree, element_degree(e, ctx.family()));
    const std::string verdict = v.stable ? "stable" : "increase degree";

    Json doc{{"command", "gb"},
             {"degree", lattice_point_to_json(d)},
             {"verdict", verdict},
             {"max_element_degree", max_degree},
             {"basis", basis_json(v.at_degree, sys.variables, greater, &ctx.family())}};
    std::ostringstream t;
    t << "degree " << to_string(d) << ": " << v.at_degree.elements.size() << " elements, " << verdict
      << ", max element degree " << max_degree << "\n";
    for (const auto& e : v.at_degree.elements) t << "  " << format_polynomial(e, sys.variables, greater) << "\n";
    emit(out, opt, doc, t.str());
    return 0;
}

int cmd_solve(const Options& opt, const SystemFile& sys, std::ostream& out) {
    const OrderChoice oc = resolve_order(opt, sys, true);
    const TargetOrder target = oc.target.value_or(TargetOrder::Lex);
    const SolveResult r = zero_dim_gb(sys.polynomials, target, oc.exponent_forms, sys.variables);
    const auto greater = target_greater(target);

    Json warnings = r.warnings;
    Json doc{{"command", "solve"},
             {"order", to_string(target)},
             {"variables", sys.variables},
             {"basis", basis_json(r.basis, sys.variables, greater, nullptr)},
             {"standard_monomials", r.standard_monomials.size()},
             {"mixed_volume", r.mixed_volume},
             {"matrix_size", r.matrix_size},
             {"warnings", std::move(warnings)}};
    std::ostringstream t;
    t << "basis (" << to_string(target) << "):\n";
    for (const auto& e : r.basis.elements) t << "  " << format_polynomial(e, sys.variables, greater) << "\n";
    t << "standard monomials: " << r.standard_monomials.size() << "\nmixed volume: " << r.mixed_volume
      << "\nmatrix size: " << r.matrix_size << "\n";
    for (const auto& w : r.warnings) t << "warning: " << w << "\n";
    emit(out, opt, doc, t.str());
    return 0;
}

int cmd_mulmat(const Options& opt, const SystemFile& sys, std::ostream& out) {
    if (opt.var.empty()) throw InvalidArgument("mulmat needs --var NAME");
    auto it = std::find(sys.variables.begin(), sys.variables.end(), opt.var);
    if (it == sys.variables.end()) throw InvalidArgument("unknown variable '" + opt.var + "'");
    const Index var = static_cast<Index>(it - sys.variables.begin());

    const OrderChoice oc = resolve_order(opt, sys, false);
    SolverSetup setup = make_solver_setup(sys.polynomials, oc.exponent_forms);
    SystemContext& ctx = *setup.context;
    const MonomialBasisL basis = monomial_basis_L(ctx);
    const Monomial m = variable_monomial(ctx, var);
    const HomogeneousPolynomial f0(m.degree, {{m, Rational(1)}}, ctx.order());
    const MultiplicationMap map = multiplication_matrix(ctx, basis, f0, opt.var);

    Json names = Json::array();
    for (const auto& l : basis.monomials) names.push_back(monomial_name(l.alpha, sys.variables));
    Json doc{{"command", "mulmat"}, {"variable", opt.var}, {"basis", names}, {"matrix", matrix_to_json(map.matrix)}};
    std::ostringstream t;
    t << "multiplication by " << opt.var << " on [";
    for (std::size_t j = 0; j < names.size(); ++j) t << (j ? ", " : "") << names[j].get<std::string>();
    t << "]\n";
    for (Index i = 0; i < map.matrix.rows(); ++i) {
        t << " ";
        for (Index j = 0; j < map.matrix.cols(); ++j) t << " " << to_string(map.matrix(i, j));
        t << "\n";
    }
    emit(out, opt, doc, t.str());
    return 0;
}

int cmd_mixvol(const Options& opt, const SystemFile& sys, std::ostream& out) {
    const auto polytopes = newton_polytopes(sys);
    const Integer mv = mixed_volume(polytopes);
    emit(out, opt, Json{{"command", "mixvol"}, {"mixed_volume", mv}}, std::to_string(mv) + "\n");
    return 0;
}

int cmd_points(const Options& opt, const SystemFile& sys, std::ostream& out) {
    const OrderChoice oc = resolve_order(opt, sys, false);
    Graded g = graded_system(sys, oc.exponent_forms);
    SystemContext& ctx = *g.ctx;
    if (opt.degree.empty() && !sys.degree) throw InvalidArgument("points needs --degree");
    const MultiDegree d = chosen_degree(opt, sys, g.default_degree, ctx.family().size());
    const auto& monos = ctx.monomials(d);

    Json pts = Json::array();
    std::ostringstream t;
    t << monos.size() << "\n";
    for (const auto& m : monos) {
        pts.push_back(lattice_point_to_json(m.alpha));
        t << "  " << to_string(m.alpha) << "\n";
    }
    emit(out, opt, Json{{"command", "points"}, {"degree", lattice_point_to_json(d)}, {"count", monos.size()}, {"points", pts}},
         t.str());
    return 0;
}

int cmd_stats(const Options& opt, const SystemFile& sys, std::ostream& out) {
    Stats s;
    std::string mode;
    if (!opt.degree.empty() || sys.degree || sys.polynomials.size() != static_cast<std::size_t>(sys.dim())) {
        const OrderChoice oc = resolve_order(opt, sys, false);
        Graded g = graded_system(sys, oc.exponent_forms);
        const MultiDegree d = chosen_degree(opt, sys, g.default_degree, g.ctx->family().size());
        compute_gb(*g.ctx, d);
        s = g.ctx->stats();
        mode = "gb";
    } else {
        const OrderChoice oc = resolve_order(opt, sys, true);
        s = zero_dim_gb(sys.polynomials, oc.target.value_or(TargetOrder::Lex), oc.exponent_forms, sys.variables).stats;
        mode = "solve";
    }
    Json doc{{"command", "stats"}, {"pipeline", mode}};
    doc.update(stats_json(s));
    emit(out, opt, doc, "pipeline: " + mode + "\n" + stats_text(s));
    return 0;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases over polytope semigroup algebras and sparse torus solving"};
    app.name("sgb");
    app.require_subcommand(1);
    Options opt;

    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const Options&, const SystemFile&, std::ostream&);
    };
    const Command commands[] = {
        {"gb", "Groebner basis over the semigroup algebra at a multidegree", cmd_gb},
        {"solve", "Groebner basis of the torus solutions via multiplication matrices", cmd_solve},
        {"mulmat", "exact multiplication matrix of one variable", cmd_mulmat},
        {"mixvol", "mixed volume of the Newton polytopes", cmd_mixvol},
        {"points", "lattice points of a weighted Minkowski sum", cmd_points},
        {"stats", "instrumentation counters", cmd_stats},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--input", opt.input, "system file (JSON)")->required();
        sub->add_option("--degree", opt.degree, "multidegree v1,...,vr");
        sub->add_option("--order", opt.order, "lex-default | matrix FILE (solve also: lex, grlex, grevlex)")
            ->expected(1, 2);
        sub->add_option("--output", opt.output, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--var", opt.var, "variable name for mulmat");
        subs.push_back(sub);
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const SystemFile sys = read_system_file(opt.input);
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) return commands[i].fn(opt, sys, out);
        return 1;
    } catch (const AssumptionViolation& e) {
        err << "error: assumption violated: " << e.what() << "\n";
        return 3;
    } catch (const SingularMatrixError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        err << "error: dimension: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sgb::cli
