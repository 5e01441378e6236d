#include "tcfkit/cli.hpp"

#include "tcfkit/catalog.hpp"
#include "tcfkit/io.hpp"
#include "tcfkit/pipeline.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

namespace tcfkit::cli {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNonMember = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;
constexpr int kExitInternal = 1;

struct Options {
    int n = 0;
    std::string in;
    std::string out;
    std::string generators;
    std::string mode = "facets";
    bool extended = false;
    long budget_seconds = 0;
    int hypermetric_bound = 3;
    int workers = 1;
    std::string command_line;
};

std::string join_command_line(int argc, char** argv) {
    std::string out = "tcfkit";
    for (int i = 1; i < argc; ++i) {
        out += " ";
        const std::string arg = argv[i];
        out += arg.find(' ') == std::string::npos ? arg : "\"" + arg + "\"";
    }
    return out;
}

std::string preamble(const std::string& title, const Options& o) {
    std::ostringstream md;
    md << "# tcfkit " << title << "\n\n";
    md << "- command: `" << o.command_line << "`\n";
    md << "- seed: none (every stage is deterministic)\n";
    if (o.budget_seconds > 0)
        md << "- budget: " << o.budget_seconds << " s\n";
    else
        md << "- budget: unlimited\n";
    md << "- workers: " << o.workers << "\n\n";
    return md.str();
}

pipeline::Budget make_budget(const Options& o) {
    if (o.budget_seconds <= 0) return pipeline::Budget{};
    return pipeline::Budget(std::chrono::milliseconds(o.budget_seconds * 1000));
}

int guarded(const std::string& title, const Options& o, const std::function<int()>& body) {
    try {
        return body();
    } catch (const pipeline::BudgetExceeded& e) {
        std::cout << preamble(title, o) << "**PARTIAL** - budget exceeded during " << e.stage
                  << " after " << e.spent.count()
                  << " ms; results of unfinished stages were discarded.\n";
        return kExitBudget;
    }
}

std::string chi_string(const std::vector<Rational>& chi) {
    std::string out;
    for (const Rational& v : chi) {
        if (!out.empty()) out += " ";
        out += rational_str(v);
    }
    return out;
}

std::string coeff_string(const tcf::AffineInequality& q) {
    std::string out;
    for (const Integer& v : q.c) {
        if (!out.empty()) out += " ";
        out += v.str();
    }
    return out;
}

std::string b_string(const std::vector<Integer>& b) {
    if (b.empty()) return "-";
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ",";
        out += b[i].str();
    }
    return out + ")";
}

io::Json chi_json(const std::vector<Rational>& chi) {
    io::Json a = io::Json::array();
    for (const Rational& v : chi) a.push_back(rational_str(v));
    return a;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

int cmd_theta(const Options& o) {
    return guarded("theta", o, [&] {
        const pipeline::Budget budget = make_budget(o);
        std::ostringstream md;
        md << preamble("theta", o);
        std::vector<io::Json> lines;
        if (o.mode == "facets") {
            const auto h = ecf::theta_h_representation(o.n);
            md << "H-representation of the set-function polytope on " << o.n << " elements: "
               << h.rows.size() << " inequalities over " << h.coords.size() << " coordinates.\n";
            io::Json coords = io::Json::array();
            for (combinat::Subset a : h.coords) coords.push_back(combinat::subset_str(a));
            lines.push_back(io::Json{{"type", "summary"},
                                     {"command", "theta"},
                                     {"mode", "facets"},
                                     {"n", o.n},
                                     {"rows", h.rows.size()},
                                     {"coords", std::move(coords)}});
            for (std::size_t r = 0; r < h.rows.size(); ++r) {
                io::Json a = io::Json::array();
                for (const Rational& v : h.rows[r]) a.push_back(rational_str(v));
                lines.push_back(io::Json{{"type", "theta_inequality"},
                                         {"n", o.n},
                                         {"a", std::move(a)},
                                         {"rhs", rational_str(h.rhs[r])},
                                         {"label", combinat::subset_str(h.row_label[r])}});
            }
        } else {
            long count = 0;
            std::vector<io::Json> vertex_lines;
            if (o.n <= 5) {
                // double description on the alternation rows
                const auto vertices = pipeline::theta_vertices_dd(o.n);
                const auto coords = combinat::subsets_of_size_at_least(o.n, 2);
                count = (long)vertices.size();
                if (!o.out.empty())
                    for (const auto& v : vertices) {
                        ecf::SetFunction f = ecf::SetFunction::ecf_normalized_zero(o.n);
                        for (std::size_t k = 0; k < coords.size(); ++k) f.at(coords[k]) = v[k];
                        vertex_lines.push_back(io::to_json(f));
                    }
            } else {
                // the support scan is the only practical route at this size
                pipeline::for_each_theta_vertex(
                    o.n,
                    [&](const pipeline::LambdaVertex& v) {
                        ++count;
                        if (!o.out.empty())
                            vertex_lines.push_back(io::to_json(pipeline::theta_of(o.n, v)));
                    },
                    budget, o.workers);
            }
            md << "V-representation of the set-function polytope on " << o.n << " elements: "
               << count << " vertices.\n";
            lines.push_back(io::Json{{"type", "summary"},
                                     {"command", "theta"},
                                     {"mode", "vertices"},
                                     {"n", o.n},
                                     {"vertices", count}});
            for (auto& l : vertex_lines) lines.push_back(std::move(l));
        }
        if (!o.out.empty()) {
            io::write_lines(o.out, lines);
            md << "\nwrote " << lines.size() << " lines to `" << o.out << "`\n";
        }
        std::cout << md.str();
        return kExitSuccess;
    });
}

// ---------------------------------------------------------------------------
// tcf-vertices
// ---------------------------------------------------------------------------

int cmd_tcf_vertices(const Options& o) {
    return guarded("tcf-vertices", o, [&] {
        const auto summary = pipeline::tcf_vertices(o.n, make_budget(o), o.workers);
        std::ostringstream md;
        md << preamble("tcf-vertices", o);
        md << "- set-function vertices: " << summary.theta_vertices << "\n";
        md << "- distinct projections: " << summary.projected_distinct << " in "
           << summary.projected_orbits << " orbits\n";
        md << "- extreme points: " << summary.vertices << " in " << summary.orbits.size()
           << " orbits\n\n";
        std::map<std::string, std::pair<long, long>> value_split;  // value set -> orbits, points
        for (const auto& row : summary.orbits) {
            value_split[row.value_set].first += 1;
            value_split[row.value_set].second += row.orbit_length;
        }
        md << "| values | orbits | points |\n|---|---:|---:|\n";
        for (const auto& [values, counts] : value_split)
            md << "| " << values << " | " << counts.first << " | " << counts.second << " |\n";
        md << "\n| representative | orbit length | values |\n|---|---:|---|\n";
        for (const auto& row : summary.orbits)
            md << "| " << chi_string(row.representative.chi) << " | " << row.orbit_length << " | "
               << row.value_set << " |\n";
        if (!o.out.empty()) {
            std::vector<io::Json> lines;
            lines.push_back(io::Json{{"type", "summary"},
                                     {"command", "tcf-vertices"},
                                     {"n", o.n},
                                     {"theta_vertices", summary.theta_vertices},
                                     {"projected_distinct", summary.projected_distinct},
                                     {"projected_orbits", summary.projected_orbits},
                                     {"vertices", summary.vertices},
                                     {"vertex_orbits", summary.orbits.size()}});
            for (const auto& row : summary.orbits)
                lines.push_back(io::Json{{"type", "vertex_orbit"},
                                         {"n", o.n},
                                         {"representative", chi_json(row.representative.chi)},
                                         {"orbit_length", row.orbit_length},
                                         {"value_set", row.value_set}});
            for (const auto& v : pipeline::expand_vertex_orbits(summary))
                lines.push_back(io::to_json(v));
            io::write_lines(o.out, lines);
            md << "\nwrote " << lines.size() << " lines to `" << o.out << "`\n";
        }
        std::cout << md.str();
        return kExitSuccess;
    });
}

// ---------------------------------------------------------------------------
// tcf-facets
// ---------------------------------------------------------------------------

int cmd_tcf_facets(const Options& o) {
    return guarded("tcf-facets", o, [&] {
        const pipeline::Budget budget = make_budget(o);
        pipeline::FacetSummary summary;
        std::string route;
        if (o.n <= 5) {
            route = "convex hull of the computed vertices";
            summary = pipeline::tcf_facets(o.n, budget, o.workers);
        } else {
            route = "cut polytope generators, pulled back and certified";
            std::vector<tcf::AffineInequality> generators;
            if (o.generators.empty()) {
                generators = catalog::cut7_generators();
            } else {
                generators = io::read_inequalities(o.generators);
                if (generators.empty())
                    throw io::BadDocument("no inequality lines in " + o.generators);
            }
            std::vector<tcf::TcfPoint> vertices;
            if (o.in.empty()) {
                vertices = pipeline::expand_vertex_orbits(
                    pipeline::tcf_vertices(o.n, budget, o.workers));
            } else {
                vertices = io::read_points(o.in);
                if (vertices.empty()) throw io::BadDocument("no point lines in " + o.in);
            }
            try {
                summary = pipeline::tcf_facets_from_generators(generators, vertices, budget,
                                                               o.workers);
            } catch (const std::logic_error& e) {
                throw std::invalid_argument(std::string("incomplete generator set: ") + e.what());
            }
        }
        std::ostringstream md;
        md << preamble("tcf-facets", o);
        md << "- route: " << route << "\n";
        md << "- facets: " << summary.facets << " in " << summary.orbits.size() << " orbits\n";
        md << "- hypermetric: " << summary.hypermetric_facets << " facets in "
           << summary.hypermetric_orbits << " orbits\n\n";
        md << "| generator | coefficients | c0 | orbit length | tight vertices | hypermetric b "
              "|\n|---:|---|---:|---:|---:|---|\n";
        for (const auto& row : summary.orbits)
            md << "| " << (row.generator > 0 ? std::to_string(row.generator) : std::string("-"))
               << " | " << coeff_string(row.representative) << " | " << row.representative.c0
               << " | " << row.orbit_length << " | " << row.tight_vertices << " | "
               << b_string(row.b) << " |\n";
        if (!o.out.empty()) {
            std::vector<io::Json> lines;
            lines.push_back(io::Json{{"type", "summary"},
                                     {"command", "tcf-facets"},
                                     {"n", o.n},
                                     {"facets", summary.facets},
                                     {"facet_orbits", summary.orbits.size()},
                                     {"hypermetric_facets", summary.hypermetric_facets},
                                     {"hypermetric_orbits", summary.hypermetric_orbits}});
            for (const auto& row : summary.orbits) {
                io::Json j = io::to_json(row.representative);
                j["type"] = "facet_orbit";
                j["generator"] = row.generator;
                j["orbit_length"] = row.orbit_length;
                j["tight_vertices"] = row.tight_vertices;
                j["hypermetric"] = row.hypermetric;
                if (row.hypermetric) {
                    io::Json b = io::Json::array();
                    for (const Integer& v : row.b) b.push_back(v.str());
                    j["b"] = std::move(b);
                }
                lines.push_back(std::move(j));
            }
            io::write_lines(o.out, lines);
            md << "\nwrote " << lines.size() << " lines to `" << o.out << "`\n";
        }
        std::cout << md.str();
        return kExitSuccess;
    });
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int cmd_check(const Options& o) {
    return guarded("check", o, [&] {
        const tcf::TcfPoint x = io::read_point_file(o.in);
        std::ostringstream md;
        md << preamble("check", o);
        md << "- input: `" << o.in << "`, " << x.n << "x" << x.n << " matrix\n";
        md << "- pair coordinates: " << chi_string(x.chi) << "\n\n";

        const auto result = catalog::checked_membership(x);
        std::vector<io::Json> lines;
        md << "## Membership\n\n";
        if (result.member) {
            Rational kappa = result.witness_theta.at(combinat::full_mask(x.n));
            long support = 0;
            for (const Rational& w : result.witness_weights.lambda)
                if (w != 0) ++support;
            md << "verdict: **member**\n\n";
            md << "- witness set function with extremal coefficient " << rational_str(kappa)
               << "\n";
            md << "- spectral support size: " << support << "\n";
            lines.push_back(io::Json{{"type", "verdict"},
                                     {"command", "check"},
                                     {"member", true},
                                     {"n", x.n}});
            lines.push_back(io::to_json(result.witness_theta));
            lines.push_back(io::to_json(result.witness_weights));
        } else {
            md << "verdict: **non-member**\n\n";
            md << "- separating inequality"
               << (result.separator.name.empty() ? std::string{} : " `" + result.separator.name + "`")
               << ": coefficients " << coeff_string(result.separator) << ", bound "
               << result.separator.c0 << "\n";
            md << "- violation: " << rational_str(result.separator_lhs) << " > "
               << result.separator.c0 << "\n";
            lines.push_back(io::Json{{"type", "verdict"},
                                     {"command", "check"},
                                     {"member", false},
                                     {"n", x.n},
                                     {"violation", rational_str(result.separator_lhs)}});
            lines.push_back(io::to_json(result.separator));
        }

        md << "\n## Hypermetric screening (bound " << o.hypermetric_bound << ")\n\n";
        const auto scan = tcf::hypermetric_valid_check(x, o.hypermetric_bound);
        if (scan.all_satisfied) {
            md << "all hypermetric inequalities with coefficients up to the bound hold\n";
        } else {
            md << "violated for b=" << b_string(scan.violating_b) << ": "
               << rational_str(scan.lhs) << " > " << rational_str(scan.rhs) << "\n";
        }

        md << "\n## Positive semidefiniteness\n\n";
        const auto psd = tcf::is_psd(x);
        if (psd.psd) {
            md << "the matrix is positive semidefinite\n";
        } else {
            md << "not positive semidefinite: witness a=" << b_string(psd.witness)
               << " with a X a^T = " << rational_str(psd.witness_value) << "\n";
        }

        if (!o.out.empty()) {
            io::write_lines(o.out, lines);
            md << "\nwrote " << lines.size() << " lines to `" << o.out << "`\n";
        }
        std::cout << md.str();
        return result.member ? kExitSuccess : kExitNonMember;
    });
}

// ---------------------------------------------------------------------------
// realize
// ---------------------------------------------------------------------------

int cmd_realize(const Options& o) {
    return guarded("realize", o, [&] {
        const tcf::TcfPoint x = io::read_point_file(o.in);
        std::ostringstream md;
        md << preamble("realize", o);
        md << "- input: `" << o.in << "`, " << x.n << "x" << x.n << " matrix\n";
        md << "- pair coordinates: " << chi_string(x.chi) << "\n\n";
        tcf::Realization real;
        try {
            real = tcf::realize_binary(x);
        } catch (const tcf::NotAMemberError& e) {
            md << "verdict: **not realizable** (non-member)\n\n";
            md << "- separating inequality: coefficients " << coeff_string(e.separator)
               << ", bound " << e.separator.c0 << "\n";
            std::cout << md.str();
            return kExitNonMember;
        }

        long atoms = 0;
        for (const Rational& m : real.model.mass)
            if (m != 0) ++atoms;
        md << "## Model\n\n";
        md << "- extremal coefficient: " << rational_str(real.kappa) << "\n";
        md << "- common event probability: " << rational_str(real.event_probability) << "\n";
        md << "- atoms with positive mass: " << atoms << "\n\n";
        if (atoms <= 64) {
            md << "| atom | mass |\n|---|---:|\n";
            for (std::size_t a = 0; a < real.model.mass.size(); ++a)
                if (real.model.mass[a] != 0)
                    md << "| " << combinat::subset_str((combinat::Subset)a) << " | "
                       << rational_str(real.model.mass[a]) << " |\n";
            md << "\n";
        }

        // Recompute every pair coordinate from the model and compare exactly.
        combinat::EdgeIndexer ei(x.n);
        bool exact = true;
        for (int i = 1; i <= x.n && exact; ++i)
            for (int j = i + 1; j <= x.n && exact; ++j) {
                const Rational joint = real.model.joint_probability(i, j);
                if (joint != real.event_probability * x.chi[ei.pos(i, j)]) exact = false;
            }
        bool masses_ok = true;
        Rational total = 0;
        for (const Rational& m : real.model.mass) {
            if (m < 0) masses_ok = false;
            total += m;
        }
        md << "## Round-trip\n\n";
        md << "- joint probabilities reproduce the input exactly: " << (exact ? "yes" : "NO")
           << "\n";
        md << "- masses nonnegative and summing to one: "
           << (masses_ok && total == 1 ? "yes" : "NO") << "\n";

        if (!o.out.empty()) {
            std::vector<io::Json> lines;
            lines.push_back(io::Json{{"type", "summary"},
                                     {"command", "realize"},
                                     {"n", x.n},
                                     {"kappa", rational_str(real.kappa)},
                                     {"event_probability", rational_str(real.event_probability)},
                                     {"atoms", atoms}});
            lines.push_back(io::to_json(real.model));
            lines.push_back(io::to_json(real.weights));
            lines.push_back(io::to_json(real.theta));
            io::write_lines(o.out, lines);
            md << "\nwrote " << lines.size() << " lines to `" << o.out << "`\n";
        }
        std::cout << md.str();
        if (!exact || !masses_ok || total != 1)
            throw std::logic_error("realization round-trip failed");
        return kExitSuccess;
    });
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

int cmd_tables(const Options& o) {
    return guarded("tables", o, [&] {
        const pipeline::Budget budget = make_budget(o);
        const int max_n = o.extended ? 6 : 5;
        struct Column {
            int n;
            pipeline::VertexSummary vertices;
            pipeline::FacetSummary facets;
            pipeline::ThetaSummary theta;
            long theta_facet_orbits = 0;
        };
        std::vector<Column> columns;
        for (int n = 2; n <= max_n; ++n) {
            Column col;
            col.n = n;
            col.vertices = pipeline::tcf_vertices(n, budget, o.workers);
            col.facets = pipeline::tcf_facets(n, budget, o.workers);
            col.theta = pipeline::theta_summary(n, budget, o.workers);
            col.theta_facet_orbits = pipeline::theta_facet_orbits(n);
            columns.push_back(std::move(col));
        }

        const auto cell = [](long computed, long reference) {
            std::string s = std::to_string(computed);
            return computed == reference ? s + " ok"
                                         : s + " MISMATCH(ref " + std::to_string(reference) + ")";
        };
        std::ostringstream md;
        md << preamble("tables", o);
        md << "Each cell shows the computed count and whether it matches the stored "
              "reference.\n\n";
        md << "| quantity |";
        for (const auto& col : columns) md << " n=" << col.n << " |";
        md << "\n|---|";
        for (std::size_t i = 0; i < columns.size(); ++i) md << "---:|";
        md << "\n";
        const auto row = [&](const std::string& label,
                             const std::function<std::string(const Column&)>& value) {
            md << "| " << label << " |";
            for (const auto& col : columns) md << " " << value(col) << " |";
            md << "\n";
        };
        row("tail correlation vertices", [&](const Column& c) {
            return cell(c.vertices.vertices, catalog::tcf_counts(c.n).vertices);
        });
        row("tail correlation facets", [&](const Column& c) {
            return cell(c.facets.facets, catalog::tcf_counts(c.n).facets);
        });
        row("tail correlation vertex orbits", [&](const Column& c) {
            return cell((long)c.vertices.orbits.size(), catalog::tcf_counts(c.n).vertex_orbits);
        });
        row("tail correlation facet orbits", [&](const Column& c) {
            return cell((long)c.facets.orbits.size(), catalog::tcf_counts(c.n).facet_orbits);
        });
        row("set-function vertices", [&](const Column& c) {
            return cell(c.theta.vertices, catalog::theta_counts(c.n).vertices);
        });
        row("set-function facets", [&](const Column& c) {
            return cell(c.theta.facets, catalog::theta_counts(c.n).facets);
        });
        row("set-function vertex orbits", [&](const Column& c) {
            return cell(c.theta.vertex_orbits, catalog::theta_counts(c.n).vertex_orbits);
        });
        row("set-function facet orbits", [&](const Column& c) {
            return cell(c.theta_facet_orbits, catalog::theta_counts(c.n).facet_orbits);
        });
        if (!o.out.empty()) {
            io::write_file(o.out, md.str());
            md << "\nwrote the report to `" << o.out << "`\n";
        }
        std::cout << md.str();
        return kExitSuccess;
    });
}

}  // namespace

int run(int argc, char** argv) {
    Options o;
    o.command_line = join_command_line(argc, argv);

    CLI::App app{"exact computations around the polytope of tail correlation matrices"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd, bool with_n) {
        if (with_n) cmd->add_option("--n", o.n, "matrix size")->required()->check(CLI::Range(2, 6));
        cmd->add_option("--out", o.out, "output file (JSON-lines or report)");
        cmd->add_option("--budget", o.budget_seconds, "wall-clock budget in seconds");
        cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* theta = app.add_subcommand("theta", "H- or V-representation of the set-function polytope");
    add_common(theta, true);
    theta->add_option("--mode", o.mode, "facets or vertices")
        ->check(CLI::IsMember({"facets", "vertices"}));

    auto* vertices = app.add_subcommand("tcf-vertices", "vertex enumeration with orbit table");
    add_common(vertices, true);

    auto* facets = app.add_subcommand("tcf-facets", "facet enumeration with certification");
    add_common(facets, true);
    facets->add_option("--in", o.in, "vertex file from tcf-vertices (optional)");
    facets->add_option("--generators", o.generators, "generator inequalities (JSON-lines)");

    auto* check = app.add_subcommand("check", "membership test with certificates");
    add_common(check, false);
    check->add_option("--in", o.in, "matrix CSV or point JSON")->required();
    check->add_option("--hypermetric-bound", o.hypermetric_bound, "screening coefficient bound")
        ->check(CLI::PositiveNumber);

    auto* realize = app.add_subcommand("realize", "construct a binary model for a member point");
    add_common(realize, false);
    realize->add_option("--in", o.in, "matrix CSV or point JSON")->required();

    auto* tables = app.add_subcommand("tables", "reference count comparison report");
    add_common(tables, false);
    tables->add_flag("--extended", o.extended, "include the long n=6 column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitSuccess : kExitInput;
    }

    try {
        if (theta->parsed()) return cmd_theta(o);
        if (vertices->parsed()) return cmd_tcf_vertices(o);
        if (facets->parsed()) return cmd_tcf_facets(o);
        if (check->parsed()) return cmd_check(o);
        if (realize->parsed()) return cmd_realize(o);
        if (tables->parsed()) return cmd_tables(o);
        std::cerr << "no command given\n";
        return kExitInput;
    } catch (const io::MalformedMatrix& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const io::BadDocument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tcf::UnsupportedSize& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tcf::BadPoint& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tcf::BadInequality& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace tcfkit::cli
