#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "burnside/cycles.hpp"
#include "burnside/errors.hpp"
#include "burnside/group_spec.hpp"
#include "burnside/json_io.hpp"
#include "burnside/units.hpp"

namespace {

using namespace burnside;

struct Options {
    std::string spec_text;
    bool json = false;
    std::string out;
    int max_order = kDefaultOrderCap;
    int oracle_cap = 20;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    bool quiet = false;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("group", opt.spec_text,
                    "group spec: S<n>, A<n>, C<n>, D<k>, EA<k>, products with 'x', "
                    "inv(C<m>x...), perm:<path>, lattice:<path>")
        ->required();
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    cmd->add_option("--max-order", opt.max_order, "group enumeration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--oracle-cap", opt.oracle_cap, "max r for the exhaustive unit search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed,
                    "randomize basis and representative choices (results must not change)");
    cmd->add_option("--jobs", opt.jobs, "worker threads for per-class work")->check(CLI::PositiveNumber);
    cmd->add_flag("--quiet", opt.quiet, "suppress stdout output");
}

void emit(const Options& opt, const std::string& payload) {
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw error("cannot write to " + opt.out);
        f << payload;
    } else if (!opt.quiet) {
        std::cout << payload;
    }
}

struct Computed {
    RealizedGroup realized;
    SubgroupClassList classes;
    MarksTable marks;
};

Computed compute_classes(const Options& opt) {
    auto spec = parse_group_spec(opt.spec_text);
    auto realized = realize_group_spec(spec, opt.max_order);
    SubgroupClassList classes =
        realized.lattice ? std::move(*realized.lattice) : class_list(realized.group);
    realized.lattice.reset();
    MarksTable marks = marks_table(classes, opt.jobs);
    return Computed{std::move(realized), std::move(classes), std::move(marks)};
}

std::string structure_hint(const Subgroup& s) {
    if (static_cast<long long>(s.parent()->element_order(
            s.indices().size() > 1 ? s.indices()[1] : 0)) == s.order() ||
        s.order() == 1)
        return "cyclic";
    return s.abelian() ? "abelian" : "nonabelian";
}

std::string group_header(const RealizedGroup& rg) {
    std::ostringstream os;
    os << "group: " << rg.name << " (order " << rg.group->order() << ", degree "
       << rg.group->degree() << ")\n";
    return os.str();
}

std::string sign_row(const SignVector& u) {
    std::string s;
    for (std::size_t i = 0; i < u.signs.size(); ++i) {
        if (i > 0) s += ' ';
        s += (u.signs[i] > 0 ? '+' : '-');
    }
    return s;
}

int cmd_units(const Options& opt) {
    auto c = compute_classes(opt);
    auto result = unit_group(c.classes, c.marks, opt.seed, opt.jobs);
    auto conj = conjecture_check(c.classes, result);
    if (opt.json) {
        emit(opt, unit_result_to_json(c.realized.name, c.classes, result, conj));
    } else {
        std::ostringstream os;
        os << group_header(c.realized);
        os << "r = " << c.classes.size() << ", rank Omega*(G) = " << result.rank << "\n";
        os << "classes by order:";
        for (int i = 0; i < c.classes.size(); ++i) os << ' ' << c.classes.rep(i).order();
        os << "\nbasis:\n";
        for (const auto& u : result.basis) os << "  " << sign_row(u) << "\n";
        os << "verified: " << (result.all_verified ? "true" : "false") << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_marks(const Options& opt) {
    auto c = compute_classes(opt);
    emit(opt, opt.json ? marks_to_json(c.classes, c.marks) : marks_to_text(c.marks));
    return 0;
}

int cmd_lattice(const Options& opt) {
    auto c = compute_classes(opt);
    if (opt.json) {
        emit(opt, lattice_to_json(c.classes));
        return 0;
    }
    std::ostringstream os;
    os << group_header(c.realized);
    os << "r = " << c.classes.size() << " conjugacy classes, " << c.classes.total_subgroups()
       << " subgroups\n";
    const PermGroup& g = *c.classes.parent();
    for (int i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes.cls(i);
        os << ' ' << (i + 1) << ": order " << cls.representative.order() << ", size " << cls.size
           << ", " << structure_hint(cls.representative) << ", generators:";
        for (int x : cls.representative.small_generating_set())
            os << ' ' << to_cycles(g.elements()[static_cast<std::size_t>(x)]);
        os << "\n";
    }
    emit(opt, os.str());
    return 0;
}

int cmd_oracle(const Options& opt) {
    auto c = compute_classes(opt);
    auto result = unit_group(c.classes, c.marks, opt.seed, opt.jobs);
    auto expected = brute_force_units(c.marks, opt.oracle_cap);
    auto produced = span_of_units(result.basis);
    bool agree = expected == produced;
    std::ostringstream os;
    if (agree) {
        os << expected.size() << " units, algorithm agrees with oracle\n";
    } else {
        os << "MISMATCH: oracle found " << expected.size() << " units, algorithm produced "
           << produced.size() << "\n";
    }
    if (opt.json) {
        nlohmann::json doc{{"group", c.realized.name},
                           {"r", c.classes.size()},
                           {"units", expected.size()},
                           {"agrees", agree}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, os.str());
    }
    return agree ? 0 : 4;
}

int cmd_conjecture(const Options& opt) {
    auto c = compute_classes(opt);
    auto result = unit_group(c.classes, c.marks, opt.seed, opt.jobs);
    auto conj = conjecture_check(c.classes, result);
    if (opt.json) {
        nlohmann::json doc{{"group", c.realized.name},
                           {"lhs", conj.lhs},
                           {"rhs", conj.rhs},
                           {"holds", conj.holds}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << conj.lhs << (conj.holds ? " <= " : " > ") << conj.rhs;
        if (!conj.holds)
            os << " (violated)";
        else if (conj.lhs == conj.rhs)
            os << " (equality)";
        else
            os << " (holds strictly)";
        os << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_all(const Options& opt) {
    auto c = compute_classes(opt);
    const PermGroup& g = *c.classes.parent();
    auto result = unit_group(c.classes, c.marks, opt.seed, opt.jobs);
    auto conj = conjecture_check(c.classes, result);

    nlohmann::json doc;
    doc["group"] = c.realized.name;
    doc["order"] = g.order();
    doc["degree"] = g.degree();
    doc["r"] = c.classes.size();
    doc["subgroups"] = c.classes.total_subgroups();

    nlohmann::json cls = nlohmann::json::array();
    for (int i = 0; i < c.classes.size(); ++i) {
        nlohmann::json gens = nlohmann::json::array();
        for (int x : c.classes.rep(i).small_generating_set())
            gens.push_back(to_cycles(g.elements()[static_cast<std::size_t>(x)]));
        cls.push_back(nlohmann::json{{"order", c.classes.rep(i).order()},
                                     {"size", c.classes.cls(i).size},
                                     {"structure", structure_hint(c.classes.rep(i))},
                                     {"generators", std::move(gens)}});
    }
    doc["classes"] = std::move(cls);

    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < c.marks.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j <= i; ++j) row.push_back(c.marks.entry(i, j));
        rows.push_back(std::move(row));
    }
    doc["marks"] = std::move(rows);

    nlohmann::json basis = nlohmann::json::array();
    for (const auto& u : result.basis) {
        nlohmann::json row = nlohmann::json::array();
        for (auto s : u.signs) row.push_back(static_cast<int>(s));
        basis.push_back(std::move(row));
    }
    doc["rank"] = result.rank;
    doc["basis"] = std::move(basis);
    doc["verified"] = result.all_verified;
    doc["omega2_dim"] = omega2_dim(c.classes);
    doc["conjecture"] = nlohmann::json{{"lhs", conj.lhs}, {"rhs", conj.rhs}, {"holds", conj.holds}};

    bool oracle_possible = c.classes.size() <= opt.oracle_cap;
    bool agrees = true;
    if (oracle_possible) {
        auto expected = brute_force_units(c.marks, opt.oracle_cap);
        agrees = expected == span_of_units(result.basis);
        doc["oracle"] =
            nlohmann::json{{"checked", true}, {"units", expected.size()}, {"agrees", agrees}};
    } else {
        doc["oracle"] = nlohmann::json{{"checked", false}};
    }

    emit(opt, doc.dump(2) + "\n");
    return agrees ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit groups of Burnside rings of small finite groups"};
    app.require_subcommand(1);

    Options opt;
    auto* units = app.add_subcommand("units", "rank and basis of the unit group");
    auto* marks = app.add_subcommand("marks", "table of marks");
    auto* lattice = app.add_subcommand("lattice", "conjugacy classes of subgroups");
    auto* oracle = app.add_subcommand("oracle", "cross-check units against the exhaustive search");
    auto* conjecture = app.add_subcommand("conjecture", "rank bound against the dimension of the pair ring");
    auto* all = app.add_subcommand("all", "full JSON report");
    for (auto* cmd : {units, marks, lattice, oracle, conjecture, all}) add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (units->parsed()) return cmd_units(opt);
        if (marks->parsed()) return cmd_marks(opt);
        if (lattice->parsed()) return cmd_lattice(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (conjecture->parsed()) return cmd_conjecture(opt);
        if (all->parsed()) return cmd_all(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return 1;
    } catch (const order_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const oracle_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const lattice_error& e) {
        std::cerr << "lattice error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
