#include "burnside/json_io.hpp"

#include <json.hpp>

#include "burnside/cycles.hpp"
#include "burnside/errors.hpp"

namespace burnside {

using nlohmann::json;

std::string lattice_to_json(const SubgroupClassList& classes) {
    const PermGroup& g = *classes.parent();
    json doc;
    doc["degree"] = g.degree();
    json gens = json::array();
    for (const auto& p : g.generators()) gens.push_back(to_cycles(p));
    doc["generators"] = std::move(gens);
    json cls = json::array();
    for (int i = 0; i < classes.size(); ++i) {
        const Subgroup& rep = classes.rep(i);
        json elems = json::array();
        for (int x : rep.indices()) elems.push_back(to_cycles(g.elements()[static_cast<std::size_t>(x)]));
        cls.push_back(json{{"order", rep.order()}, {"representative", std::move(elems)}});
    }
    doc["classes"] = std::move(cls);
    return doc.dump(2) + "\n";
}

SubgroupClassList lattice_from_json(const std::string& json_text, int order_cap) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw lattice_error(std::string("invalid lattice JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators") ||
        !doc.contains("classes"))
        throw lattice_error("lattice JSON needs degree, generators and classes");

    const int degree = doc["degree"].get<int>();
    std::vector<Permutation> gens;
    for (const auto& s : doc["generators"]) gens.push_back(parse_cycles(s.get<std::string>(), degree));
    GroupPtr g = PermGroup::generate(degree, std::move(gens), order_cap);

    std::vector<Subgroup> reps;
    for (const auto& entry : doc["classes"]) {
        std::vector<int> indices;
        for (const auto& s : entry["representative"]) {
            Permutation p = parse_cycles(s.get<std::string>(), degree);
            int idx = g->index_of(p);
            if (idx < 0) throw lattice_error("representative element is not in the group");
            indices.push_back(idx);
        }
        Subgroup rep(g, std::move(indices)); // validating constructor
        if (entry.contains("order") && entry["order"].get<long long>() != rep.order())
            throw lattice_error("declared class order does not match the representative");
        reps.push_back(std::move(rep));
    }
    return SubgroupClassList::from_representatives(g, std::move(reps));
}

std::string marks_to_json(const SubgroupClassList& classes, const MarksTable& marks) {
    const PermGroup& g = *classes.parent();
    json cls = json::array();
    for (int i = 0; i < classes.size(); ++i) {
        json gen_strs = json::array();
        for (int x : classes.rep(i).small_generating_set())
            gen_strs.push_back(to_cycles(g.elements()[static_cast<std::size_t>(x)]));
        cls.push_back(json{{"order", classes.rep(i).order()},
                           {"size", classes.cls(i).size},
                           {"generators", std::move(gen_strs)}});
    }
    json rows = json::array();
    for (int i = 0; i < marks.size(); ++i) {
        json row = json::array();
        for (int j = 0; j <= i; ++j) row.push_back(marks.entry(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"classes", std::move(cls)}, {"rows", std::move(rows)}}.dump(2) + "\n";
}

std::string unit_result_to_json(const std::string& group_name, const SubgroupClassList& classes,
                                const UnitGroupResult& result,
                                const std::optional<ConjectureReport>& conjecture) {
    json basis = json::array();
    for (const auto& u : result.basis) {
        json row = json::array();
        for (auto s : u.signs) row.push_back(static_cast<int>(s));
        basis.push_back(std::move(row));
    }
    json doc{{"group", group_name},
             {"r", classes.size()},
             {"rank", result.rank},
             {"basis", std::move(basis)},
             {"verified", result.all_verified}};
    if (conjecture)
        doc["conjecture"] =
            json{{"lhs", conjecture->lhs}, {"rhs", conjecture->rhs}, {"holds", conjecture->holds}};
    return doc.dump(2) + "\n";
}

} // namespace burnside
