#include "burnside/group_spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "burnside/cycles.hpp"
#include "burnside/errors.hpp"
#include "burnside/group_builders.hpp"
#include "burnside/json_io.hpp"

namespace burnside {

namespace {

struct Term {
    char kind = 0;                // 'S', 'A', 'C', 'D', 'E' (EA), 'I' (inv)
    int param = 0;                // n / k / order
    std::vector<int> inv_factors; // for 'I'
    std::size_t pos = 0;
};

int parse_int(const std::string& text, std::size_t& i) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error(i, "expected a number");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw parse_error(i, "parameter out of range");
        ++i;
    }
    return static_cast<int>(v);
}

Term parse_term(const std::string& text, std::size_t& i) {
    Term t;
    t.pos = i;
    if (text.compare(i, 4, "inv(") == 0) {
        t.kind = 'I';
        i += 4;
        while (true) {
            std::size_t fpos = i;
            if (i >= text.size() || text[i] != 'C')
                throw parse_error(i, "inv(...) accepts only cyclic factors like C3");
            ++i;
            int m = parse_int(text, i);
            if (m % 2 == 0 || m < 3)
                throw parse_error(fpos, "inv(...) factors must be odd and at least 3");
            t.inv_factors.push_back(m);
            if (i < text.size() && text[i] == 'x') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != ')') throw parse_error(i, "expected ')'");
        ++i;
        return t;
    }
    if (text.compare(i, 2, "EA") == 0) {
        t.kind = 'E';
        i += 2;
        t.param = parse_int(text, i);
        return t;
    }
    if (i < text.size() && (text[i] == 'S' || text[i] == 'A' || text[i] == 'C' || text[i] == 'D')) {
        t.kind = text[i];
        ++i;
        t.param = parse_int(text, i);
        std::size_t at = t.pos;
        switch (t.kind) {
        case 'S':
        case 'A':
        case 'C':
            if (t.param < 1) throw parse_error(at, "parameter must be at least 1");
            break;
        case 'D':
            if (t.param < 2 || t.param % 2 != 0)
                throw parse_error(at, "dihedral order must be even and at least 2");
            break;
        }
        return t;
    }
    throw parse_error(i, "expected a group term (S<n>, A<n>, C<n>, D<k>, EA<k> or inv(...))");
}

std::vector<Term> parse_expression(const std::string& text) {
    std::size_t i = 0;
    std::vector<Term> terms;
    terms.push_back(parse_term(text, i));
    while (i < text.size()) {
        if (text[i] != 'x') throw parse_error(i, std::string("unexpected '") + text[i] + "'");
        ++i;
        terms.push_back(parse_term(text, i));
    }
    return terms;
}

GroupPtr build_term(const Term& t, int order_cap) {
    switch (t.kind) {
    case 'S': return symmetric(t.param, order_cap);
    case 'A': return alternating(t.param, order_cap);
    case 'C': return cyclic(t.param, order_cap);
    case 'D': return dihedral(t.param, order_cap);
    case 'E': return elementary_abelian(t.param, order_cap);
    case 'I': return semidirect_inversion(t.inv_factors, order_cap);
    }
    throw error("unreachable");
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    if (text.empty()) throw parse_error(0, "empty group spec");
    GroupSpec spec;
    spec.text = text;
    if (text.rfind("perm:", 0) == 0) {
        spec.kind = GroupSpec::Kind::generator_file;
        spec.path = text.substr(5);
        if (spec.path.empty()) throw parse_error(5, "perm: needs a file path");
        return spec;
    }
    if (text.rfind("lattice:", 0) == 0) {
        spec.kind = GroupSpec::Kind::lattice_file;
        spec.path = text.substr(8);
        if (spec.path.empty()) throw parse_error(8, "lattice: needs a file path");
        return spec;
    }
    spec.kind = GroupSpec::Kind::expression;
    parse_expression(text); // validate now, build later
    return spec;
}

RealizedGroup realize_group_spec(const GroupSpec& spec, int order_cap) {
    RealizedGroup out;
    out.name = spec.text;
    switch (spec.kind) {
    case GroupSpec::Kind::generator_file: {
        auto gens = read_generator_file(spec.path);
        int degree = gens.front().degree();
        out.group = PermGroup::generate(degree, std::move(gens), order_cap);
        return out;
    }
    case GroupSpec::Kind::lattice_file: {
        std::ifstream in(spec.path);
        if (!in) throw error("cannot open lattice file: " + spec.path);
        std::stringstream buf;
        buf << in.rdbuf();
        out.lattice = lattice_from_json(buf.str(), order_cap);
        out.group = out.lattice->parent();
        return out;
    }
    case GroupSpec::Kind::expression: {
        auto terms = parse_expression(spec.text);
        GroupPtr acc = build_term(terms.front(), order_cap);
        for (std::size_t i = 1; i < terms.size(); ++i)
            acc = direct_product(*acc, *build_term(terms[i], order_cap), order_cap);
        out.group = std::move(acc);
        return out;
    }
    }
    throw error("unreachable");
}

} // namespace burnside
