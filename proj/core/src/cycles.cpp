#include "burnside/cycles.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

// Shared scanner: reports each cycle as a list of 1-based points.
std::vector<std::vector<int>> scan_cycles(std::string_view text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    if (i == text.size()) throw parse_error(i, "empty permutation text");
    while (i < text.size()) {
        if (text[i] != '(')
            throw parse_error(i, std::string("expected '(' but found '") + text[i] + "'");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error(i, std::string("expected a point number, found '") + text[i] + "'");
            long v = 0;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 65535) throw parse_error(start, "point out of range (max 65535)");
                ++i;
            }
            if (v == 0) throw parse_error(start, "points are 1-based; 0 is not a point");
            cycle.push_back(static_cast<int>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
                if (i < text.size() && text[i] == ')')
                    throw parse_error(i, "trailing comma in cycle");
            }
        }
        if (i == text.size()) throw parse_error(i, "unterminated cycle, missing ')'");
        ++i; // ')'
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    return cycles;
}

} // namespace

Permutation parse_cycles(std::string_view text, int degree) {
    auto cycles = scan_cycles(text);
    std::vector<Point> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<bool> moved(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (int v : cycle) {
            if (v > degree)
                throw parse_error(0, "point " + std::to_string(v) + " exceeds degree " +
                                         std::to_string(degree));
            if (moved[static_cast<std::size_t>(v - 1)])
                throw parse_error(0, "point " + std::to_string(v) + " appears twice");
            moved[static_cast<std::size_t>(v - 1)] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k] - 1;
            int to = cycle[(k + 1) % cycle.size()] - 1;
            im[static_cast<std::size_t>(from)] = static_cast<Point>(to);
        }
    }
    return Permutation(std::move(im));
}

int max_point_in_cycles(std::string_view text) {
    int mx = 0;
    for (const auto& cycle : scan_cycles(text))
        for (int v : cycle) mx = std::max(mx, v);
    return mx;
}

std::string to_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    for (int k = 0; k < p.degree(); ++k) {
        if (seen[static_cast<std::size_t>(k)] || p(static_cast<Point>(k)) == k) continue;
        out += '(';
        int c = k;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(c)] = true;
            if (!first) out += ',';
            out += std::to_string(c + 1);
            first = false;
            c = p(static_cast<Point>(c));
        } while (c != k);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

std::vector<Permutation> parse_generator_lines(const std::vector<std::string>& lines) {
    std::vector<std::string> kept;
    for (const auto& raw : lines) {
        std::string line = raw.substr(0, raw.find('#'));
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) kept.push_back(line);
    }
    if (kept.empty()) throw parse_error(0, "no permutations found");
    int degree = 1;
    for (const auto& line : kept) degree = std::max(degree, max_point_in_cycles(line));
    std::vector<Permutation> gens;
    gens.reserve(kept.size());
    for (const auto& line : kept) gens.push_back(parse_cycles(line, degree));
    return gens;
}

std::vector<Permutation> read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open generator file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return parse_generator_lines(lines);
}

} // namespace burnside
