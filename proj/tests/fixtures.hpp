#pragma once

#include "a2act/poly.hpp"
#include "a2act/polymat.hpp"
#include "a2act/variety.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef A2ACT_TEST_DATA
#error "A2ACT_TEST_DATA must point at tests/data"
#endif

namespace fixtures {

inline std::string read_file(const std::string& name) {
    std::ifstream f(std::string(A2ACT_TEST_DATA) + "/" + name);
    if (!f) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::vector<std::string> lines(const std::string& name) {
    std::vector<std::string> out;
    std::stringstream ss(read_file(name));
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

struct PointTable {
    std::vector<std::string> names;
    std::vector<a2act::VarietyPoint> points;
};

inline PointTable point_table(const std::string& name) {
    PointTable t;
    for (const auto& line : lines(name)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        if (line[0] == '#') {
            std::string tok;
            ss >> tok;
            while (ss >> tok) t.names.push_back(tok);
            continue;
        }
        a2act::VarietyPoint p;
        int b;
        while (ss >> b) p.bits.push_back(static_cast<std::uint8_t>(b));
        t.points.push_back(p);
    }
    return t;
}

struct DictRow {
    int index;
    std::string name;
    std::string value;
};

inline std::vector<DictRow> dictionary(const std::string& name) {
    std::vector<DictRow> out;
    for (const auto& line : lines(name)) {
        if (line.empty()) continue;
        auto t1 = line.find('\t'), t2 = line.find('\t', t1 + 1);
        out.push_back({std::stoi(line.substr(0, t1)), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
    }
    return out;
}

// name<TAB>expression
inline std::vector<std::pair<std::string, std::string>> formulas(const std::string& name) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& line : lines(name)) {
        if (line.empty()) continue;
        auto t = line.find('\t');
        out.emplace_back(line.substr(0, t), line.substr(t + 1));
    }
    return out;
}

// Matrix listings separated by blank lines; each block kept with its newlines.
inline std::vector<std::string> matrix_blocks(const std::string& name) {
    std::vector<std::string> out;
    std::string cur;
    for (const auto& line : lines(name)) {
        if (line.empty()) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += line + "\n";
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace fixtures

namespace fixtures {

// In F2[x]/(x^2+x) every finitely generated ideal is principal:
// (f1,...,fk) = (1 + (1+f1)...(1+fk)).
inline a2act::Poly boolean_ideal_generator(const std::vector<a2act::Poly>& gens) {
    a2act::Poly prod = a2act::Poly::one();
    for (const auto& f : gens) prod = a2act::boolean_mul(prod, a2act::boolean_nf(f) + a2act::Poly::one());
    return prod + a2act::Poly::one();
}

}  // namespace fixtures
