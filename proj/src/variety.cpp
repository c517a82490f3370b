#include "a2act/variety.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a2act {

std::size_t VarietyDesc::index_of(Var v) const {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw std::invalid_argument(label + ": " + table.name(v) + " is not a coordinate");
    return static_cast<std::size_t>(it - vars.begin());
}

std::vector<std::string> VarietyDesc::names() const {
    std::vector<std::string> out;
    for (Var v : vars) out.push_back(table.name(v));
    return out;
}

VarietyDesc variety(ActionCase c) {
    const auto& r = reduction(c);
    return {c, "V_" + case_name(c), r.table, r.free, r.relations};
}

namespace {

VarietyDesc restrict_to(const VarietyDesc& full, const std::vector<Var>& keep, const std::string& label) {
    VarietyDesc d{full.action_case, label, full.table, {}, {}};
    for (Var v : full.vars)
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) d.vars.push_back(v);
    for (const auto& rel : full.relations) {
        auto used = rel.variables();
        bool inside = std::all_of(used.begin(), used.end(), [&](Var v) {
            return std::find(d.vars.begin(), d.vars.end(), v) != d.vars.end();
        });
        if (inside) d.relations.push_back(rel);
    }
    return d;
}

}  // namespace

VarietyDesc sq8_subvariety(ActionCase c) {
    return restrict_to(variety(c), reduction(c).sq8_vars, "V_" + case_name(c) + " Sq8");
}

VarietyDesc sq16_subvariety(ActionCase c) {
    return restrict_to(variety(c), reduction(c).sq16_vars, "V_" + case_name(c) + " Sq16");
}

std::vector<std::uint8_t> assignment(const VarietyDesc& d, const VarietyPoint& p) {
    if (p.size() != d.vars.size())
        throw std::invalid_argument(d.label + ": point has " + std::to_string(p.size()) + " coordinates, expected " +
                                    std::to_string(d.vars.size()));
    std::vector<std::uint8_t> a(d.table.size(), 0xFF);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 1) throw std::invalid_argument("point coordinates must be 0 or 1");
        a[d.vars[i]] = p[i];
    }
    return a;
}

bool on_variety(const VarietyDesc& d, const VarietyPoint& p) {
    auto a = assignment(d, p);
    return std::none_of(d.relations.begin(), d.relations.end(), [&](const Poly& r) { return evaluate(r, a); });
}

std::vector<VarietyPoint> enumerate_points(const VarietyDesc& d) {
    const std::size_t k = d.vars.size();
    if (k > 24) throw std::invalid_argument("enumerate_points: too many coordinates");
    std::vector<VarietyPoint> out;
    for (std::uint32_t x = 0; x < (1u << k); ++x) {
        VarietyPoint p;
        p.bits.resize(k);
        for (std::size_t i = 0; i < k; ++i) p.bits[i] = (x >> (k - 1 - i)) & 1u;
        if (on_variety(d, p)) out.push_back(std::move(p));
    }
    return out;
}

VarietyPoint parse_point(const std::string& text, std::size_t expected_size) {
    VarietyPoint p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
        if (tok != "0" && tok != "1") throw std::invalid_argument("malformed point '" + text + "': entries must be 0 or 1");
        p.bits.push_back(tok == "1");
    }
    if (p.size() != expected_size)
        throw std::invalid_argument("malformed point '" + text + "': expected " + std::to_string(expected_size) +
                                    " coordinates, got " + std::to_string(p.size()));
    return p;
}

std::string format_point(const VarietyPoint& p, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += sep;
        s += static_cast<char>('0' + p[i]);
    }
    return s;
}

std::string format_table_header(const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + "]";
}

std::string format_table_row(const VarietyPoint& p, const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::string(names.at(i).size() - 1, ' ') + static_cast<char>('0' + p[i]);
    }
    return s + "]";
}

std::array<std::uint8_t, 4> affine_G(const std::array<std::uint8_t, 5>& p) {
    return {p[0], p[1], p[2], static_cast<std::uint8_t>(p[3] ^ p[4])};
}

std::array<std::uint8_t, 5> affine_F(const std::array<std::uint8_t, 4>& q) {
    const int a1 = q[0], a2 = q[1], a13 = q[2], z = q[3];
    const int f = ((z & (a2 ^ (a2 & a13))) ^ a2 ^ (a1 & a2) ^ (a1 & a13) ^ (a2 & a13)) & 1;
    return {q[0], q[1], q[2], static_cast<std::uint8_t>(z ^ f), static_cast<std::uint8_t>(f)};
}

VarietyPoint CoordinateMap::apply(const VarietyPoint& p) const {
    auto a = assignment(source, p);
    VarietyPoint out;
    for (const auto& img : images) out.bits.push_back(evaluate(img, a));
    return out;
}

namespace {

CoordinateMap make_map(std::string name, VarietyDesc src, VarietyDesc tgt,
                       const std::vector<std::pair<std::string, std::string>>& rules) {
    CoordinateMap m{std::move(name), std::move(src), std::move(tgt), {}};
    m.images.resize(m.target.vars.size());
    std::vector<bool> seen(m.target.vars.size());
    for (const auto& [t, expr] : rules) {
        auto k = m.target.index_of(t);
        m.images[k] = parse_poly(expr, m.source.table);
        seen[k] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::logic_error(m.name + ": incomplete coordinate map");
    return m;
}

}  // namespace

bool vq_member(const VarietyPoint& p) {
    static const std::size_t a60 = variety(ActionCase::General).index_of("a60");
    return p[a60] == 0;
}

std::vector<VarietyPoint> vq_points() {
    auto all = enumerate_points(variety(ActionCase::General));
    std::vector<VarietyPoint> out;
    for (auto& p : all)
        if (vq_member(p)) out.push_back(p);
    return out;
}

CoordinateMap map_sym_to_gen() {
    return make_map("incl", variety(ActionCase::Symmetric), variety(ActionCase::General),
                    {{"a1", "a1"},
                     {"a2", "a2"},
                     {"a3", "b1"},
                     {"a21", "a13"},
                     {"a47", "a23"},
                     {"a48", "a1*a2*a13 + a1*a13 + a2*a13*b1 + a2 + a13*b1 + a13 + 1"},
                     {"a60", "0"},
                     {"a61", "a1"},
                     {"a62", "a2"},
                     {"b1", "c1"},
                     {"b2", "d1"},
                     {"b3", "d2"},
                     {"b4", "d3"}});
}

CoordinateMap map_q() {
    return make_map("q", variety(ActionCase::General), variety(ActionCase::BOnly),
                    {{"a1", "a1"}, {"a2", "a2"}, {"a13", "a21"}, {"a23", "a47"}, {"c1", "b1"}});
}

CoordinateMap map_s() {
    return make_map("s", variety(ActionCase::General), variety(ActionCase::BOnly),
                    {{"a1", "a61"},
                     {"a2", "a62"},
                     {"a13", "a2 + a21 + a62"},
                     {"a23", "a1 + a47 + a61"},
                     {"c1", "b1 + a1*a62 + a2*a61"}});
}

VarietyPoint map_to_b(const CoordinateMap& m, const VarietyPoint& p) {
    if (!vq_member(p)) throw std::invalid_argument(m.name + ": point is not in V_Q (a60 = 1)");
    return m.apply(p);
}

std::vector<VarietyPoint> lift_check(const VarietyPoint& b) {
    static const CoordinateMap incl = map_sym_to_gen();
    static const CoordinateMap q = map_q();
    std::vector<VarietyPoint> out;
    for (const auto& p : enumerate_points(variety(ActionCase::Symmetric)))
        if (q.apply(incl.apply(p)) == b) out.push_back(p);
    return out;
}

}  // namespace a2act
