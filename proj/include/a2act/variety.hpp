#pragma once

#include "a2act/pipeline.hpp"
#include "a2act/poly.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace a2act {

struct VarietyDesc {
    ActionCase action_case = ActionCase::Symmetric;
    std::string label;
    VarTable table;
    std::vector<Var> vars;  // coordinate order, ascending table order
    std::vector<Poly> relations;

    std::size_t index_of(Var v) const;  // throws if v is not a coordinate
    std::size_t index_of(std::string_view name) const { return index_of(table.at(name)); }
    std::vector<std::string> names() const;
};

struct VarietyPoint {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits.at(i); }
    auto operator<=>(const VarietyPoint&) const = default;
};

// Full variety of a case (all free variables and residual relations).
VarietyDesc variety(ActionCase c);
// Factor cut out by the Sq^8 (resp. Sq^16) coordinates.
VarietyDesc sq8_subvariety(ActionCase c);
VarietyDesc sq16_subvariety(ActionCase c);

bool on_variety(const VarietyDesc& d, const VarietyPoint& p);
std::vector<VarietyPoint> enumerate_points(const VarietyDesc& d);

// Table-indexed 0/1 assignment, 0xFF for variables that are not coordinates.
std::vector<std::uint8_t> assignment(const VarietyDesc& d, const VarietyPoint& p);

VarietyPoint parse_point(const std::string& text, std::size_t expected_size);  // "0,1,0"; throws
std::string format_point(const VarietyPoint& p, const std::string& sep = ",");
// Table row: "[ 0, 1,  0]" with every column right-aligned under its name.
std::string format_table_row(const VarietyPoint& p, const std::vector<std::string>& names);
std::string format_table_header(const std::vector<std::string>& names);

// Parameterisation of the symmetric Sq^8 variety by F2^4.
std::array<std::uint8_t, 4> affine_G(const std::array<std::uint8_t, 5>& p);
std::array<std::uint8_t, 5> affine_F(const std::array<std::uint8_t, 4>& q);

// Pullback description: target coordinate k is images[k] evaluated on the source point.
struct CoordinateMap {
    std::string name;
    VarietyDesc source;
    VarietyDesc target;
    std::vector<Poly> images;  // over source.table, one per target coordinate

    VarietyPoint apply(const VarietyPoint& p) const;
};

bool vq_member(const VarietyPoint& general_point);
std::vector<VarietyPoint> vq_points();

CoordinateMap map_sym_to_gen();
// Both require vq_member on the argument when applied through map_to_b.
CoordinateMap map_q();
CoordinateMap map_s();
VarietyPoint map_to_b(const CoordinateMap& m, const VarietyPoint& general_point);  // throws off V_Q

// Symmetric points whose q o inclusion image is b.
std::vector<VarietyPoint> lift_check(const VarietyPoint& b);

}  // namespace a2act
