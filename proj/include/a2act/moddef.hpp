#pragma once

#include "a2act/pipeline.hpp"
#include "a2act/variety.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a2act {

struct ModdefAction {
    int generator = 0;  // 0-based
    int op = 0;         // i of Sq^i
    std::vector<int> targets;

    friend bool operator==(const ModdefAction&, const ModdefAction&) = default;
};

// Generators are the Milnor basis elements of A(2) (or B(2)), by degree and
// then in the order of basis().
struct ModdefFile {
    std::vector<int> degrees;
    std::vector<ModdefAction> actions;

    std::size_t count() const { return degrees.size(); }
    friend bool operator==(const ModdefFile&, const ModdefFile&) = default;
};

struct ModdefError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ModdefFile moddef_from_numeric(const NumericFamily& fam);
// Throws std::invalid_argument for a point off the case's variety.
ModdefFile export_moddef(ActionCase c, const VarietyPoint& p);
NumericFamily numeric_action(ActionCase c, const VarietyPoint& p);

std::string write_moddef(const ModdefFile& f);
ModdefFile parse_moddef(std::string_view text);
// Rebuild the action matrices; every Sq^i absent from the file is zero.
NumericFamily numeric_family(const ModdefFile& f, BasisPart part);

std::string moddef_filename(ActionCase c, const VarietyPoint& p);  // "Aof2-000000000"

struct LiteratureReport {
    VarietyPoint bbbcx;       // symmetric action used for the Ext computations in the literature
    VarietyPoint bbbcx_dual;
    VarietyPoint be;          // B(2) action
    VarietyPoint be_dual;
    VarietyPoint q_of_bbbcx;  // q o inclusion applied to bbbcx
    bool consistent = false;  // q_of_bbbcx == be
};

LiteratureReport literature_actions();

}  // namespace a2act
