#pragma once

#include "a2act/poly.hpp"
#include "a2act/polymat.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace a2act {

enum class ActionCase { Symmetric, General, BOnly };

std::string case_name(ActionCase c);        // "sym", "gen", "b"
ActionCase parse_case(const std::string& s);  // throws std::invalid_argument

VarTable make_var_table(ActionCase c);
BasisPart family_part(ActionCase c);

// Sq^0..Sq^7 from the Milnor product, all other Sq^i zero.
SqFamily init_known_sq(ActionCase c);

// Install the generic Sq^8 / Sq^16 matrices. Returns the variables introduced,
// in the order they were assigned to entries.
std::vector<Var> generic_sq8(SqFamily& family, ActionCase c, const VarTable& table);
std::vector<Var> generic_sq16(SqFamily& family, ActionCase c, const VarTable& table);

// Define Sq^{g+1}..Sq^{g+7} from Sq^g (g = 8 or 16) and the lower squares.
void derive_sq_range(SqFamily& family, int from_gen);

struct ResidualSet {
    std::vector<Poly> distinct;  // nonzero, sorted, unique
    std::size_t raw = 0;         // entries of every nonzero residual matrix
    std::size_t linear() const;
    std::vector<Poly> linear_relations() const;
};

// Residuals of every Adem relation Sq^a Sq^b, 1 <= a < 2b, b <= i_max,
// a <= i_max. With guard set, relations whose right side needs Sq^i with
// i > i_max are skipped.
ResidualSet adem_residuals(const SqFamily& family, int i_max, bool guard);

struct InconsistentActionSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepCounts {
    std::string label;
    std::size_t raw = 0;
    std::size_t distinct = 0;
    std::size_t linear = 0;
    std::size_t basis = 0;      // size of the reduced linear basis
    std::size_t survivors = 0;  // introduced variables left after this step
};

struct LinearStep {
    LinearBasis basis;
    std::vector<Var> survivors;
    StepCounts counts;
};

// Row-reduce the linear residuals; survivors are `live` minus the pivots.
// Throws InconsistentActionSpace if 1 lies in the span.
LinearStep linear_eliminate(const ResidualSet& residuals, const std::vector<Var>& live, std::size_t nvars,
                            std::string label = {});

struct Elimination {
    Var var = 0;
    std::size_t relation = 0;  // 1-based position in the input list
    Poly relation_poly;
};

struct NonlinearResult {
    std::vector<Var> free;
    std::vector<Poly> relations;  // distinct nonzero residual relations
    SubstMap map;                 // composite of all single substitutions
    std::vector<Elimination> steps;
};

// Safe-substitution elimination over the boolean ring. `relations` must be
// boolean-normal; list slots are kept when a relation becomes zero.
NonlinearResult nonlinear_eliminate(const std::vector<Poly>& relations, const std::vector<Var>& live,
                                    std::size_t nvars);

struct ReductionResult {
    ActionCase action_case = ActionCase::Symmetric;
    VarTable table;
    std::vector<Var> free;          // ascending table order
    std::vector<Poly> relations;
    SubstMap dictionary;            // every variable in terms of `free`
    SqFamily family;                // over `free`, boolean-normal entries
    std::vector<StepCounts> log;
    std::vector<Poly> nonlinear_input;  // the r_1, r_2, ... list of the third step
    std::vector<Elimination> eliminations;
    std::vector<Var> sq8_vars;      // variables introduced with Sq^8
    std::vector<Var> sq16_vars;
};

ReductionResult run_case(ActionCase c);
// Memoized run_case; safe to call from several threads.
const ReductionResult& reduction(ActionCase c);

// Constant 0/1 matrices; row bit c set iff entry (r, c) is 1. Degrees of
// A(2) are at most 8-dimensional.
struct BitMatrix {
    std::uint8_t rows = 0;
    std::uint8_t cols = 0;
    std::array<std::uint8_t, 8> row{};

    bool is_zero() const;
    bool get(std::size_t r, std::size_t c) const { return (row[r] >> c) & 1u; }
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

BitMatrix compose(const BitMatrix& first, const BitMatrix& then);

class NumericFamily {
public:
    NumericFamily() = default;
    explicit NumericFamily(BasisPart part);

    BasisPart part() const { return part_; }
    const BitMatrix& sq(int i, int n) const { return m_.at(i).at(n); }
    BitMatrix& sq(int i, int n) { return m_.at(i).at(n); }

    friend bool operator==(const NumericFamily&, const NumericFamily&) = default;

private:
    BasisPart part_ = BasisPart::Full;
    std::array<std::array<BitMatrix, 24>, 24> m_{};
};

// Every entry must be constant.
NumericFamily to_numeric(const SqFamily& family);

// Family specialised for fast evaluation at many points of a few variables.
class CompiledFamily {
public:
    CompiledFamily(const SqFamily& family, std::vector<Var> vars);
    const std::vector<Var>& vars() const { return vars_; }
    // Bit k of `point` is the value of vars()[k].
    NumericFamily at(std::uint32_t point) const;

private:
    struct Entry {
        std::uint8_t i, n, r, c;
        std::vector<std::uint32_t> monomials;
    };
    BasisPart part_;
    std::vector<Var> vars_;
    std::vector<Entry> entries_;
};

// True iff every Adem relation holds in the numeric family.
bool adem_holds(const NumericFamily& numeric);
// Substitute an F2 point (indexed by table variable, 0/1) and check Adem.
bool verify_adem(const SqFamily& family, std::span<const std::uint8_t> assignment);

}  // namespace a2act
