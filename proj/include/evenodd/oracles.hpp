// oracles.hpp
// Two-bit Boolean functions, their phase oracles, and structural classes.

#pragma once

#include "evenodd/quantum_core.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evenodd {

enum class Parity { Even, Odd };

// f: {0,1}^2 -> {0,1}, stored as (f(00), f(01), f(10), f(11)).
class TruthTable {
public:
    constexpr TruthTable() = default;
    constexpr explicit TruthTable(std::array<std::uint8_t, 4> outputs) : outputs_(outputs) {
        for (auto b : outputs_)
            if (b > 1) throw std::invalid_argument("truth table outputs must be 0 or 1");
    }

    // Index 0..15 with f(00) as the most significant bit.
    static TruthTable from_index(unsigned index);

    // Canonical text form "b0b1b2b3" = f(00)f(01)f(10)f(11).
    // Throws std::invalid_argument on malformed input.
    static TruthTable parse(std::string_view bits);

    // Output for input x in 0..3 (x = 2*x1 + x2).
    int operator()(unsigned x) const { return outputs_.at(x); }
    const std::array<std::uint8_t, 4>& outputs() const noexcept { return outputs_; }

    unsigned index() const noexcept;
    int popcount() const noexcept;
    std::string to_string() const;

    friend constexpr bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    std::array<std::uint8_t, 4> outputs_{};
};

struct FunctionClass {
    int ones = 0;
    int zeros = 4;
    Parity parity = Parity::Even;

    // "[ones,zeros]"
    std::string label() const;
    friend bool operator==(const FunctionClass&, const FunctionClass&) = default;
};

// Status under the Deutsch-Jozsa promise.
enum class DjClass { Constant, Balanced, Outside };

// (-1)^f(x) on the diagonal.
UnitaryOperator build_oracle(const TruthTable& f);

FunctionClass classify(const TruthTable& f);

DjClass dj_class(const FunctionClass& c);

// True iff u = A (x) B for single-qubit A, B. Tested through the rank of the
// realigned matrix R[(i1 j1),(i2 j2)] = U[(i1 i2),(j1 j2)]: every 2x2 minor
// of R must vanish. Accepts only 4x4 diagonal matrices with +-1 entries and
// throws std::invalid_argument otherwise.
bool is_separable_oracle(const UnitaryOperator& u);

// All 16 tables in ascending binary order of (f(00), f(01), f(10), f(11)).
std::vector<TruthTable> enumerate_functions();

std::string to_string(Parity p);
std::string to_string(DjClass c);

}  // namespace evenodd
