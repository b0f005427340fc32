#include "evenodd/oracles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace evenodd {

TruthTable TruthTable::from_index(unsigned index) {
    if (index > 15) throw std::invalid_argument("truth table index must be in 0..15");
    std::array<std::uint8_t, 4> out{};
    for (unsigned x = 0; x < 4; ++x) out[x] = static_cast<std::uint8_t>((index >> (3 - x)) & 1u);
    return TruthTable(out);
}

TruthTable TruthTable::parse(std::string_view bits) {
    if (bits.size() != 4) throw std::invalid_argument("truth table must be 4 bits");
    std::array<std::uint8_t, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("truth table must contain only '0' and '1'");
        }
        out[i] = static_cast<std::uint8_t>(bits[i] - '0');
    }
    return TruthTable(out);
}

unsigned TruthTable::index() const noexcept {
    unsigned idx = 0;
    for (auto b : outputs_) idx = (idx << 1) | b;
    return idx;
}

int TruthTable::popcount() const noexcept { return std::popcount(index()); }

std::string TruthTable::to_string() const {
    std::string s;
    for (auto b : outputs_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::string FunctionClass::label() const {
    return "[" + std::to_string(ones) + "," + std::to_string(zeros) + "]";
}

UnitaryOperator build_oracle(const TruthTable& f) {
    std::array<Complex, 4> diag{};
    for (unsigned x = 0; x < 4; ++x) diag[x] = f(x) ? -1.0 : 1.0;
    return UnitaryOperator(Matrix::diagonal(diag));
}

FunctionClass classify(const TruthTable& f) {
    const int ones = f.popcount();
    return FunctionClass{ones, 4 - ones, ones % 2 == 0 ? Parity::Even : Parity::Odd};
}

DjClass dj_class(const FunctionClass& c) {
    if (c.ones == 0 || c.ones == 4) return DjClass::Constant;
    if (c.ones == 2) return DjClass::Balanced;
    return DjClass::Outside;
}

bool is_separable_oracle(const UnitaryOperator& u) {
    if (u.num_qubits() != 2) throw std::invalid_argument("is_separable_oracle: expected a 4x4 operator");
    const Matrix& m = u.entries();
    if (!m.is_diagonal()) throw std::invalid_argument("is_separable_oracle: operator is not diagonal");
    for (std::size_t i = 0; i < 4; ++i) {
        const Complex d = m(i, i);
        if (std::abs(d - 1.0) > kTolerance && std::abs(d + 1.0) > kTolerance) {
            throw std::invalid_argument("is_separable_oracle: diagonal entries must be +1 or -1");
        }
    }

    Matrix realigned(4);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t j1 = 0; j1 < 2; ++j1)
            for (std::size_t i2 = 0; i2 < 2; ++i2)
                for (std::size_t j2 = 0; j2 < 2; ++j2)
                    realigned(2 * i1 + j1, 2 * i2 + j2) = m(2 * i1 + i2, 2 * j1 + j2);

    // rank(R) <= 1 iff all 2x2 minors vanish
    for (std::size_t r0 = 0; r0 < 4; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
            for (std::size_t c0 = 0; c0 < 4; ++c0)
                for (std::size_t c1 = c0 + 1; c1 < 4; ++c1) {
                    const Complex minor =
                        realigned(r0, c0) * realigned(r1, c1) - realigned(r0, c1) * realigned(r1, c0);
                    if (std::abs(minor) > kTolerance) return false;
                }
    return true;
}

std::vector<TruthTable> enumerate_functions() {
    std::vector<TruthTable> all;
    all.reserve(16);
    for (unsigned i = 0; i < 16; ++i) all.push_back(TruthTable::from_index(i));
    return all;
}

std::string to_string(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }

std::string to_string(DjClass c) {
    switch (c) {
        case DjClass::Constant: return "Constant";
        case DjClass::Balanced: return "Balanced";
        case DjClass::Outside: break;
    }
    return "——";
}

}  // namespace evenodd
