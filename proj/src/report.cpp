#include "evenodd/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace evenodd {

using nlohmann::json;

namespace {

std::string oracle_label(bool separable) { return separable ? "Separable" : "Entangling"; }

std::string basis_label(std::size_t index, int num_qubits) {
    std::string bits;
    for (int q = num_qubits - 1; q >= 0; --q) bits.push_back((index >> q) & 1u ? '1' : '0');
    return "|" + bits + ">";
}

}  // namespace

ClassificationReport make_report(const TruthTable& f) {
    const auto cls = classify(f);
    auto run = run_even_odd(f);
    const auto rho = density_from_state(run.final_state);
    auto ent = analyze_pure_state(run.final_state);
    return ClassificationReport{f,
                                cls,
                                is_separable_oracle(build_oracle(f)),
                                dj_class(cls),
                                std::move(run),
                                ent,
                                observability(rho)};
}

std::vector<ClassRow> class_table() {
    std::vector<ClassRow> rows(5);
    for (int ones = 0; ones <= 4; ++ones) {
        rows[ones].function_class = FunctionClass{ones, 4 - ones, ones % 2 == 0 ? Parity::Even : Parity::Odd};
    }
    for (const auto& f : enumerate_functions()) {
        const auto cls = classify(f);
        auto& row = rows[cls.ones];
        const auto oracle = oracle_label(is_separable_oracle(build_oracle(f)));
        const auto dj = to_string(dj_class(cls));
        row.oracle = row.count == 0 || row.oracle == oracle ? oracle : "Mixed";
        row.dj = row.count == 0 || row.dj == dj ? dj : "Mixed";
        ++row.count;
    }
    return rows;
}

double canonical_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    const double rounded = std::strtod(buf, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;  // drops -0
}

json to_json(const Complex& z) { return json::array({canonical_number(z.real()), canonical_number(z.imag())}); }

json to_json(const StateVector& s) {
    json out = json::array();
    for (const auto& a : s.amplitudes()) out.push_back(to_json(a));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const EntanglementReport& e) {
    return json{{"concurrence", canonical_number(e.concurrence)},
                {"schmidt_coefficients",
                 {canonical_number(e.schmidt_coefficients[0]), canonical_number(e.schmidt_coefficients[1])}},
                {"is_entangled", e.is_entangled},
                {"reduced_purity_q1", canonical_number(e.reduced_purity_q1)},
                {"reduced_purity_q2", canonical_number(e.reduced_purity_q2)}};
}

json to_json(const ObservabilityReport& o) {
    return json{{"observable_line", o.observable_line},
                {"single_quantum_weight", canonical_number(o.single_quantum_weight)},
                {"zero_quantum_weight", canonical_number(o.zero_quantum_weight)},
                {"transverse_magnetization_q1", canonical_number(o.transverse_magnetization_q1)},
                {"transverse_magnetization_q2", canonical_number(o.transverse_magnetization_q2)}};
}

json to_json(const ClassificationReport& r) {
    return json{{"function", r.function.to_string()},
                {"class", r.function_class.label()},
                {"ones", r.function_class.ones},
                {"zeros", r.function_class.zeros},
                {"parity", to_string(r.function_class.parity)},
                {"oracle", oracle_label(r.oracle_separable)},
                {"dj", to_string(r.dj)},
                {"verdict", to_string(r.run.verdict)},
                {"oracle_calls", r.run.oracle_calls},
                {"final_state", to_json(r.run.final_state)},
                {"entanglement", to_json(r.entanglement)},
                {"observability", to_json(r.observability)}};
}

json to_json(const ClassRow& row) {
    return json{{"class", row.function_class.label()},
                {"count", row.count},
                {"parity", to_string(row.function_class.parity)},
                {"oracle", row.oracle},
                {"dj", row.dj}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", canonical_number(x));
    return buf;
}

std::string format_state(const StateVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Complex a = s[i];
        if (std::abs(a) <= kTolerance) continue;
        std::string coeff;
        if (std::abs(a.imag()) <= kTolerance) {
            coeff = format_number(a.real());
        } else if (std::abs(a.real()) <= kTolerance) {
            coeff = format_number(a.imag()) + "i";
        } else {
            coeff = "(" + format_number(a.real()) + (a.imag() < 0 ? "-" : "+") +
                    format_number(std::abs(a.imag())) + "i)";
        }
        if (!out.empty()) {
            if (coeff.front() == '-') {
                out += " - ";
                coeff.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        out += coeff + basis_label(i, s.num_qubits());
    }
    return out.empty() ? "0" : out;
}

std::string render_text(const ClassificationReport& r) {
    std::ostringstream os;
    const auto& e = r.entanglement;
    const auto& o = r.observability;
    os << "function        " << r.function.to_string() << "\n"
       << "class           " << r.function_class.label() << "\n"
       << "parity          " << to_string(r.function_class.parity) << "\n"
       << "oracle U_f      " << oracle_label(r.oracle_separable) << "\n"
       << "DJ class        " << to_string(r.dj) << "\n"
       << "verdict         " << to_string(r.run.verdict) << "\n"
       << "oracle calls    " << r.run.oracle_calls << "\n"
       << "final state     " << format_state(r.run.final_state) << "\n"
       << "concurrence     " << format_number(e.concurrence) << (e.is_entangled ? " (entangled)" : " (product)")
       << "\n"
       << "schmidt         " << format_number(e.schmidt_coefficients[0]) << " "
       << format_number(e.schmidt_coefficients[1]) << "\n"
       << "reduced purity  q1 " << format_number(e.reduced_purity_q1) << "  q2 "
       << format_number(e.reduced_purity_q2) << "\n"
       << "NMR line        " << (o.observable_line ? "observable" : "none") << " (1Q weight "
       << format_number(o.single_quantum_weight) << ", 0Q weight " << format_number(o.zero_quantum_weight) << ")\n"
       << "transverse mag  q1 " << format_number(o.transverse_magnetization_q1) << "  q2 "
       << format_number(o.transverse_magnetization_q2) << "\n";
    return os.str();
}

std::string render_table_text(const std::vector<ClassRow>& rows) {
    std::ostringstream os;
    os << "Class Number Nature U_f DJ\n";
    int total = 0;
    for (const auto& row : rows) {
        os << row.function_class.label() << " " << row.count << " " << to_string(row.function_class.parity) << " "
           << row.oracle << " " << row.dj << "\n";
        total += row.count;
    }
    os << "total " << total << "\n";
    return os.str();
}

}  // namespace evenodd
