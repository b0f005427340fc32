// report.hpp
// Per-function classification records and their text / JSON renderings.
//
// JSON is canonical: object keys are sorted, complex numbers are [re, im]
// pairs, and every real is rounded to 15 significant digits before being
// written in shortest round-trip form, so parse + dump reproduces the same
// bytes.

#pragma once

#include "evenodd/algorithms.hpp"
#include "evenodd/entanglement.hpp"
#include "evenodd/nmr.hpp"
#include "evenodd/oracles.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace evenodd {

struct ClassificationReport {
    TruthTable function;
    FunctionClass function_class;
    bool oracle_separable;
    DjClass dj;
    AlgorithmResult run;
    EntanglementReport entanglement;
    ObservabilityReport observability;
};

ClassificationReport make_report(const TruthTable& f);

// One row of the per-class summary table.
struct ClassRow {
    FunctionClass function_class;
    int count = 0;
    std::string oracle;  // "Separable", "Entangling" or "Mixed"
    std::string dj;      // "Constant", "Balanced", "——" or "Mixed"
};

// Rows for [0,4], [1,3], [2,2], [3,1], [4,0], aggregated over all 16 functions.
std::vector<ClassRow> class_table();

double canonical_number(double x);
nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const StateVector& s);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const EntanglementReport& e);
nlohmann::json to_json(const ObservabilityReport& o);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ClassRow& row);

// Canonical serialization used by every JSON-emitting command.
std::string dump_canonical(const nlohmann::json& j);

// "0.707107|01> + 0.707107|10>"; zero amplitudes are omitted.
std::string format_state(const StateVector& s);
std::string format_number(double x);

std::string render_text(const ClassificationReport& r);
std::string render_table_text(const std::vector<ClassRow>& rows);

}  // namespace evenodd
