#pragma once

#include <orbitft/formulas.hpp>
#include <string>
#include <vector>

namespace orbitft {

// Flat, 1-based view of a ComponentFormula, the unit of JSON output and of
// the cache. Coefficients travel as exact decimal strings.
struct FormulaRecord {
    int schema = 0;
    int n = 0;
    std::vector<int> levi;
    int cartan = 0;
    std::vector<int> real_order;                       // 1-based slots
    std::vector<int> pair_signs;                       // +1 / -1
    std::vector<std::pair<int, int>> positive_system;  // 1-based roots

    struct FactoredEntry {
        std::string coeff;
        std::vector<std::pair<int, int>> roots;
        friend bool operator==(const FactoredEntry& a, const FactoredEntry& b) {
            return a.coeff == b.coeff && a.roots == b.roots;
        }
    };
    std::vector<FactoredEntry> factored;

    struct ExpandedEntry {
        std::string coeff;
        std::vector<int> exponents;
        friend bool operator==(const ExpandedEntry& a, const ExpandedEntry& b) {
            return a.coeff == b.coeff && a.exponents == b.exponents;
        }
    };
    std::vector<ExpandedEntry> expanded;

    std::vector<std::pair<int, int>> denominator_roots;
    std::string engine;
    std::string version;
    int i_power = -1; // -1 when the engine carries no phase data

    friend bool operator==(const FormulaRecord& a, const FormulaRecord& b);
};

FormulaRecord to_record(const ComponentFormula& f);
std::string render_record(const FormulaRecord& r);
FormulaRecord parse_record(const std::string& json_text);
// factored entries expand exactly to the expanded entries
bool record_consistent(const FormulaRecord& r);

std::string render_text(const FormulaRecord& r);
std::string render_latex(const FormulaRecord& r);

std::string render_semisimple_json(const SemisimpleFormula& f, const std::string& kind);
std::string render_semisimple_text(const SemisimpleFormula& f, const std::string& kind);
std::string render_semisimple_latex(const SemisimpleFormula& f);

}
