#include <orbitft/serialize.hpp>
#include <orbitft/version.hpp>

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace orbitft {

using ojson = nlohmann::ordered_json;

bool operator==(const FormulaRecord& a, const FormulaRecord& b) {
    return a.schema == b.schema && a.n == b.n && a.levi == b.levi && a.cartan == b.cartan &&
           a.real_order == b.real_order && a.pair_signs == b.pair_signs &&
           a.positive_system == b.positive_system && a.factored == b.factored &&
           a.expanded == b.expanded && a.denominator_roots == b.denominator_roots &&
           a.engine == b.engine && a.version == b.version && a.i_power == b.i_power;
}

static std::vector<std::pair<int, int>> roots_1based(const std::vector<Root>& roots) {
    std::vector<std::pair<int, int>> out;
    for (const Root& r : roots) out.emplace_back(r.p + 1, r.q + 1);
    return out;
}

FormulaRecord to_record(const ComponentFormula& f) {
    FormulaRecord r;
    r.schema = schema_version;
    r.n = f.psys.component.cartan.n;
    r.levi = f.levi.q;
    r.cartan = f.psys.component.cartan.l;
    for (int s : f.psys.component.real_order) r.real_order.push_back(s + 1);
    r.pair_signs = f.psys.component.pair_signs;
    r.positive_system = roots_1based(f.psys.positives);
    for (const FactoredTerm& t : f.factored)
        r.factored.push_back({rational_to_string(t.coeff), roots_1based(t.roots)});
    for (const auto& [e, c] : f.numerator.terms) {
        if (c.im != 0) throw std::logic_error("cannot serialize a numerator with imaginary parts");
        r.expanded.push_back({rational_to_string(c.re), e});
    }
    r.denominator_roots = r.positive_system;
    r.engine = f.engine;
    r.version = tool_version;
    r.i_power = f.engine == "oracle" ? f.i_power : -1;
    return r;
}

static ojson pairs_json(const std::vector<std::pair<int, int>>& v) {
    ojson out = ojson::array();
    for (const auto& [p, q] : v) out.push_back(ojson::array({p, q}));
    return out;
}

std::string render_record(const FormulaRecord& r) {
    ojson j;
    j["schema_version"] = r.schema;
    j["n"] = r.n;
    j["levi_class"] = r.levi;
    j["cartan"] = r.cartan;
    j["component"] = ojson{{"real_order", r.real_order}, {"pair_signs", r.pair_signs}};
    j["positive_system"] = pairs_json(r.positive_system);
    ojson fac = ojson::array();
    for (const auto& t : r.factored)
        fac.push_back(ojson{{"coeff", t.coeff}, {"root_list", pairs_json(t.roots)}});
    ojson exp = ojson::array();
    for (const auto& t : r.expanded)
        exp.push_back(ojson{{"coeff_string", t.coeff}, {"exponent_vector", t.exponents}});
    j["numerator"] = ojson{{"factored", fac}, {"expanded", exp}};
    j["denominator_roots"] = pairs_json(r.denominator_roots);
    ojson prov;
    prov["engine"] = r.engine;
    prov["tool_version"] = r.version;
    prov["timestamp"] = nullptr;
    if (r.i_power >= 0) prov["i_power"] = r.i_power;
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

static std::vector<std::pair<int, int>> parse_pairs(const ojson& j, int n, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string("record field is not an array: ") + field);
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument(std::string("malformed root in ") + field);
        int p = e[0].get<int>(), q = e[1].get<int>();
        if (p < 1 || p > n || q < 1 || q > n || p == q)
            throw std::invalid_argument(std::string("root out of range in ") + field);
        out.emplace_back(p, q);
    }
    return out;
}

FormulaRecord parse_record(const std::string& json_text) {
    ojson j = ojson::parse(json_text); // throws on malformed input
    FormulaRecord r;
    r.schema = j.at("schema_version").get<int>();
    r.n = j.at("n").get<int>();
    if (r.n < 1 || r.n > 64) throw std::invalid_argument("record n out of range");
    r.levi = j.at("levi_class").get<std::vector<int>>();
    r.cartan = j.at("cartan").get<int>();
    const ojson& comp = j.at("component");
    r.real_order = comp.at("real_order").get<std::vector<int>>();
    r.pair_signs = comp.at("pair_signs").get<std::vector<int>>();
    r.positive_system = parse_pairs(j.at("positive_system"), r.n, "positive_system");
    const ojson& num = j.at("numerator");
    for (const auto& t : num.at("factored"))
        r.factored.push_back({t.at("coeff").get<std::string>(),
                              parse_pairs(t.at("root_list"), r.n, "root_list")});
    for (const auto& t : num.at("expanded")) {
        FormulaRecord::ExpandedEntry e;
        e.coeff = t.at("coeff_string").get<std::string>();
        e.exponents = t.at("exponent_vector").get<std::vector<int>>();
        if (static_cast<int>(e.exponents.size()) != r.n)
            throw std::invalid_argument("exponent vector length mismatch");
        r.expanded.push_back(std::move(e));
    }
    r.denominator_roots = parse_pairs(j.at("denominator_roots"), r.n, "denominator_roots");
    const ojson& prov = j.at("provenance");
    r.engine = prov.at("engine").get<std::string>();
    r.version = prov.at("tool_version").get<std::string>();
    r.i_power = prov.contains("i_power") ? prov.at("i_power").get<int>() : -1;
    return r;
}

bool record_consistent(const FormulaRecord& r) {
    try {
        Polynomial from_factored = poly_zero(r.n);
        for (const auto& t : r.factored) {
            std::vector<Root> roots;
            for (const auto& [p, q] : t.roots) roots.push_back({p - 1, q - 1});
            from_factored = from_factored +
                            scalar_mul(gaussian_from_string(t.coeff), product_of_roots(r.n, roots));
        }
        Polynomial from_expanded = poly_zero(r.n);
        for (const auto& t : r.expanded) {
            Polynomial mono = poly_constant(r.n, gaussian_from_string(t.coeff));
            for (int i = 0; i < r.n; ++i) {
                if (t.exponents[i] < 0) return false;
                for (int k = 0; k < t.exponents[i]; ++k) mono = mono * poly_variable(r.n, i);
            }
            from_expanded = from_expanded + mono;
        }
        return from_factored == from_expanded;
    } catch (const std::exception&) {
        return false;
    }
}

static std::string levi_text(const std::vector<int>& q) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
    os << ")";
    return os.str();
}

static std::string int_list_text(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

static std::string signs_text(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << (v[i] > 0 ? "+" : "-");
    os << ")";
    return os.str();
}

static std::string root_text(const std::pair<int, int>& r) {
    std::ostringstream os;
    os << "(x" << r.first << " - x" << r.second << ")";
    return os.str();
}

static std::string monomial_text(const std::string& coeff, const std::vector<int>& exps) {
    std::ostringstream os;
    os << coeff;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        os << "*x" << i + 1;
        if (exps[i] > 1) os << "^" << exps[i];
    }
    return os.str();
}

std::string render_text(const FormulaRecord& r) {
    std::ostringstream os;
    os << "orbit class " << levi_text(r.levi) << " on cartan h_" << r.cartan << " of gl(" << r.n << ")\n";
    os << "component: real order " << int_list_text(r.real_order) << ", pair signs "
       << signs_text(r.pair_signs) << "\n";
    if (r.factored.empty() && r.expanded.empty()) {
        os << "numerator: 0 (the transform vanishes here)\n";
    } else {
        os << "numerator (factored):";
        for (size_t i = 0; i < r.factored.size(); ++i) {
            os << (i ? " + " : " ") << r.factored[i].coeff;
            for (const auto& root : r.factored[i].roots) os << root_text(root);
        }
        os << "\n";
        os << "numerator (expanded):";
        for (size_t i = 0; i < r.expanded.size(); ++i)
            os << (i ? " + " : " ") << monomial_text(r.expanded[i].coeff, r.expanded[i].exponents);
        os << "\n";
    }
    os << "denominator:";
    for (const auto& root : r.denominator_roots) os << " " << root_text(root);
    os << "\n";
    os << "engine: " << r.engine << " " << r.version;
    if (r.i_power >= 0) os << " phase_power=" << r.i_power;
    os << "\n";
    return os.str();
}

static std::string root_tex(const std::pair<int, int>& r, bool parens) {
    std::ostringstream os;
    if (parens) os << "(";
    os << "x_" << r.first << " - x_" << r.second;
    if (parens) os << ")";
    return os.str();
}

std::string render_latex(const FormulaRecord& r) {
    std::ostringstream os;
    std::string num;
    if (r.factored.empty()) {
        num = "0";
    } else {
        std::ostringstream ns;
        for (size_t i = 0; i < r.factored.size(); ++i) {
            if (i) ns << " + ";
            const auto& t = r.factored[i];
            if (t.coeff != "1" || t.roots.empty()) ns << t.coeff << (t.roots.empty() ? "" : " ");
            for (const auto& root : t.roots) ns << root_tex(root, true);
        }
        num = ns.str();
    }
    if (r.denominator_roots.empty()) {
        os << num << "\n";
        return os.str();
    }
    std::ostringstream ds;
    bool single = r.denominator_roots.size() == 1;
    for (const auto& root : r.denominator_roots) ds << root_tex(root, !single);
    os << "\\frac{" << num << "}{" << ds.str() << "}\n";
    return os.str();
}

static ojson component_json(const PositiveSystem& ps) {
    std::vector<int> ro;
    for (int s : ps.component.real_order) ro.push_back(s + 1);
    return ojson{{"real_order", ro}, {"pair_signs", ps.component.pair_signs}};
}

std::string render_semisimple_json(const SemisimpleFormula& f, const std::string& kind) {
    ojson j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    j["n"] = f.psys.component.cartan.n;
    j["chamber"] = f.k;
    j["cartan"] = f.psys.component.cartan.l;
    j["component"] = component_json(f.psys);
    j["positive_system"] = pairs_json(roots_1based(f.psys.positives));
    ojson terms = ojson::array();
    for (const ExpTerm& t : f.numerator.terms) {
        std::vector<int> label;
        for (int i = 0; i < t.w.size(); ++i) label.push_back(t.w(i) + 1);
        terms.push_back(ojson{{"coeff", gaussian_to_string(t.coeff)}, {"label", label}});
    }
    j["numerator_terms"] = terms;
    j["denominator_roots"] = pairs_json(roots_1based(f.psys.positives));
    j["provenance"] = ojson{{"engine", kind}, {"tool_version", tool_version}, {"timestamp", nullptr}};
    return j.dump(2) + "\n";
}

static std::string label_text(const Perm& w) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i) + 1;
    os << "]";
    return os.str();
}

std::string render_semisimple_text(const SemisimpleFormula& f, const std::string& kind) {
    std::ostringstream os;
    const CartanModel& c = f.psys.component.cartan;
    os << kind << " transform, chamber h_" << f.k << ", restricted to cartan h_" << c.l
       << " of gl(" << c.n << ")\n";
    std::vector<int> ro;
    for (int s : f.psys.component.real_order) ro.push_back(s + 1);
    os << "component: real order " << int_list_text(ro) << ", pair signs "
       << signs_text(f.psys.component.pair_signs) << "\n";
    if (f.numerator.terms.empty()) {
        os << "numerator: 0 (the transform vanishes here)\n";
    } else {
        os << "numerator:";
        for (size_t i = 0; i < f.numerator.terms.size(); ++i) {
            const ExpTerm& t = f.numerator.terms[i];
            os << (i ? " + " : " ") << gaussian_to_string(t.coeff) << "*exp(i<" << label_text(t.w)
               << "lambda, x>)";
        }
        os << "\n";
    }
    os << "denominator:";
    for (const Root& root : f.psys.positives) os << " " << root_text({root.p + 1, root.q + 1});
    os << "\n";
    return os.str();
}

std::string render_semisimple_latex(const SemisimpleFormula& f) {
    std::ostringstream os;
    std::string num;
    if (f.numerator.terms.empty()) {
        num = "0";
    } else {
        std::ostringstream ns;
        for (size_t i = 0; i < f.numerator.terms.size(); ++i) {
            const ExpTerm& t = f.numerator.terms[i];
            if (i) ns << " + ";
            std::string c = gaussian_to_string(t.coeff);
            if (c != "1") ns << c << " ";
            ns << "e^{i\\langle " << label_text(t.w) << "\\lambda, X\\rangle}";
        }
        num = ns.str();
    }
    if (f.psys.positives.empty()) {
        os << num << "\n";
        return os.str();
    }
    std::ostringstream ds;
    bool single = f.psys.positives.size() == 1;
    for (const Root& root : f.psys.positives) ds << root_tex({root.p + 1, root.q + 1}, !single);
    os << "\\frac{" << num << "}{" << ds.str() << "}\n";
    return os.str();
}

}
