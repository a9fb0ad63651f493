#include <CLI11.hpp>
#include <json.hpp>

#include <orbitft/cache.hpp>
#include <orbitft/formulas.hpp>
#include <orbitft/serialize.hpp>
#include <orbitft/verify.hpp>
#include <orbitft/version.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using ojson = nlohmann::ordered_json;
using namespace orbitft;

namespace {

std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse " + what + " entry: " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument(what + " list is empty");
    return out;
}

Component parse_component(const CartanModel& c, const std::vector<std::string>& tokens) {
    Component comp = canonical_component(c);
    for (const std::string& tok : tokens) {
        if (tok.rfind("real-order=", 0) == 0) {
            std::vector<int> order = parse_csv_ints(tok.substr(11), "real-order");
            for (int& v : order) --v;
            comp.real_order = order;
        } else if (tok.rfind("pair-signs=", 0) == 0) {
            std::vector<int> signs;
            std::stringstream ss(tok.substr(11));
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "+") signs.push_back(1);
                else if (item == "-") signs.push_back(-1);
                else throw std::invalid_argument("pair sign must be + or -, got: " + item);
            }
            comp.pair_signs = signs;
        } else {
            throw std::invalid_argument("unrecognized component token: " + tok);
        }
    }
    // canonical_positive_system revalidates; fail early with a usage error
    std::vector<int> sorted = comp.real_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.real_slots()) throw std::invalid_argument("real-order must list the real slots exactly once");
    if (static_cast<int>(comp.pair_signs.size()) != c.num_pairs())
        throw std::invalid_argument("pair-signs length must match the number of conjugate pairs");
    return comp;
}

std::string levi_text(const std::vector<int>& q) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
    os << ")";
    return os.str();
}

int cmd_list(const std::string& what, int n, const std::string& format) {
    if (what == "cartans") {
        if (format == "json") {
            ojson arr = ojson::array();
            for (int l = 0; l <= n / 2; ++l) {
                CartanModel c = make_cartan(n, l);
                ojson pairs = ojson::array();
                for (auto [a, b] : c.pairs()) pairs.push_back(ojson::array({a + 1, b + 1}));
                std::vector<int> reals;
                for (int s : c.real_slots()) reals.push_back(s + 1);
                arr.push_back(ojson{{"l", l}, {"pairs", pairs}, {"reals", reals}});
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (int l = 0; l <= n / 2; ++l) {
                CartanModel c = make_cartan(n, l);
                std::cout << "h_" << l << ": pairs=";
                for (auto [a, b] : c.pairs()) std::cout << "(" << a + 1 << "," << b + 1 << ")";
                std::cout << " reals=";
                bool first = true;
                for (int s : c.real_slots()) {
                    std::cout << (first ? "" : ",") << s + 1;
                    first = false;
                }
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (what == "levis") {
        if (format == "json") {
            ojson arr = ojson::array();
            for (const LeviClass& cls : levi_classes(n)) arr.push_back(cls.q);
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const LeviClass& cls : levi_classes(n)) std::cout << levi_text(cls.q) << "\n";
        }
        return 0;
    }
    if (what == "orbits") {
        if (format == "json") {
            ojson arr = ojson::array();
            for (const LeviClass& cls : levi_classes(n)) {
                OrbitLabel o = orbit_of_levi(cls);
                arr.push_back(ojson{{"levi_class", cls.q},
                                    {"jordan_type", o.jordan},
                                    {"dim", o.dim},
                                    {"support", support_set(n, cls)}});
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const LeviClass& cls : levi_classes(n)) {
                OrbitLabel o = orbit_of_levi(cls);
                std::cout << levi_text(cls.q) << " -> jordan=" << levi_text(o.jordan)
                          << " dim=" << o.dim << " support={";
                std::vector<int> sup = support_set(n, cls);
                for (size_t i = 0; i < sup.size(); ++i) std::cout << (i ? "," : "") << sup[i];
                std::cout << "}\n";
            }
        }
        return 0;
    }
    throw std::invalid_argument("list expects one of: cartans, levis, orbits");
}

FormulaRecord compute_record(const LeviClass& cls, const Component& comp, const std::string& engine,
                             const std::string& cache_dir_flag, bool use_cache) {
    if (use_cache) {
        auto dir = resolve_cache_dir(cache_dir_flag);
        std::vector<int> ro;
        for (int s : comp.real_order) ro.push_back(s + 1);
        std::string key =
            cache_key(schema_version, comp.cartan.n, cls.q, comp.cartan.l, ro, comp.pair_signs, engine);
        std::string warning;
        if (auto hit = cache_get(dir, key, &warning)) {
            if (!warning.empty()) std::cerr << warning;
            return *hit;
        }
        if (!warning.empty()) std::cerr << warning;
        ComponentFormula f =
            engine == "oracle" ? nilpotent_ft_oracle(cls, comp) : nilpotent_ft_direct(cls, comp);
        FormulaRecord rec = to_record(f);
        cache_put(dir, key, render_record(rec));
        return rec;
    }
    ComponentFormula f =
        engine == "oracle" ? nilpotent_ft_oracle(cls, comp) : nilpotent_ft_direct(cls, comp);
    return to_record(f);
}

int cmd_ft(int n, const std::vector<int>& levi, int cartan, const std::vector<std::string>& comp_tokens,
           const std::string& engine, const std::string& format, const std::string& cache_dir,
           bool no_cache) {
    LeviClass cls = make_levi_class(levi);
    if (cls.n() != n) throw std::invalid_argument("levi class entries must sum to n");
    CartanModel c = make_cartan(n, cartan);
    Component comp = parse_component(c, comp_tokens);
    std::vector<std::string> engines;
    if (engine == "both") engines = {"direct", "oracle"};
    else if (engine == "direct" || engine == "oracle") engines = {engine};
    else throw std::invalid_argument("engine must be direct, oracle, or both");

    std::vector<FormulaRecord> recs;
    for (const std::string& eng : engines) recs.push_back(compute_record(cls, comp, eng, cache_dir, !no_cache));

    bool agree = true;
    if (recs.size() == 2) agree = recs[0].expanded == recs[1].expanded;

    if (format == "json") {
        if (recs.size() == 1) {
            std::cout << render_record(recs[0]);
        } else {
            ojson j;
            j["direct"] = ojson::parse(render_record(recs[0]));
            j["oracle"] = ojson::parse(render_record(recs[1]));
            j["engines_agree"] = agree;
            std::cout << j.dump(2) << "\n";
        }
    } else if (format == "latex") {
        for (const FormulaRecord& r : recs) std::cout << render_latex(r);
    } else if (format == "text") {
        for (const FormulaRecord& r : recs) std::cout << render_text(r);
        if (recs.size() == 2) std::cout << "engines agree: " << (agree ? "yes" : "no") << "\n";
    } else {
        throw std::invalid_argument("format must be text, json, or latex");
    }
    return agree ? 0 : 1;
}

int cmd_ft_semisimple(int n, int k, int cartan, const std::vector<std::string>& comp_tokens,
                      const std::string& format) {
    CartanModel c = make_cartan(n, cartan);
    Component comp = parse_component(c, comp_tokens);
    SemisimpleFormula f = semisimple_ft(k, comp);
    if (format == "json") std::cout << render_semisimple_json(f, "semisimple");
    else if (format == "latex") std::cout << render_semisimple_latex(f);
    else if (format == "text") std::cout << render_semisimple_text(f, "semisimple");
    else throw std::invalid_argument("format must be text, json, or latex");
    return 0;
}

int cmd_verify(const std::string& suites_csv, int n_max, int jobs) {
    if (n_max < 1) throw std::invalid_argument("--n-max must be positive");
    if (jobs < 1) throw std::invalid_argument("--jobs must be positive");
    std::vector<std::string> wanted;
    if (suites_csv == "all") {
        wanted = suite_names();
    } else {
        std::stringstream ss(suites_csv);
        std::string item;
        while (std::getline(ss, item, ',')) wanted.push_back(item);
    }
    std::vector<std::string> known = suite_names();
    for (const std::string& s : wanted)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown suite: " + s);
    ojson report;
    report["schema_version"] = schema_version;
    report["tool_version"] = tool_version;
    report["n_max"] = n_max;
    ojson arr = ojson::array();
    bool ok = true;
    for (const std::string& s : wanted) {
        SuiteResult r = run_suite(s, n_max, jobs);
        ok = ok && r.ok();
        arr.push_back(ojson{{"suite", r.suite},
                            {"cells", r.cells},
                            {"failures", r.failures},
                            {"notes", r.notes}});
    }
    report["suites"] = arr;
    report["ok"] = ok;
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_cache(const std::string& action, const std::string& cache_dir) {
    auto dir = resolve_cache_dir(cache_dir);
    if (action == "path") {
        std::cout << dir.string() << "\n";
        return 0;
    }
    if (action == "list") {
        for (const std::string& key : cache_list(dir)) std::cout << key << "\n";
        return 0;
    }
    if (action == "clear") {
        std::cout << "removed " << cache_clear(dir) << " entries\n";
        return 0;
    }
    throw std::invalid_argument("cache expects one of: path, list, clear");
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact fourier transforms of gl(n,R) coadjoint orbits restricted to cartan components"};
    app.require_subcommand(1);

    std::string list_what, list_format = "text";
    int list_n = 0;
    CLI::App* c_list = app.add_subcommand("list", "enumerate cartans, levi classes, or orbits");
    c_list->add_option("what", list_what, "cartans | levis | orbits")->required();
    c_list->add_option("--n", list_n, "rank of gl(n,R)")->required();
    c_list->add_option("--format", list_format, "text | json");

    int ft_n = 0, ft_cartan = 0;
    std::vector<int> ft_levi;
    std::vector<std::string> ft_comp;
    std::string ft_engine = "direct", ft_format = "text", ft_cache_dir;
    bool ft_no_cache = false;
    CLI::App* c_ft = app.add_subcommand("ft", "fourier transform of a nilpotent coadjoint orbit");
    c_ft->add_option("--n", ft_n, "rank of gl(n,R)")->required();
    c_ft->add_option("--levi", ft_levi, "block sizes, e.g. 2,2")->required()->delimiter(',');
    c_ft->add_option("--cartan", ft_cartan, "cartan index l")->required();
    c_ft->add_option("--component", ft_comp,
                     "component selector: real-order=3,1,2 pair-signs=+,- (default canonical)")
        ->expected(-1);
    c_ft->add_option("--engine", ft_engine, "direct | oracle | both");
    c_ft->add_option("--format", ft_format, "text | json | latex");
    c_ft->add_option("--cache-dir", ft_cache_dir, "cache directory (default: ORBITFOURIER_CACHE or .orbitfourier-cache)");
    c_ft->add_flag("--no-cache", ft_no_cache, "compute without reading or writing the cache");

    int ss_n = 0, ss_k = 0, ss_cartan = 0;
    std::vector<std::string> ss_comp;
    std::string ss_format = "text";
    CLI::App* c_ss = app.add_subcommand("ft-semisimple", "fourier transform of a regular semisimple orbit");
    c_ss->add_option("--n", ss_n, "rank of gl(n,R)")->required();
    c_ss->add_option("--k", ss_k, "cartan index of the orbit chamber")->required();
    c_ss->add_option("--cartan", ss_cartan, "cartan index l of the restriction")->required();
    c_ss->add_option("--component", ss_comp, "component selector (default canonical)")->expected(-1);
    c_ss->add_option("--format", ss_format, "text | json | latex");

    std::string v_suites = "all";
    int v_nmax = 4, v_jobs = 1;
    CLI::App* c_verify = app.add_subcommand("verify", "run internal cross-check suites");
    c_verify->add_option("--suites", v_suites, "comma list or 'all'");
    c_verify->add_option("--n-max", v_nmax, "largest rank swept");
    c_verify->add_option("--jobs", v_jobs, "worker threads");

    std::string cache_action, cache_dir_flag;
    CLI::App* c_cache = app.add_subcommand("cache", "inspect or clear the formula cache");
    c_cache->add_option("action", cache_action, "path | list | clear")->required();
    c_cache->add_option("--cache-dir", cache_dir_flag, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_list)) return cmd_list(list_what, list_n, list_format);
        if (app.got_subcommand(c_ft))
            return cmd_ft(ft_n, ft_levi, ft_cartan, ft_comp, ft_engine, ft_format, ft_cache_dir, ft_no_cache);
        if (app.got_subcommand(c_ss)) return cmd_ft_semisimple(ss_n, ss_k, ss_cartan, ss_comp, ss_format);
        if (app.got_subcommand(c_verify)) return cmd_verify(v_suites, v_nmax, v_jobs);
        if (app.got_subcommand(c_cache)) return cmd_cache(cache_action, cache_dir_flag);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
