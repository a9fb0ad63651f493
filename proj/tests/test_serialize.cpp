#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbitft/cache.hpp>
#include <orbitft/serialize.hpp>
#include <orbitft/version.hpp>

#include <cstdlib>
#include <fstream>
#include <string>

using namespace orbitft;
namespace fs = std::filesystem;

static ComponentFormula sample_formula() {
    return nilpotent_ft_direct(make_levi_class({2, 1}), canonical_component(make_cartan(3, 0)));
}

TEST_CASE("records survive a render and parse round trip byte for byte") {
    for (int n = 1; n <= 3; ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            Component comp = canonical_component(make_cartan(n, l));
            for (const LeviClass& cls : levi_classes(n)) {
                for (const std::string& engine : {std::string("direct"), std::string("oracle")}) {
                    ComponentFormula f = engine == "direct" ? nilpotent_ft_direct(cls, comp)
                                                            : nilpotent_ft_oracle(cls, comp);
                    FormulaRecord rec = to_record(f);
                    CHECK(record_consistent(rec));
                    std::string text = render_record(rec);
                    FormulaRecord back = parse_record(text);
                    CHECK(back == rec);
                    CHECK(render_record(back) == text);
                }
            }
        }
    }
}

TEST_CASE("records carry one-based slots and engine provenance") {
    FormulaRecord rec = to_record(sample_formula());
    CHECK(rec.schema == schema_version);
    CHECK(rec.n == 3);
    CHECK(rec.levi == std::vector<int>{2, 1});
    CHECK(rec.cartan == 0);
    CHECK(rec.real_order == std::vector<int>{3});
    CHECK(rec.pair_signs == std::vector<int>{1});
    REQUIRE(rec.factored.size() == 1);
    CHECK(rec.factored[0].coeff == "1");
    CHECK(rec.factored[0].roots == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(rec.engine == "direct");
    CHECK(rec.version == tool_version);
    CHECK(rec.i_power == -1);

    FormulaRecord orec = to_record(
        nilpotent_ft_oracle(make_levi_class({2, 1}), canonical_component(make_cartan(3, 0))));
    CHECK(orec.engine == "oracle");
    CHECK(orec.i_power == 1);
}

TEST_CASE("inconsistent or malformed records are rejected") {
    FormulaRecord rec = to_record(sample_formula());
    REQUIRE(record_consistent(rec));

    FormulaRecord doctored = rec;
    doctored.expanded[0].coeff = "7";
    CHECK(!record_consistent(doctored));

    FormulaRecord scrambled = rec;
    scrambled.factored[0].coeff = "not-a-number";
    CHECK(!record_consistent(scrambled));

    CHECK_THROWS(parse_record("{ this is not json"));
    // a slot index outside 1..n must not parse back in
    FormulaRecord out_of_range = rec;
    out_of_range.positive_system[0].first = 0;
    CHECK_THROWS_AS(parse_record(render_record(out_of_range)), std::invalid_argument);
    FormulaRecord oversized = rec;
    oversized.factored[0].roots[0].second = 9;
    CHECK_THROWS_AS(parse_record(render_record(oversized)), std::invalid_argument);
}

TEST_CASE("text and latex renderings expose the formula shape") {
    FormulaRecord rec = to_record(sample_formula());
    std::string text = render_text(rec);
    CHECK(text.find("orbit class (2,1) on cartan h_0 of gl(3)") != std::string::npos);
    CHECK(text.find("(x1 - x2)") != std::string::npos);
    CHECK(render_text(to_record(nilpotent_ft_oracle(make_levi_class({2, 1}),
                                                    canonical_component(make_cartan(3, 0)))))
              .find("phase_power=1") != std::string::npos);
    std::string tex = render_latex(rec);
    CHECK(tex.find("\\frac{") != std::string::npos);
    CHECK(tex.find("x_1 - x_2") != std::string::npos);

    SemisimpleFormula ss = semisimple_ft(0, canonical_component(make_cartan(2, 1)));
    CHECK(render_semisimple_text(ss, "semisimple").find("2") != std::string::npos);
    CHECK(!render_semisimple_json(ss, "semisimple").empty());
    CHECK(!render_semisimple_latex(ss).empty());
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "orbitft-test-XXXXXX").string();
        path = fs::path(mkdtemp(tmpl.data()));
    }
    ~TempDir() { fs::remove_all(path); }
};

TEST_CASE("the formula cache stores and validates records") {
    TempDir dir;
    FormulaRecord rec = to_record(sample_formula());
    std::string key = cache_key(rec);
    CHECK(cache_get(dir.path, key) == std::nullopt);

    cache_put(dir.path, key, render_record(rec));
    auto hit = cache_get(dir.path, key);
    REQUIRE(hit.has_value());
    CHECK(*hit == rec);
    CHECK(cache_list(dir.path) == std::vector<std::string>{key});

    // a truncated payload is a miss with a warning, never an error
    std::ofstream(dir.path / (key + ".json"), std::ios::trunc) << "{ \"schema_version\": 1 ";
    std::string warning;
    CHECK(cache_get(dir.path, key, &warning) == std::nullopt);
    CHECK(!warning.empty());

    // an entry stored under a foreign key is a miss
    cache_put(dir.path, "wrong-key", render_record(rec));
    warning.clear();
    CHECK(cache_get(dir.path, "wrong-key", &warning) == std::nullopt);
    CHECK(!warning.empty());

    CHECK(cache_clear(dir.path) == 2);
    CHECK(cache_list(dir.path).empty());
}

TEST_CASE("cache keys separate engines, components and classes") {
    FormulaRecord rec = to_record(sample_formula());
    FormulaRecord orec = to_record(
        nilpotent_ft_oracle(make_levi_class({2, 1}), canonical_component(make_cartan(3, 0))));
    CHECK(cache_key(rec) != cache_key(orec));
    FormulaRecord other = to_record(
        nilpotent_ft_direct(make_levi_class({3}), canonical_component(make_cartan(3, 0))));
    CHECK(cache_key(rec) != cache_key(other));
}

TEST_CASE("the cache directory resolution order is flag, environment, default") {
    setenv("ORBITFOURIER_CACHE", "/from/env", 1);
    CHECK(resolve_cache_dir("/explicit/dir") == fs::path("/explicit/dir"));
    CHECK(resolve_cache_dir("") == fs::path("/from/env"));
    unsetenv("ORBITFOURIER_CACHE");
    CHECK(resolve_cache_dir("") == fs::path(".orbitfourier-cache"));
}
