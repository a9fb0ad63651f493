#include <orbitft/cache.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace orbitft {

namespace fs = std::filesystem;

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return fs::path(flag_value);
    if (const char* env = std::getenv("ORBITFOURIER_CACHE"); env && *env) return fs::path(env);
    return fs::path(".orbitfourier-cache");
}

std::string cache_key(int schema, int n, const std::vector<int>& levi, int cartan,
                      const std::vector<int>& real_order_1based,
                      const std::vector<int>& pair_signs, const std::string& engine) {
    std::ostringstream os;
    os << "v" << schema << "_n" << n << "_L";
    for (size_t i = 0; i < levi.size(); ++i) os << (i ? "-" : "") << levi[i];
    os << "_h" << cartan << "_ro";
    for (size_t i = 0; i < real_order_1based.size(); ++i) os << (i ? "-" : "") << real_order_1based[i];
    os << "_ps";
    for (int s : pair_signs) os << (s > 0 ? "p" : "m");
    os << "_" << engine;
    return os.str();
}

std::string cache_key(const FormulaRecord& r) {
    return cache_key(r.schema, r.n, r.levi, r.cartan, r.real_order, r.pair_signs, r.engine);
}

void cache_put(const fs::path& dir, const std::string& key, const std::string& payload) {
    fs::create_directories(dir);
    static std::atomic<unsigned> counter{0};
    fs::path tmp = dir / (key + ".tmp" + std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache entry: " + tmp.string());
        out << payload;
    }
    fs::rename(tmp, dir / (key + ".json"));
}

std::optional<FormulaRecord> cache_get(const fs::path& dir, const std::string& key, std::string* warning) {
    fs::path file = dir / (key + ".json");
    std::error_code ec;
    if (!fs::exists(file, ec) || ec) return std::nullopt;
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        FormulaRecord r = parse_record(buf.str());
        if (cache_key(r) != key) {
            if (warning) *warning += "cache entry " + file.string() + " is stored under the wrong key\n";
            return std::nullopt;
        }
        if (!record_consistent(r)) {
            if (warning)
                *warning += "cache entry " + file.string() + " has inconsistent factored and expanded parts\n";
            return std::nullopt;
        }
        return r;
    } catch (const std::exception& e) {
        if (warning) *warning += "cache entry " + file.string() + " is unreadable: " + e.what() + "\n";
        return std::nullopt;
    }
}

std::vector<std::string> cache_list(const fs::path& dir) {
    std::vector<std::string> out;
    std::error_code ec;
    if (!fs::exists(dir, ec) || ec) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cache_clear(const fs::path& dir) {
    int removed = 0;
    std::error_code ec;
    if (!fs::exists(dir, ec) || ec) return 0;
    std::vector<fs::path> victims;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") victims.push_back(entry.path());
    for (const auto& p : victims)
        if (fs::remove(p, ec) && !ec) ++removed;
    return removed;
}

}
