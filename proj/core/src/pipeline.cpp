#include "symtc/pipeline.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symtc/errors.hpp"

namespace symtc {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kPipelineVersion = "symtc-square-1";

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ordered_json key_to_json(const SimplexKey& k) {
    return ordered_json::array({k.dim, k.id, k.word});
}

SimplexKey key_from_json(const ordered_json& j) {
    return SimplexKey{j.at(0).get<int32_t>(), j.at(1).get<int32_t>(), j.at(2).get<uint32_t>()};
}

ordered_json sset_to_json(const SimplicialSet& s) {
    ordered_json j;
    j["counts"] = s.counts();
    ordered_json faces = ordered_json::array();
    for (int n = 0; n <= s.dimension(); ++n) {
        ordered_json grade = ordered_json::array();
        for (int id = 0; id < s.count(n); ++id) {
            ordered_json fs = ordered_json::array();
            for (int i = 0; i <= n && n > 0; ++i) fs.push_back(key_to_json(s.face_of(n, id, i)));
            grade.push_back(std::move(fs));
        }
        faces.push_back(std::move(grade));
    }
    j["faces"] = std::move(faces);
    return j;
}

SSetPtr sset_from_json(const ordered_json& j) {
    std::vector<int> counts = j.at("counts").get<std::vector<int>>();
    std::vector<std::vector<std::vector<SimplexKey>>> faces(counts.size());
    const auto& jf = j.at("faces");
    for (size_t n = 0; n < counts.size(); ++n) {
        faces[n].resize(counts[n]);
        for (int id = 0; id < counts[n]; ++id)
            for (const auto& fk : jf.at(n).at(id)) faces[n][id].push_back(key_from_json(fk));
    }
    return std::make_shared<SimplicialSet>(std::move(counts), std::move(faces));
}

ordered_json map_table_to_json(const SSetMap& m) {
    ordered_json j = ordered_json::array();
    for (const auto& grade : m.image) {
        ordered_json g = ordered_json::array();
        for (const auto& k : grade) g.push_back(key_to_json(k));
        j.push_back(std::move(g));
    }
    return j;
}

std::vector<std::vector<SimplexKey>> map_table_from_json(const ordered_json& j) {
    std::vector<std::vector<SimplexKey>> table(j.size());
    for (size_t n = 0; n < j.size(); ++n)
        for (const auto& k : j.at(n)) table[n].push_back(key_from_json(k));
    return table;
}

}  // namespace

std::string workspace_cache_key(const Complex& c) {
    Complex unlabeled = c;  // same geometry, same key, whatever the label
    unlabeled.name.reset();
    std::ostringstream material;
    material << kPipelineVersion << "\n" << serialize_complex(unlabeled);
    std::ostringstream hex;
    hex << std::hex << fnv1a64(material.str());
    return hex.str();
}

std::string serialize_workspace(const SquareWorkspace& w) {
    ordered_json j;
    j["version"] = kPipelineVersion;
    j["complex"] = ordered_json::parse(serialize_complex_json(w.complex));
    j["x"] = sset_to_json(*w.square.base);
    j["total"] = sset_to_json(*w.square.total);
    j["quotient"] = sset_to_json(*w.square.quotient);
    j["involution"] = map_table_to_json(w.square.involution);
    j["diagonal_inclusion"] = map_table_to_json(w.square.diagonal_inclusion);
    j["projection"] = map_table_to_json(w.square.projection);
    j["image_diagonal_inclusion"] = map_table_to_json(w.square.image_diagonal_inclusion);
    ordered_json pairs = ordered_json::array();
    for (const auto& grade : w.square.pairs) {
        ordered_json g = ordered_json::array();
        for (const auto& p : grade)
            g.push_back(ordered_json::array(
                {p.a.dim, p.a.id, p.a.word, p.b.dim, p.b.id, p.b.word}));
        pairs.push_back(std::move(g));
    }
    j["pairs"] = std::move(pairs);
    j["swap_of"] = w.square.swap_of;
    j["orbit_of"] = w.square.orbit_of;
    ordered_json orbits = ordered_json::array();
    for (const auto& grade : w.square.orbits) {
        ordered_json g = ordered_json::array();
        for (const auto& o : grade)
            g.push_back(ordered_json::array({o.rep, o.on_diagonal ? 1 : 0}));
        orbits.push_back(std::move(g));
    }
    j["orbits"] = std::move(orbits);
    return j.dump();
}

SquareWorkspace deserialize_workspace(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.contains("version") || j.at("version").get<std::string>() != kPipelineVersion)
        throw InputError("workspace cache entry has a different pipeline version");

    SquareWorkspace w;
    w.complex = parse_complex(j.at("complex").dump(), "<cache>");
    EquivariantPair& ep = w.square;
    ep.base = sset_from_json(j.at("x"));
    ep.total = sset_from_json(j.at("total"));
    ep.quotient = sset_from_json(j.at("quotient"));
    ep.diagonal = std::make_shared<SimplicialSet>(*ep.base);

    ep.involution = SSetMap{ep.total, ep.total, map_table_from_json(j.at("involution"))};
    ep.diagonal_inclusion =
        SSetMap{ep.base, ep.total, map_table_from_json(j.at("diagonal_inclusion"))};
    ep.projection = SSetMap{ep.total, ep.quotient, map_table_from_json(j.at("projection"))};
    ep.image_diagonal_inclusion =
        SSetMap{ep.diagonal, ep.quotient, map_table_from_json(j.at("image_diagonal_inclusion"))};

    for (const auto& grade : j.at("pairs")) {
        std::vector<ProductPair> ps;
        for (const auto& p : grade)
            ps.push_back(ProductPair{
                SimplexKey{p.at(0).get<int32_t>(), p.at(1).get<int32_t>(), p.at(2).get<uint32_t>()},
                SimplexKey{p.at(3).get<int32_t>(), p.at(4).get<int32_t>(), p.at(5).get<uint32_t>()}});
        ep.pairs.push_back(std::move(ps));
    }
    ep.swap_of = j.at("swap_of").get<std::vector<std::vector<int32_t>>>();
    ep.orbit_of = j.at("orbit_of").get<std::vector<std::vector<int32_t>>>();
    for (const auto& grade : j.at("orbits")) {
        std::vector<OrbitInfo> os;
        for (const auto& o : grade)
            os.push_back(OrbitInfo{o.at(0).get<int32_t>(), o.at(1).get<int>() != 0});
        ep.orbits.push_back(std::move(os));
    }

    validate(ep.involution);
    validate(ep.diagonal_inclusion);
    validate(ep.projection);
    validate(ep.image_diagonal_inclusion);

    // cross-check the tables against the rebuilt sets
    size_t grades = static_cast<size_t>(ep.total->dimension()) + 1;
    internal_check(ep.pairs.size() == grades && ep.swap_of.size() == grades &&
                       ep.orbit_of.size() == grades && ep.orbits.size() == grades,
                   "cache entry: table grade mismatch");
    for (size_t m = 0; m < grades; ++m) {
        internal_check(static_cast<int>(ep.pairs[m].size()) == ep.total->count(static_cast<int>(m)),
                       "cache entry: pair table size mismatch");
        internal_check(static_cast<int>(ep.orbits[m].size()) ==
                           ep.quotient->count(static_cast<int>(m)),
                       "cache entry: orbit table size mismatch");
        for (size_t id = 0; id < ep.pairs[m].size(); ++id) {
            int32_t twin = ep.swap_of[m][id];
            internal_check(ep.swap_of[m][twin] == static_cast<int32_t>(id),
                           "cache entry: swap table is not an involution");
            internal_check(ep.orbit_of[m][id] == ep.orbit_of[m][twin],
                           "cache entry: orbit table not swap-invariant");
        }
        for (size_t o = 0; o < ep.orbits[m].size(); ++o) {
            const OrbitInfo& info = ep.orbits[m][o];
            internal_check(ep.orbit_of[m][info.rep] == static_cast<int32_t>(o),
                           "cache entry: orbit representative mismatch");
            const ProductPair& rep = ep.pairs[m][info.rep];
            internal_check(info.on_diagonal == (rep.a == rep.b),
                           "cache entry: diagonal flag mismatch");
        }
    }
    return w;
}

SquareWorkspace build_square_workspace(const Complex& c,
                                       const std::optional<std::string>& cache_dir,
                                       bool* cache_hit) {
    if (cache_hit) *cache_hit = false;
    std::optional<fs::path> entry;
    if (cache_dir) {
        entry = fs::path(*cache_dir) / ("symtc-" + workspace_cache_key(c) + ".json");
        if (fs::exists(*entry)) {
            try {
                std::ifstream in(*entry, std::ios::binary);
                std::stringstream buf;
                buf << in.rdbuf();
                SquareWorkspace w = deserialize_workspace(buf.str());
                Complex stored = w.complex;
                stored.name = c.name;
                if (stored == c) {  // key collisions rebuild cold
                    w.complex = c;
                    if (cache_hit) *cache_hit = true;
                    return w;
                }
            } catch (const std::exception&) {
                // fall through to a cold rebuild on any cache defect
            }
        }
    }

    SquareWorkspace w;
    w.complex = c;
    w.square = symmetric_square(std::make_shared<SimplicialSet>(to_simplicial_set(c)));

    if (entry) {
        std::error_code ec;
        fs::create_directories(entry->parent_path(), ec);
        std::random_device rd;
        fs::path tmp = *entry;
        tmp += ".tmp-" + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::binary);
            out << serialize_workspace(w);
        }
        fs::rename(tmp, *entry, ec);
        if (ec) fs::remove(tmp, ec);  // lost the race or read-only dir; run cold
    }
    return w;
}

std::string debug_dump_json(const SquareWorkspace& w) {
    const EquivariantPair& ep = w.square;
    ordered_json j;
    j["space"] = w.complex.name.value_or("");
    j["grade_counts"] = ordered_json{{"X", ep.base->counts()},
                                     {"XxX", ep.total->counts()},
                                     {"SP2", ep.quotient->counts()},
                                     {"dX", ep.diagonal->counts()}};
    ordered_json orbits = ordered_json::array();
    for (size_t m = 0; m < ep.orbits.size(); ++m) {
        ordered_json grade = ordered_json::array();
        for (size_t o = 0; o < ep.orbits[m].size(); ++o) {
            const OrbitInfo& info = ep.orbits[m][o];
            const ProductPair& rep = ep.pairs[m][info.rep];
            grade.push_back(ordered_json{
                {"rep", info.rep},
                {"on_diagonal", info.on_diagonal},
                {"a", key_to_json(rep.a)},
                {"b", key_to_json(rep.b)},
            });
        }
        orbits.push_back(std::move(grade));
    }
    j["orbits"] = std::move(orbits);
    return j.dump(2) + "\n";
}

}  // namespace symtc
