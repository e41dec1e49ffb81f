#pragma once

// JSON files for groups, representations and presentations.  Schemas are
// documented in docs/schemas.md; every file carries a "schema" string.
//
// Scalars are numbers, strings in the scalar syntax ("p/q", polynomials in
// "w"), or arrays [c_0, c_1, ...] meaning sum_j c_j zeta_m^j.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdeform/algebra/presentation.hpp"
#include "gdeform/casestudy/models.hpp"
#include "gdeform/exact/parse.hpp"
#include "gdeform/symmetry/builtin.hpp"

namespace gdeform::io {

using json = nlohmann::ordered_json;

inline constexpr const char* group_schema = "gdeform.group/1";
inline constexpr const char* rep_schema = "gdeform.rep/1";
inline constexpr const char* presentation_schema = "gdeform.presentation/1";

/// Diagnostics name the JSON path of the offending field.
inline SchemaError schema_error(const std::string& path, const std::string& what)
{
    return SchemaError(path + ": " + what);
}

inline json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

inline const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(path, "missing field '" + key + "'");
    return *it;
}

inline void expect_schema(const json& j, const std::string& schema, const std::string& path)
{
    const auto& s = field(j, "schema", path);
    if (!s.is_string() || s.get<std::string>() != schema)
        throw schema_error(path + "/schema", "expected \"" + std::string(schema) + "\"");
}

inline CycScalar scalar_from_json(const json& j, int conductor, const std::string& path)
{
    try {
        if (j.is_number_integer()) return CycScalar(j.get<long>());
        if (j.is_string()) return parse_scalar(j.get<std::string>(), conductor);
        if (j.is_array()) {
            CycScalar acc(0);
            for (std::size_t k = 0; k < j.size(); ++k)
                acc += scalar_from_json(j[k], 1, path + "/" + std::to_string(k)) * CycScalar::zeta(conductor, k);
            return acc;
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw schema_error(path, e.what());
    }
    throw schema_error(path, "expected a scalar (integer, string or coefficient array)");
}

inline json scalar_to_json(const CycScalar& c) { return c.to_string(); }

inline CMatrix matrix_from_json(const json& j, std::size_t dim, int conductor, const std::string& path)
{
    if (!j.is_array() || j.size() != dim) throw schema_error(path, "expected " + std::to_string(dim) + " rows");
    CMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = j[r];
        const std::string rp = path + "/" + std::to_string(r);
        if (!row.is_array() || row.size() != dim) throw schema_error(rp, "expected " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(row[c], conductor, rp + "/" + std::to_string(c));
    }
    return m;
}

inline std::size_t size_field(const json& j, const std::string& key, const std::string& path)
{
    const auto& v = field(j, key, path);
    if (!v.is_number_integer() || v.get<long>() < 0) throw schema_error(path + "/" + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

inline int conductor_field(const json& j, const std::string& path)
{
    if (!j.contains("conductor")) return 1;
    const long m = static_cast<long>(size_field(j, "conductor", path));
    if (m < 1) throw schema_error(path + "/conductor", "must be positive");
    return static_cast<int>(m);
}

/// A symmetry group together with its simples, when known.
struct GroupSpec {
    std::string name;
    GroupPtr group;                     // finite groups
    std::optional<WeightGroup> torus;   // weight groups
    std::optional<Representation> natural;
    std::vector<Representation> irreps;  // empty when the file lists none
};

inline GroupSpec load_group(const json& j, const std::string& path = "group")
{
    expect_schema(j, group_schema, path);
    GroupSpec g;
    if (j.contains("builtin")) {
        const auto& b = j["builtin"];
        if (!b.is_string()) throw schema_error(path + "/builtin", "expected a string");
        const std::string kind = b.get<std::string>();
        GroupFamily fam;
        if (kind == "symmetric") fam = symmetric_group_irreps(static_cast<int>(size_field(j, "n", path)));
        else if (kind == "dihedral") fam = dihedral(static_cast<int>(size_field(j, "n", path)));
        else if (kind == "heisenberg") fam = heisenberg(static_cast<int>(size_field(j, "p", path)));
        else if (kind == "clifford") {
            g.group = models::clifford_group();
            g.natural = Representation::natural(g.group);
        } else if (kind == "torus") {
            g.torus = WeightGroup{size_field(j, "rank", path)};
        } else {
            throw schema_error(path + "/builtin", "unknown builtin '" + kind + "'");
        }
        if (fam.group) {
            g.group = fam.group;
            g.natural = fam.natural;
            g.irreps = fam.irreps;
        }
        g.name = kind;
        return g;
    }
    const int m = conductor_field(j, path);
    const std::size_t d = size_field(j, "dim", path);
    const auto& gens = field(j, "generators", path);
    if (!gens.is_array()) throw schema_error(path + "/generators", "expected an array of matrices");
    std::vector<CMatrix> mats;
    for (std::size_t i = 0; i < gens.size(); ++i)
        mats.push_back(matrix_from_json(gens[i], d, m, path + "/generators/" + std::to_string(i)));
    g.name = j.value("name", std::string("G"));
    g.group = FiniteGroup::enumerate(std::move(mats), d, 100000, g.name);
    g.natural = Representation::natural(g.group);
    if (j.contains("irreps")) {
        const auto& irr = j["irreps"];
        for (std::size_t i = 0; i < irr.size(); ++i) {
            const std::string ip = path + "/irreps/" + std::to_string(i);
            const std::size_t k = size_field(irr[i], "dim", ip);
            const auto& imgs = field(irr[i], "images", ip);
            std::vector<CMatrix> ms;
            for (std::size_t a = 0; a < imgs.size(); ++a)
                ms.push_back(matrix_from_json(imgs[a], k, m, ip + "/images/" + std::to_string(a)));
            g.irreps.push_back(Representation::from_matrices(g.group, std::move(ms), k,
                                                             irr[i].value("label", "S" + std::to_string(i))));
        }
    }
    return g;
}

inline Representation load_rep(const json& j, const GroupSpec& g, const std::string& path = "rep")
{
    expect_schema(j, rep_schema, path);
    const auto& kind_j = field(j, "kind", path);
    if (!kind_j.is_string()) throw schema_error(path + "/kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();
    const std::string label = j.value("label", std::string("V"));
    if (kind == "weights") {
        if (!g.torus) throw schema_error(path + "/kind", "weights need a torus group");
        std::vector<Weight> ws;
        const auto& arr = field(j, "weights", path);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_array()) throw schema_error(path + "/weights/" + std::to_string(i), "expected an integer vector");
            ws.push_back(arr[i].get<Weight>());
        }
        return Representation::from_weights(*g.torus, std::move(ws), label);
    }
    if (!g.group) throw schema_error(path + "/kind", "'" + kind + "' needs a finite group");
    if (kind == "natural") return Representation::natural(g.group, label);
    if (kind == "irrep") {
        const std::string want = field(j, "irrep", path).get<std::string>();
        for (const auto& s : g.irreps)
            if (s.label() == want) return s;
        throw schema_error(path + "/irrep", "group has no irrep '" + want + "'");
    }
    if (kind == "matrices") {
        const int m = conductor_field(j, path);
        const std::size_t d = size_field(j, "dim", path);
        const auto& imgs = field(j, "images", path);
        std::vector<CMatrix> ms;
        for (std::size_t a = 0; a < imgs.size(); ++a)
            ms.push_back(matrix_from_json(imgs[a], d, m, path + "/images/" + std::to_string(a)));
        return Representation::from_matrices(g.group, std::move(ms), d, label);
    }
    throw schema_error(path + "/kind", "unknown kind '" + kind + "'");
}

/// The simples used for ledgers: the group's irreps, or for a weight group
/// every weight occurring in V^{⊗j}, j <= top.
inline std::vector<Representation> simples_for(const GroupSpec& g, const Representation& v, std::size_t top)
{
    if (!v.is_weight()) {
        if (g.irreps.empty()) throw ValidationError("group '" + g.name + "' lists no irreps");
        return g.irreps;
    }
    std::vector<Weight> seen;
    for (std::size_t k = 0; k <= top; ++k) {
        const Representation vk = v.tensor_power(k, false);
        for (const auto& w : vk.character().weights)
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<Representation> out;
    for (const auto& w : seen) out.push_back(Representation::from_weights(v.torus(), {w}, "chi" + weight_to_string(w)));
    return out;
}

struct LoadedPresentation {
    GroupSpec group;
    Presentation presentation;
};

inline LoadedPresentation load_presentation(const json& j, const std::string& path = "presentation")
{
    expect_schema(j, presentation_schema, path);
    GroupSpec g = load_group(field(j, "group", path), path + "/group");
    Representation v = load_rep(field(j, "rep", path), g, path + "/rep");
    const auto& names_j = field(j, "generators", path);
    if (!names_j.is_array()) throw schema_error(path + "/generators", "expected an array of names");
    auto names = names_j.get<std::vector<std::string>>();
    if (names.size() != v.dim())
        throw schema_error(path + "/generators", "expected " + std::to_string(v.dim()) + " names");
    const std::size_t cutoff = j.contains("cutoff") ? size_field(j, "cutoff", path) : 5;
    const int m = conductor_field(j, path);
    Presentation p(v, names, cutoff);
    const auto& rels = field(j, "relations", path);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const std::string rp = path + "/relations/" + std::to_string(i);
        if (!rels[i].is_string()) throw schema_error(rp, "expected a relation string");
        try {
            p.add_relation(rels[i].get<std::string>(), m);
        } catch (const std::exception& e) {
            throw schema_error(rp, e.what());
        }
    }
    return {std::move(g), std::move(p)};
}

}  // namespace gdeform::io
