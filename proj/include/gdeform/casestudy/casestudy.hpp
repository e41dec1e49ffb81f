#pragma once

// Case-study pipelines and reports.  A report is an ordered JSON document with
// fixed key order and no timestamps, plus a list of verdicts; each verdict
// names the value it expects and where that value comes from.

#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdeform/algebra/onedim.hpp"
#include "gdeform/algebra/tower.hpp"
#include "gdeform/casestudy/io.hpp"
#include "gdeform/casestudy/models.hpp"
#include "gdeform/deform/homfamily.hpp"
#include "gdeform/deform/ledger.hpp"
#include "gdeform/deform/twist.hpp"
#include "gdeform/exact/parametric.hpp"
#include "gdeform/pointscheme/lines.hpp"

namespace gdeform {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "gdeform.report/1";

// Where an expected value comes from.
namespace source {
inline constexpr const char* worked_example = "worked example";
inline constexpr const char* computation = "independent computation";
inline constexpr const char* definition = "definition";
}  // namespace source

struct Verdict {
    std::string name;
    json expected;
    json actual;
    std::string source;
    bool pass = false;
};

class Report {
public:
    explicit Report(std::string kind) { body_["schema"] = report_schema; body_["kind"] = std::move(kind); }

    json& operator[](const std::string& key) { return body_[key]; }
    const json& body() const { return body_; }

    bool check(std::string name, json expected, json actual, std::string src)
    {
        const bool pass = expected == actual;
        verdicts_.push_back({std::move(name), std::move(expected), std::move(actual), std::move(src), pass});
        return pass;
    }
    void flag(std::string message) { flags_.push_back(std::move(message)); }

    const std::vector<Verdict>& verdicts() const { return verdicts_; }
    bool ok() const
    {
        for (const auto& v : verdicts_)
            if (!v.pass) return false;
        return true;
    }

    json to_json() const
    {
        json out = body_;
        out["flags"] = flags_;
        json vs = json::array();
        for (const auto& v : verdicts_)
            vs.push_back({{"name", v.name}, {"expected", v.expected}, {"actual", v.actual}, {"source", v.source},
                          {"pass", v.pass}});
        out["verdicts"] = vs;
        out["ok"] = ok();
        return out;
    }

private:
    json body_ = json::object();
    std::vector<std::string> flags_;
    std::vector<Verdict> verdicts_;
};

// ---- text rendering ---------------------------------------------------------

namespace detail {

inline std::string inline_json(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline bool is_flat(const json& j)
{
    if (!j.is_array()) return !j.is_object();
    for (const auto& x : j)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

inline void render(std::ostringstream& out, const json& j, const std::string& indent)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_flat(v)) out << indent << k << ": " << (v.is_array() ? v.dump() : inline_json(v)) << "\n";
            else {
                out << indent << k << ":\n";
                render(out, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_flat(v)) out << indent << "- " << inline_json(v) << "\n";
            else {
                out << indent << "-\n";
                render(out, v, indent + "  ");
            }
        }
    } else {
        out << indent << inline_json(j) << "\n";
    }
}

}  // namespace detail

inline std::string render_text(const json& report)
{
    std::ostringstream out;
    json body = report;
    json verdicts = body.contains("verdicts") ? body["verdicts"] : json::array();
    body.erase("verdicts");
    detail::render(out, body, "");
    if (!verdicts.empty()) out << "verdicts:\n";
    for (const auto& v : verdicts)
        out << "  " << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>()
            << ": expected " << detail::inline_json(v["expected"]) << " (" << v["source"].get<std::string>()
            << "), got " << detail::inline_json(v["actual"]) << "\n";
    return out.str();
}

// ---- report diff --------------------------------------------------------------

struct DiffEntry {
    std::string path;
    json a, b;
};

namespace detail {

inline void diff_into(const json& a, const json& b, const std::string& path, std::vector<DiffEntry>& out)
{
    if (a.type() != b.type()) {
        out.push_back({path, a, b});
        return;
    }
    if (a.is_object()) {
        std::vector<std::string> keys;
        for (const auto& [k, v] : a.items()) keys.push_back(k);
        for (const auto& [k, v] : b.items())
            if (!a.contains(k)) keys.push_back(k);
        for (const auto& k : keys) {
            const std::string p = path + "/" + k;
            if (!a.contains(k)) out.push_back({p, nullptr, b[k]});
            else if (!b.contains(k)) out.push_back({p, a[k], nullptr});
            else diff_into(a[k], b[k], p, out);
        }
    } else if (a.is_array()) {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string p = path + "/" + std::to_string(i);
            if (i >= a.size()) out.push_back({p, nullptr, b[i]});
            else if (i >= b.size()) out.push_back({p, a[i], nullptr});
            else diff_into(a[i], b[i], p, out);
        }
    } else if (a != b) {
        out.push_back({path, a, b});
    }
}

}  // namespace detail

/// Field-wise differences; reports must share schema, kind and study.
inline std::vector<DiffEntry> diff_reports(const json& a, const json& b)
{
    for (const char* key : {"schema", "kind"})
        if (a.value(key, json()) != b.value(key, json()))
            throw ValidationError(std::string("reports differ in shape: '") + key + "' is " +
                                  a.value(key, json()).dump() + " vs " + b.value(key, json()).dump());
    auto study = [](const json& r) { return r.contains("config") ? r["config"].value("study", json()) : json(); };
    if (study(a) != study(b))
        throw ValidationError("reports differ in shape: study " + study(a).dump() + " vs " + study(b).dump());
    std::vector<DiffEntry> out;
    detail::diff_into(a, b, "", out);
    return out;
}

inline json diff_to_json(const std::vector<DiffEntry>& d)
{
    json out = json::array();
    for (const auto& e : d) out.push_back({{"path", e.path}, {"a", e.a}, {"b", e.b}});
    return out;
}

// ---- shared sections ----------------------------------------------------------

inline json presentation_json(const Presentation& p)
{
    json rels = json::array();
    for (std::size_t deg : p.relation_degrees())
        for (const auto& r : p.relations(deg)) rels.push_back(p.format_relation(deg, r));
    return {{"generators", p.names()}, {"relations", rels}};
}

/// Multiplicities of the simples in a character; "unaccounted" is the
/// dimension the simples do not cover.
inline json character_json(const Character& ch, const std::vector<Representation>& simples)
{
    json out = json::object();
    long covered = 0;
    for (const auto& s : simples) {
        long m = multiplicity_in_character(s, ch);
        if (m != 0) out[s.label()] = m;
        covered += m * static_cast<long>(s.dim());
    }
    const CycScalar deg = ch.degree();
    if (deg != CycScalar(covered)) out["unaccounted"] = (deg - CycScalar(covered)).to_string();
    return out;
}

inline json ledger_json(const Ledger& l)
{
    json out = json::array();
    for (std::size_t k = 0; k <= l.top(); ++k) {
        const auto& d = l.degree(k);
        json entries = json::array();
        for (const auto& e : d.entries)
            if (e.a != 0)
                entries.push_back({{"simple", l.simples()[e.simple].label()}, {"a", e.a}, {"e", e.e}, {"f", e.f}});
        out.push_back({{"degree", k}, {"tensor_dim", d.tensor_dim}, {"ideal_dim", d.ideal_dim}, {"entries", entries}});
    }
    return out;
}

inline json hilbert_json(const std::vector<std::size_t>& h) { return json(h); }

inline std::vector<std::size_t> polynomial_hilbert(std::size_t vars, std::size_t top)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= top; ++k) out.push_back(detail::binomial(vars + k - 1, k));
    return out;
}

inline json orbit_json(const OrbitReport& o)
{
    json seq = json::array();
    for (const auto& p : o.sequence) seq.push_back(p.to_string());
    json out = {{"start", o.start.to_string()}, {"kind", to_string(o.kind)}, {"sequence", seq}};
    if (o.kind == OrbitKind::finite) out["period"] = o.period;
    if (o.translation) {
        json d = json::array();
        for (const auto& x : *o.translation) d.push_back(x.to_string());
        out["translation"] = d;
    }
    return out;
}

inline json equations_json(const PointVariety& v, std::size_t limit = 40)
{
    json eqs = json::array();
    for (std::size_t i = 0; i < v.equations.size() && i < limit; ++i) eqs.push_back(v.equations[i].to_string());
    json out = {{"whole_space", v.whole_space || v.equations.empty()}, {"equation_count", v.equations.size()},
                {"equations", eqs}};
    if (v.determinant) out["determinant"] = v.determinant->to_string();
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

inline json line_structure_json(const SnpLineStructure& s)
{
    json lines = json::array();
    for (const auto& l : s.lines)
        lines.push_back({{"zero_set", l.zero_set},
                         {"on_variety", l.on_variety},
                         {"generic_rank_ok", l.generic_rank},
                         {"classification", l.classification},
                         {"shift", l.shift ? l.shift->to_string() : "unresolved"},
                         {"closed_form_shift", l.closed_form_shift.to_string()}});
    return {{"line_count", s.lines.size()},
            {"fixed_line_count", s.fixed_count},
            {"fixed_zero_set_sizes", s.fixed_sizes},
            {"intersection", s.intersection.to_string()},
            {"intersection_fixed", s.intersection_fixed},
            {"intersection_rank", s.intersection_rank},
            {"lines", lines}};
}

// ---- Clifford degree-3 scan -----------------------------------------------------

/// Rows r ⊗ x_i and x_i ⊗ r spanning the degree-3 part of the ideal.
template <class T>
Matrix<T> degree3_ideal_matrix(const std::vector<std::vector<T>>& rels, std::size_t d)
{
    const std::size_t w3 = d * d * d;
    Matrix<T> m(2 * rels.size() * d, w3);
    std::size_t row = 0;
    for (const auto& r : rels)
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t w = 0; w < d * d; ++w) {
                if (is_zero(r[w])) continue;
                m(row, w * d + i) += r[w];          // r ⊗ x_i
                m(row + 1, i * d * d + w) += r[w];  // x_i ⊗ r
            }
            row += 2;
        }
    return m;
}

/// A(yz + zy) + Bx^2 and its cyclic shifts over rational functions.
inline std::vector<std::vector<FracScalar>> clifford_relations(const FracScalar& a, const FracScalar& b)
{
    std::vector<std::vector<FracScalar>> out;
    for (auto [i, j, sq] : {std::array<std::size_t, 3>{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}) {
        std::vector<FracScalar> v(9);
        v[i * 3 + j] += a;
        v[j * 3 + i] += a;
        v[sq * 3 + sq] += b;
        out.push_back(std::move(v));
    }
    return out;
}

inline ProjectiveLineScan clifford_degree3_scan()
{
    return scan_projective_line([](const FracScalar& a, const FracScalar& b) {
        return degree3_ideal_matrix(clifford_relations(a, b), 3);
    });
}

inline std::vector<P1Point> clifford_expected_degenerate()
{
    const CycScalar w = CycScalar::zeta(3);
    return {{CycScalar(0), CycScalar(1)}, {CycScalar(1), CycScalar(1)}, {CycScalar(1), w}, {CycScalar(1), w * w}};
}

inline bool same_point_set(std::vector<P1Point> a, std::vector<P1Point> b)
{
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        auto it = std::find(b.begin(), b.end(), p);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

// ---- case studies ---------------------------------------------------------------

struct CaseStudyConfig {
    std::string study = "snp1";
    int n = 2;
    std::string stratum = "differential";
    std::vector<std::string> params;  // exact scalars, "w" = zeta_conductor
    int conductor = 3;
    std::size_t cutoff = 5;
    std::size_t samples = 50;
};

inline json config_json(const CaseStudyConfig& c)
{
    return {{"study", c.study},     {"n", c.n},           {"stratum", c.stratum}, {"params", c.params},
            {"conductor", c.conductor}, {"cutoff", c.cutoff}, {"samples", c.samples}};
}

namespace detail {

inline std::vector<CycScalar> parse_params(const CaseStudyConfig& c, std::vector<std::string> defaults)
{
    const auto& src = c.params.empty() ? defaults : c.params;
    if (src.size() != defaults.size())
        throw ValidationError("study '" + c.study + "' expects " + std::to_string(defaults.size()) + " parameter(s)");
    std::vector<CycScalar> out;
    for (const auto& s : src) out.push_back(parse_scalar(s, c.conductor));
    return out;
}

inline json scalars_json(const std::vector<CycScalar>& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

inline json degree_characters(const Presentation& p, const std::vector<Representation>& simples, std::size_t top)
{
    DegreeTower tower(p, top);
    json out = json::array();
    for (std::size_t k = 0; k <= top; ++k)
        out.push_back({{"degree", k}, {"multiplicities", character_json(degree_character(p, k, &tower), simples)}});
    return out;
}

inline void snp1_study(const CaseStudyConfig& c, Report& r)
{
    if (c.n < 2 || c.n > 4) throw ValidationError("snp1 supports 2 <= n <= 4");
    const int n = c.n;
    auto fam = symmetric_group_irreps(n + 1);
    Presentation p;
    std::vector<CycScalar> par;
    bool degenerate = false;
    if (c.stratum == "skew") {
        par = parse_params(c, {"2"});
        p = models::snp1_skew(n, par[0], fam.group, c.cutoff);
        if (par[0].is_zero()) {
            degenerate = true;
            r.flag("a = 0 is degenerate: y_i v = 0");
        }
    } else if (c.stratum == "differential") {
        par = parse_params(c, {"1"});
        p = models::snp1_differential(n, par[0], fam.group, c.cutoff);
        if (par[0].is_zero()) r.flag("c = 0 gives the polynomial ring itself");
    } else if (c.stratum == "full_plane") {
        par = parse_params(c, {"1", "-1", "1"});
        p = models::snp1_family(n, par[0], par[1], par[2], fam.group, c.cutoff);
        const bool skew = par[2].is_zero(), diff = (par[0] + par[1]).is_zero();
        if (par[0].is_zero() && par[1].is_zero() && par[2].is_zero()) throw ValidationError("[A:B:C] = [0:0:0]");
        if ((!skew && !diff) || par[0].is_zero() || par[1].is_zero()) {
            degenerate = true;
            r.flag("[A:B:C] lies on neither stratum (or A B = 0): the Hilbert function drops");
        }
    } else {
        throw ValidationError("unknown stratum '" + c.stratum + "' (skew, differential, full_plane)");
    }
    r["params"] = scalars_json(par);
    r["presentation"] = presentation_json(p);
    auto cert = is_g_stable(p);
    r.check("G-stable", true, cert.stable, source::definition);

    auto h = hilbert_function(p, c.cutoff);
    r["hilbert"] = hilbert_json(h);
    if (!degenerate)
        r.check("Hilbert function of a polynomial ring in n+1 variables", polynomial_hilbert(n + 1, c.cutoff), h,
                source::worked_example);
    r["characters"] = degree_characters(p, fam.irreps, c.cutoff);

    Ledger base = build_ledger(models::snp1_polynomial(n, fam.group, c.cutoff), fam.irreps, 2);
    auto emb = embedding_space(base, {2});
    std::multiset<std::string> factors;
    for (const auto& f : emb.factors) factors.insert(f.to_string());
    DeformPoint pt = canonical_point_of_relations(base, p, 2);
    r["deformation"] = {{"ledger", ledger_json(base)},
                        {"embedding_space", emb.to_string()},
                        {"dim", emb.dim},
                        {"vk_member", vk_membership(base, pt).member}};
    r.check("degree-2 embedding space factors", json(std::vector<std::string>{"Grass(1,1)", "Grass(1,3)"}),
            json(std::vector<std::string>(factors.begin(), factors.end())), source::worked_example);
    r.check("degree-2 embedding space dimension", 2, emb.dim, source::worked_example);

    LinearFormMatrix m(p);
    auto v = point_variety(m);
    json ps = equations_json(v);
    ps["matrix"] = {{"rows", m.rows()}, {"cols", m.cols()}};
    if (c.stratum == "differential" && !par[0].is_zero()) {
        auto lines = snp1_line_structure(n, par[0]);
        ps["lines"] = line_structure_json(lines);
        r.check("line count 2^n - 1", (1 << n) - 1, lines.lines.size(), source::worked_example);
        r.check("every candidate line lies on the point variety", true, lines.all_on_variety, source::computation);
        r.check("pointwise-fixed lines", lines.expected_fixed, lines.fixed_count, source::worked_example);
        r.check("intersection point fixed", true, lines.intersection_fixed, source::worked_example);
        json orbits = json::array();
        for (const auto& l : lines.lines) {
            CVec q = l.base;
            q[n] = 3;
            orbits.push_back(orbit_json(classify_orbit(m, ProjPoint::make(q))));
        }
        orbits.push_back(orbit_json(classify_orbit(m, lines.intersection)));
        r["orbits"] = orbits;
        if (n == 2) {
            Presentation p2 = models::snp1_differential_xyt(par[0], fam.group, c.cutoff);
            auto v2 = point_variety(LinearFormMatrix(p2));
            const std::vector<std::string> vars = {"x0", "y0", "t0"};
            auto x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
            ps["monomial_coordinates"] = presentation_json(p2);
            r.check("determinant in x, y, t coordinates", (y * y * y - x * x * x).normalized().to_string(),
                    v2.equations.empty() ? std::string("0") : v2.equations[0].to_string(), source::worked_example);
            auto xa = MultiPoly::variable(p2.names(), 0), ya = MultiPoly::variable(p2.names(), 1);
            r.check("one-dimensional locus equals (x^2, y^2)", true,
                    compare_graded_ideals(onedim_locus(p2), {xa * xa, ya * ya}, p2.names(), 3).equal,
                    source::worked_example);
        }
        if (n == 3) {
            Presentation p3 = models::snp1_differential_klein(par[0], fam.group, c.cutoff);
            LinearFormMatrix m3(p3);
            auto v3 = point_variety(m3);
            auto sample = sample_curve_points(v3, 4, c.samples);
            const auto& vars = m3.vars();
            auto V = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
            std::vector<MultiPoly> cubics = {V(3) * (V(1) * V(1) - V(2) * V(2)), V(1) * (V(2) * V(2) - V(3) * V(3)),
                                             V(2) * (V(1) * V(1) - V(3) * V(3))};
            std::size_t bad = 0;
            for (const auto& q : sample.points)
                for (const auto& f : cubics)
                    if (!f.eval(q.coords).is_zero()) {
                        ++bad;
                        break;
                    }
            ps["sampled_points"] = sample.points.size();
            ps["sample_planes"] = sample.planes;
            r.check("sampled points found", true, sample.points.size() >= c.samples, source::definition);
            r.check("sampled points violating the three cubics", 0, bad, source::worked_example);
            auto names = p3.names();
            auto b = MultiPoly::variable(names, 1), cc = MultiPoly::variable(names, 2), d = MultiPoly::variable(names, 3);
            r.check("one-dimensional locus equals (bc, bd, cd)", true,
                    compare_graded_ideals(onedim_locus(p3), {b * cc, b * d, cc * d}, names, 3).equal,
                    source::worked_example);
        }
    } else if (c.stratum == "skew" && !degenerate) {
        r.check("point variety is all of P^n", true, v.equations.empty(), source::computation);
        json orbits = json::array();
        CVec q(n + 1);
        for (int i = 0; i <= n; ++i) q[i] = CycScalar(i + 1);
        orbits.push_back(orbit_json(classify_orbit(m, ProjPoint::make(q))));
        r["orbits"] = orbits;
    }
    r["point_scheme"] = ps;
}

inline void clifford_study(const CaseStudyConfig& c, Report& r)
{
    auto g = models::clifford_group();
    r["group_order"] = g->order();
    r.check("group order", 54, g->order(), source::worked_example);
    Presentation fam = models::clifford(CycScalar(1), CycScalar(0), g, c.cutoff);
    auto hf = hom_family(fam.space(), 2, fam.relations(2));
    r["deformation"] = {{"family", hf.description}, {"family_dim", hf.family_dim}};
    r.check("relation family", "P^1", hf.description, source::worked_example);
    if (c.params.empty()) {
        auto scan = clifford_degree3_scan();
        json drops = json::array();
        for (const auto& d : scan.drops) {
            auto rel = models::clifford(d.a, d.b, g, 3);
            drops.push_back({{"point", d.to_string()}, {"hilbert", hilbert_function(rel, 3)}});
        }
        r["scan"] = {{"generic_degree3_dim", 27 - scan.generic_rank}, {"drops", drops},
                     {"unresolved_factors", scan.unresolved_factors.size()}};
        r.check("generic dim A_3", 10, 27 - scan.generic_rank, source::computation);
        json expected = json::array(), actual = json::array();
        for (const auto& p : clifford_expected_degenerate()) expected.push_back(p.to_string());
        for (const auto& p : scan.drops) actual.push_back(p.to_string());
        r.check("degenerate locus", expected,
                same_point_set(scan.drops, clifford_expected_degenerate()) ? expected : actual,
                source::worked_example);
        return;
    }
    auto par = parse_params(c, {"1", "1"});
    if (par[0].is_zero() && par[1].is_zero()) throw ValidationError("[A:B] = [0:0]");
    r["params"] = scalars_json(par);
    Presentation p = models::clifford(par[0], par[1], g, c.cutoff);
    P1Point here = par[0].is_zero() ? P1Point{CycScalar(0), CycScalar(1)} : P1Point{CycScalar(1), par[1] / par[0]};
    for (const auto& d : clifford_expected_degenerate())
        if (d == here) r.flag(here.to_string() + " is a degenerate point of the family");
    r["presentation"] = presentation_json(p);
    r.check("G-stable", true, is_g_stable(p).stable, source::definition);
    r["hilbert"] = hilbert_json(hilbert_function(p, c.cutoff));
    r["point_scheme"] = equations_json(point_variety(LinearFormMatrix(p)));
}

inline void quantum_study(const CaseStudyConfig& c, Report& r)
{
    if (c.n != 2) throw ValidationError("quantum supports n = 2");
    auto par = parse_params(c, {"1", "1"});
    if (par[0].is_zero() && par[1].is_zero()) throw ValidationError("[a:b] = [0:0]");
    r["params"] = scalars_json(par);
    const bool degenerate = par[0].is_zero() || par[1].is_zero();
    if (degenerate) r.flag("a b = 0: the relation is a monomial and the Hilbert function drops");
    Presentation p = models::quantum_plane(par[0], par[1], c.cutoff);
    r["presentation"] = presentation_json(p);
    r.check("G-stable", true, is_g_stable(p).stable, source::definition);
    auto h = hilbert_function(p, c.cutoff);
    r["hilbert"] = hilbert_json(h);
    auto simples = models::quantum_simples(2, static_cast<long>(c.cutoff));
    r["characters"] = degree_characters(p, simples, c.cutoff);
    if (!degenerate) {
        r.check("Hilbert function", polynomial_hilbert(2, c.cutoff), h, source::worked_example);
        json expected = json::array();
        for (std::size_t k = 0; k <= c.cutoff; ++k) {
            json row = json::object();
            for (std::size_t i = 0; i <= k; ++i)
                row["chi" + weight_to_string({static_cast<long>(k - i), static_cast<long>(i)})] = 1;
            expected.push_back({{"degree", k}, {"multiplicities", row}});
        }
        r.check("degree characters are sums of chi(k-i,i)", expected, r["characters"], source::worked_example);
    }
    Ledger l = build_ledger(p, simples, 2);
    auto emb = embedding_space(l, {2});
    r["deformation"] = {{"ledger", ledger_json(l)}, {"embedding_space", emb.to_string()}, {"dim", emb.dim}};
    r.check("degree-2 embedding space", "Grass(1,2)", emb.to_string(), source::computation);
    r["point_scheme"] = equations_json(point_variety(LinearFormMatrix(p)));
}

inline void heisenberg_twist_study(const CaseStudyConfig& c, Report& r)
{
    auto h2 = heisenberg(2);
    Presentation comm = models::heisenberg_polynomial(h2, c.cutoff);
    CMatrix e2 = h2.natural.generator_images()[1];
    Presentation tw = twist(comm, e2);
    r["presentation"] = presentation_json(comm);
    r["twist"] = presentation_json(tw);
    auto rc = character_json(relation_character(comm, 2), h2.irreps);
    auto rt = character_json(relation_character(tw, 2), h2.irreps);
    r["relation_characters"] = {{"polynomial", rc}, {"twist", rt}};
    r.check("relation character of C[x,y]", json{{"chi_1,1", 1}}, rc, source::worked_example);
    r.check("relation character of the twist", json{{"chi_0,1", 1}}, rt, source::worked_example);
    auto h = hilbert_function(comm, c.cutoff), ht = hilbert_function(tw, c.cutoff);
    r["hilbert"] = {{"polynomial", h}, {"twist", ht}};
    r.check("twist preserves the Hilbert function", h, ht, source::definition);
    r.check("degree-2 graded G-modules differ", true, rc != rt, source::worked_example);
}

}  // namespace detail

inline Report run_casestudy(const CaseStudyConfig& c)
{
    if (c.cutoff < 2) throw ValidationError("cutoff must be at least 2");
    Report r("casestudy");
    r["config"] = config_json(c);
    if (c.study == "snp1") detail::snp1_study(c, r);
    else if (c.study == "clifford") detail::clifford_study(c, r);
    else if (c.study == "quantum") detail::quantum_study(c, r);
    else if (c.study == "heisenberg_twist") detail::heisenberg_twist_study(c, r);
    else throw ValidationError("unknown study '" + c.study + "' (snp1, clifford, quantum, heisenberg_twist)");
    return r;
}

}  // namespace gdeform
