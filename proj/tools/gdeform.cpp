// gdeform: command-line front end for the case studies and the library's
// decomposition, deformation, Hilbert and point-scheme computations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdeform/casestudy/casestudy.hpp"

using namespace gdeform;

namespace {

struct Output {
    std::string format = "text";
    std::string path;
};

int emit(const Report& r, const Output& o)
{
    const json j = r.to_json();
    const std::string text = o.format == "json" ? j.dump(2) + "\n" : render_text(j);
    if (o.path.empty()) std::cout << text;
    else {
        std::ofstream out(o.path);
        if (!out) throw ValidationError("cannot write '" + o.path + "'");
        out << text;
    }
    return r.ok() ? 0 : 1;
}

json multiplicity_table(const Representation& w, const std::vector<Representation>& simples)
{
    return character_json(w.character(), simples);
}

Report cmd_decompose(const std::string& group_file, const std::string& rep_file, std::size_t k)
{
    auto g = io::load_group(io::read_json(group_file), group_file);
    auto v = io::load_rep(io::read_json(rep_file), g, rep_file);
    auto simples = io::simples_for(g, v, std::max<std::size_t>(k, 2));
    Report r("decompose");
    r["input"] = {{"group", g.name}, {"rep", v.label()}, {"dim", v.dim()}, {"degree", k}};
    r["tensor_power"] = multiplicity_table(v.tensor_power(k, false), simples);
    if (k >= 2) {
        r["wedge2"] = multiplicity_table(v.wedge2(), simples);
        r["sym2"] = multiplicity_table(v.sym2(), simples);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
    Presentation poly(v, names, std::max<std::size_t>(k, 2));
    models::add_commutators(poly, v.dim());
    Ledger l = build_ledger(poly, simples, k);
    r["polynomial_ledger"] = ledger_json(l);
    return r;
}

Report cmd_hilbert(const std::string& file, std::size_t cutoff)
{
    auto lp = io::load_presentation(io::read_json(file), file);
    const auto& p = lp.presentation;
    Report r("hilbert");
    r["presentation"] = presentation_json(p);
    auto cert = is_g_stable(p);
    r["g_stable"] = cert.stable;
    if (!cert.stable) r["g_stable_failure"] = cert.message;
    r["hilbert"] = hilbert_function(p, cutoff);
    if (cert.stable && !p.space().is_weight() && lp.group.irreps.empty()) {
        r["characters"] = "not computed: the group file lists no irreps";
    } else if (cert.stable) {
        auto simples = io::simples_for(lp.group, p.space(), cutoff);
        DegreeTower tower(p, cutoff);
        json chars = json::array();
        for (std::size_t k = 0; k <= cutoff; ++k)
            chars.push_back({{"degree", k}, {"multiplicities", character_json(degree_character(p, k, &tower), simples)}});
        r["characters"] = chars;
    }
    return r;
}

Report cmd_deform(const std::string& file, std::size_t degree, std::size_t samples)
{
    auto lp = io::load_presentation(io::read_json(file), file);
    const auto& p = lp.presentation;
    auto simples = io::simples_for(lp.group, p.space(), degree);
    Ledger l = build_ledger(p, simples, degree);
    Report r("deform");
    r["presentation"] = presentation_json(p);
    r["ledger"] = ledger_json(l);
    std::vector<std::size_t> degrees;
    for (std::size_t k = 2; k <= degree; ++k) degrees.push_back(k);
    auto emb = embedding_space(l, degrees);
    r["embedding_space"] = {{"space", emb.to_string()}, {"dim", emb.dim}};
    DeformPoint pt = canonical_point(l, p, degree);
    json blocks = json::object();
    for (const auto& [k, per] : pt.blocks) {
        json b = json::object();
        for (const auto& [i, m] : per) {
            json rows = json::array();
            for (std::size_t a = 0; a < m.rows(); ++a) {
                json row = json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(a, c).to_string());
                rows.push_back(row);
            }
            b[simples[i].label()] = rows;
        }
        blocks[std::to_string(k)] = b;
    }
    r["point"] = blocks;
    auto cert = vk_membership(l, pt);
    r["vk_membership"] = {{"member", cert.member}, {"message", cert.message}};
    r.check("point lies in V_k", true, cert.member, source::definition);
    if (samples > 0 && degree >= 2) {
        auto tf = twist_family_check(l, samples);
        r["twist_family"] = {{"expected_dim", tf.expected_dim}, {"family_dim", tf.family_dim},
                             {"hilbert_preserved", tf.hilbert_preserved}, {"points_distinct", tf.points_distinct}};
        r.check("twists preserve the Hilbert function", true, tf.hilbert_preserved, source::definition);
    }
    return r;
}

Report cmd_pointscheme(const Presentation& p, std::size_t samples)
{
    Report r("pointscheme");
    r["presentation"] = presentation_json(p);
    LinearFormMatrix m(p);
    auto v = point_variety(m);
    r["matrix"] = {{"rows", m.rows()}, {"cols", m.cols()}};
    r["point_variety"] = equations_json(v);
    if (samples > 0 && m.cols() == 4 && !v.equations.empty()) {
        auto s = sample_curve_points(v, 4, samples);
        json pts = json::array();
        for (const auto& q : s.points) pts.push_back(orbit_json(classify_orbit(m, q)));
        r["sampled_orbits"] = pts;
    }
    return r;
}

int run(int argc, char** argv)
{
    CLI::App app{"Equivariant deformations, Hilbert functions and point schemes of graded algebras"};
    app.require_subcommand(1);
    Output out;
    auto add_output = [&](CLI::App* c) {
        c->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out", out.path, "write the report to this file");
    };

    std::string group_file, rep_file, presentation_file;
    std::size_t degree = 2, cutoff = 5, samples = 0;
    CaseStudyConfig cfg;
    std::string params;

    auto* decompose = app.add_subcommand("decompose", "multiplicities in V^{⊗k}, V∧V, Sym²V and the ledger of C[V]");
    decompose->add_option("--group", group_file, "group JSON")->required();
    decompose->add_option("--rep", rep_file, "representation JSON")->required();
    decompose->add_option("--degree", degree, "tensor degree k");
    add_output(decompose);

    auto* deform = app.add_subcommand("deform", "ledger, embedding space and canonical point of a presentation");
    deform->add_option("--presentation", presentation_file, "presentation JSON")->required();
    deform->add_option("--degree", degree, "top degree");
    deform->add_option("--samples", samples, "random twists to sample");
    add_output(deform);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and degree characters");
    hilbert->add_option("--presentation", presentation_file, "presentation JSON")->required();
    hilbert->add_option("--cutoff", cutoff, "top degree");
    add_output(hilbert);

    auto add_study = [&](CLI::App* c) {
        c->add_option("--study", cfg.study, "snp1, clifford, quantum or heisenberg_twist");
        c->add_option("--n", cfg.n, "size parameter");
        c->add_option("--stratum", cfg.stratum, "skew, differential or full_plane");
        c->add_option("--params", params, "comma-separated exact scalars; w is a primitive cube root of unity");
        c->add_option("--cutoff", cfg.cutoff, "top degree (default 5)");
        c->add_option("--samples", cfg.samples, "sample count");
    };
    auto* pointscheme = app.add_subcommand("pointscheme", "point variety, successor orbits, sampled points");
    pointscheme->add_option("--presentation", presentation_file, "presentation JSON (otherwise a study)");
    add_study(pointscheme);
    add_output(pointscheme);

    auto* casestudy = app.add_subcommand("casestudy", "run a case study with verdicts");
    add_study(casestudy);
    add_output(casestudy);

    std::string diff_a, diff_b;
    auto* diff = app.add_subcommand("diff", "field-wise diff of two JSON reports");
    diff->add_option("a", diff_a, "first report")->required();
    diff->add_option("b", diff_b, "second report")->required();
    add_output(diff);

    CLI11_PARSE(app, argc, argv);

    if (!params.empty()) {
        std::stringstream ss(params);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.params.push_back(item);
    }

    if (*decompose) return emit(cmd_decompose(group_file, rep_file, degree), out);
    if (*deform) return emit(cmd_deform(presentation_file, degree, samples), out);
    if (*hilbert) return emit(cmd_hilbert(presentation_file, cutoff), out);
    if (*pointscheme) {
        if (!presentation_file.empty())
            return emit(cmd_pointscheme(io::load_presentation(io::read_json(presentation_file), presentation_file)
                                            .presentation,
                                        cfg.samples),
                        out);
        Report r = run_casestudy(cfg);
        Report ps("pointscheme");
        ps["config"] = r.body().at("config");
        if (r.body().contains("point_scheme")) ps["point_scheme"] = r.body().at("point_scheme");
        if (r.body().contains("orbits")) ps["orbits"] = r.body().at("orbits");
        return emit(ps, out);
    }
    if (*casestudy) return emit(run_casestudy(cfg), out);
    if (*diff) {
        auto d = diff_reports(io::read_json(diff_a), io::read_json(diff_b));
        Report r("diff");
        r["a"] = diff_a;
        r["b"] = diff_b;
        r["differences"] = diff_to_json(d);
        r.check("reports agree", 0, d.size(), source::definition);
        return emit(r, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "gdeform: " << e.what() << "\n";
        return 3;
    }
}
