#include "trop/cli.hpp"

#include <CLI11.hpp>

#include <future>
#include <sstream>

#include "trop/cycle.hpp"
#include "trop/degree.hpp"
#include "trop/io.hpp"
#include "trop/m0n.hpp"
#include "trop/util.hpp"

namespace trop {

namespace {

std::string cycle_display(const TropicalCycle& c) {
    if (c.weights.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [id, w] : c.weights) {
        if (w == 0) continue;
        if (!first) out << " + ";
        out << rat_display(w) << "*" << id;
        first = false;
    }
    return first ? std::string("0") : out.str();
}

std::string bool_display(bool b) { return b ? "true" : "false"; }

} // namespace

Rat degree_at_region(const ForgetfulMap& fm, const TropicalCycle& c, M12Region region,
                     int index) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        try {
            return degree_at(fm.degree, c, m12_region_target(region),
                             m12_sample(region, index + 97 * attempt));
        } catch (const error& e) {
            if (e.code() != errc::non_generic_sample) throw;
        }
    }
    fail(errc::non_generic_sample, "no generic sample found in the region");
}

Report case_study_genus1() {
    Report rep;
    rep.command = "case-study genus1";
    GenusOneCaseStudy cs = build_case_study();

    // structure counts
    std::map<char, int> ray_count, face_count;
    for (auto& [id, kind] : cs.tables.ray_kind) ray_count[kind]++;
    for (auto& [id, kind] : cs.tables.face_kind) face_count[kind]++;
    auto counts = [](const std::map<char, int>& m) {
        std::string s;
        for (auto& [k, v] : m) {
            if (!s.empty()) s += ",";
            s += std::to_string(v);
        }
        return s;
    };
    rep.check("ray count by kind a,b,c,d", "6,6,4,4", counts(ray_count), "reference");
    rep.check("face count by kind 1..5", "12,12,12,3,6", counts(face_count), "reference");

    // incidence profile: for each ray kind, how many faces of each kind touch a ray
    std::map<char, std::map<char, int>> incidence;
    for (auto& [face, fk] : cs.tables.face_kind)
        for (auto& r : cs.adm->cone(face).rays) incidence[cs.tables.ray_kind.at(r)][fk]++;
    auto profile = [&](char rk) {
        std::string s;
        for (auto& [fk, total] : incidence[rk]) {
            if (!s.empty()) s += " ";
            s += std::string(1, fk) + "x" + std::to_string(total / ray_count[rk]);
        }
        return s;
    };
    rep.check("faces at each a-ray", "1x2 4x1 5x1", profile('a'), "reference");
    rep.check("faces at each b-ray", "2x2 3x2 5x1", profile('b'), "reference");
    rep.check("faces at each c-ray", "1x3 2x3", profile('c'), "reference");
    rep.check("faces at each d-ray", "3x3", profile('d'), "reference");

    // fundamentalish weights
    TropicalCycle fund = fundamentalish(cs);
    std::string weights;
    for (char k : {'1', '2', '3', '4', '5'}) {
        if (!weights.empty()) weights += ",";
        weights += rat_display(cs.tables.fundamentalish_weight.at(k));
    }
    rep.check("fundamentalish weights by face kind", "1,1,1/2,1/3,1", weights, "reference");
    rep.check("fundamentalish balanced", "true",
              bool_display(is_balanced(fund, cs.adm_structure).balanced), "derived");

    // tropical line bundle gate for the strict multiple of the psi function
    PLFunction psi3 = pl_scale(3, psi1_function(cs));
    DivisorCheck gate = is_tropical_divisor(cs.adm_structure, psi3, all_cells(*cs.adm));
    rep.check("psi divisor has sections on every cell", "true", bool_display(gate.tropical),
              "derived");

    // the psi cycle
    TropicalCycle psi_cycle = psi1_cap_fundamentalish(cs);
    std::map<char, std::set<std::string>> coeff_by_kind;
    for (auto& [ray, kind] : cs.tables.ray_kind)
        coeff_by_kind[kind].insert(rat_display(psi_cycle.weight(ray)));
    auto common = [&](char k) {
        return coeff_by_kind[k].size() == 1 ? *coeff_by_kind[k].begin() : std::string("mixed");
    };
    rep.check("psi coefficient on a-rays", "2/3", common('a'), "reference");
    rep.check("psi coefficient on b-rays", "1", common('b'), "reference");
    rep.check("psi coefficient on c-rays", "0", common('c'), "reference");
    rep.check("psi coefficient on d-rays", "0", common('d'), "reference");
    rep.check("psi cycle balanced", "true",
              bool_display(is_balanced(psi_cycle, cs.adm_structure).balanced), "derived");
    rep.note("psi_cycle", cycle_to_json(psi_cycle));

    // pushforwards
    ForgetfulMap phi1 = forgetful_phi(cs, 1);
    ForgetfulMap phi2 = forgetful_phi(cs, 2);
    TropicalCycle push1 = pushforward(phi1.morphism, psi_cycle);
    TropicalCycle push2 = pushforward(phi2.morphism, psi_cycle);
    rep.check("phi1 pushforward of the psi cycle", "12*irr", cycle_display(push1), "reference");
    rep.check("phi2 pushforward of the psi cycle", "3*E + 6*irr", cycle_display(push2),
              "reference");

    // degrees over three samples per region
    struct RegionCase {
        const char* name;
        M12Region region;
    };
    const RegionCase regions[] = {{"same-vertex", M12Region::same_vertex},
                                  {"fold-outer", M12Region::fold_outer},
                                  {"fold-inner", M12Region::fold_inner}};
    for (auto& [name, fm, expected] :
         std::initializer_list<std::tuple<const char*, const ForgetfulMap*, const char*>>{
             {"phi1", &phi1, "24"}, {"phi2", &phi2, "6"}}) {
        for (auto& rc : regions) {
            std::vector<Rat> degs(3);
            parallel_for(3, [&](size_t s) {
                degs[s] = degree_at_region(*fm, fund, rc.region, static_cast<int>(s));
            });
            std::set<std::string> seen;
            for (auto& d : degs) seen.insert(rat_display(d));
            std::string actual = seen.size() == 1 ? *seen.begin() : "mixed";
            rep.check(std::string("degree ") + name + " over " + rc.name, expected, actual,
                      "reference");
        }
    }

    // consistency identities against the reference constants on the target
    TropicalCycle id1 = cycle_scale(24, cs.trop_psi);
    TropicalCycle id2 = cycle_scale(6, cycle_add(cs.trop_psi, cs.trop_w));
    rep.check("phi1 pushforward = 24 * reference psi", "true",
              bool_display(cycle_equal(push1, id1)), "reference");
    rep.check("phi2 pushforward = 6 * (reference psi + reference W)", "true",
              bool_display(cycle_equal(push2, id2)), "reference");
    return rep;
}

namespace {

int emit_report(const Report& rep, const std::string& format, std::ostream& out) {
    out << (format == "json" ? rep.render_json() : rep.render_text());
    return rep.all_pass() ? 0 : 2;
}

int cmd_m0n(int n, const std::string& emit, const std::vector<int>& psis, bool degree,
            const std::string& format, const std::string& out_file, std::ostream& out) {
    Report rep;
    rep.command = "m0n";
    ComplexPtr cx = build_m0n(n);
    rep.note("n", n);
    rep.note("rays", cx->rays().size());
    rep.note("maximal_cones", cx->cones_of_dim(cx->dim()).size());
    if (!emit.empty()) {
        save_json_file(emit, complex_to_json(*cx));
        rep.note("emitted", emit);
    }
    if (!psis.empty()) {
        for (int i : psis)
            if (i < 1 || i > n) fail(errc::invalid_marks, "psi index out of range");
        AffineStructure a = cross_ratio_structure(cx, n);
        if (degree) {
            std::vector<int> exps(n, 0);
            for (int i : psis) exps[i - 1]++;
            Rat d = psi_degree(cx, a, n, exps);
            rep.note("degree", rat_display(d));
        } else {
            TropicalCycle c = fundamental_class(cx);
            for (int i : psis) c = intersect(a, psi_representative(cx, n, i), c);
            rep.note("cycle", cycle_to_json(c));
            if (!out_file.empty()) save_json_file(out_file, cycle_to_json(c));
            if (c.k >= 1)
                rep.check("cap product balanced", "true",
                          bool_display(is_balanced(c, a).balanced), "derived");
        }
    }
    return emit_report(rep, format, out);
}

int cmd_check_balanced(const std::string& complex_file, const std::string& affine_file,
                       const std::string& cycle_file, const std::string& format,
                       std::ostream& out) {
    Report rep;
    rep.command = "check-balanced";
    ComplexPtr cx = complex_from_json(load_json_file(complex_file));
    AffineStructure a = affine_from_json(load_json_file(affine_file), cx);
    TropicalCycle c = cycle_from_json(load_json_file(cycle_file), cx);
    BalanceReport br = is_balanced(c, a);
    rep.check("balanced", "true", bool_display(br.balanced), "derived");
    if (!br.balanced) {
        rep.note("failing_cone", br.cone);
        rep.note("witness", plfn_to_json(br.witness));
        rep.note("pairing", rat_to_string(br.pairing));
    }
    return emit_report(rep, format, out);
}

int cmd_intersect(const std::string& complex_file, const std::string& affine_file,
                  const std::string& plfn_file, const std::string& cycle_file,
                  const std::string& out_file, const std::string& format, std::ostream& out) {
    Report rep;
    rep.command = "intersect";
    ComplexPtr cx = complex_from_json(load_json_file(complex_file));
    AffineStructure a = affine_from_json(load_json_file(affine_file), cx);
    PLFunction phi = plfn_from_json(load_json_file(plfn_file), *cx);
    TropicalCycle c = cycle_from_json(load_json_file(cycle_file), cx);
    TropicalCycle result = intersect(a, phi, c);
    rep.note("cycle", cycle_to_json(result));
    if (!out_file.empty()) save_json_file(out_file, cycle_to_json(result));
    if (result.k >= 1)
        rep.check("product balanced", "true", bool_display(is_balanced(result, a).balanced),
                  "derived");
    return emit_report(rep, format, out);
}

int cmd_pushforward(const std::string& source_file, const std::string& target_file,
                    const std::string& morphism_file, const std::string& cycle_file,
                    const std::string& affine_source, const std::string& affine_target,
                    const std::string& out_file, const std::string& format, std::ostream& out) {
    Report rep;
    rep.command = "pushforward";
    ComplexPtr src = complex_from_json(load_json_file(source_file));
    ComplexPtr tgt = complex_from_json(load_json_file(target_file));
    ComplexMorphism f = morphism_from_json(load_json_file(morphism_file), src, tgt);
    TropicalCycle c = cycle_from_json(load_json_file(cycle_file), src);
    AffineStructure a_src =
        affine_source.empty() ? constants_only(src)
                              : affine_from_json(load_json_file(affine_source), src);
    AffineStructure a_tgt =
        affine_target.empty() ? constants_only(tgt)
                              : affine_from_json(load_json_file(affine_target), tgt);
    bool linear = check_linearity(f, a_src, a_tgt);
    rep.check("linearity certificate", "true", bool_display(linear),
              affine_target.empty() ? "definition" : "derived");
    if (linear) {
        f.certified_linear = true;
        TropicalCycle result = pushforward(f, c);
        rep.note("cycle", cycle_to_json(result));
        if (!out_file.empty()) save_json_file(out_file, cycle_to_json(result));
    }
    return emit_report(rep, format, out);
}

int cmd_degree(const std::string& source_file, const std::string& target_file,
               const std::string& morphism_file, const std::string& cycle_file,
               const std::string& cone, const std::string& sample_str,
               const std::string& format, std::ostream& out) {
    Report rep;
    rep.command = "degree";
    ComplexPtr src = complex_from_json(load_json_file(source_file));
    ComplexPtr tgt = complex_from_json(load_json_file(target_file));
    ComplexMorphism f = morphism_from_json(load_json_file(morphism_file), src, tgt);
    TropicalCycle c = cycle_from_json(load_json_file(cycle_file), src);
    std::vector<Rat> sample;
    std::stringstream ss(sample_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) sample.push_back(rat_from_string(tok));
    DegreeProblem p = degree_problem(f);
    Rat d = degree_at(p, c, cone, sample);
    rep.note("degree", rat_display(d));
    return emit_report(rep, format, out);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tropical intersection theory on cone complexes"};
    app.require_subcommand(1);
    std::string format = "text";

    auto* m0n = app.add_subcommand("m0n", "moduli fans of rational marked tropical curves");
    int n = 5;
    std::string emit, out_file;
    std::vector<int> psis;
    bool degree_flag = false;
    std::string cap = "fundamental";
    m0n->add_option("--n", n, "number of marks (4..8)")->required();
    m0n->add_option("--emit", emit, "write the complex to this file");
    m0n->add_option("--psi", psis, "cap with a psi representative (repeatable)");
    m0n->add_option("--cap", cap, "cycle to cap against (fundamental)");
    m0n->add_flag("--degree", degree_flag, "report the vertex weight of the full cap");
    m0n->add_option("--report", format, "output format: text or json");
    m0n->add_option("--out", out_file, "write the resulting cycle to this file");

    auto* chk = app.add_subcommand("check-balanced", "verify the balancing condition");
    std::string complex_file, affine_file, cycle_file, plfn_file;
    chk->add_option("--complex", complex_file)->required();
    chk->add_option("--affine", affine_file)->required();
    chk->add_option("--cycle", cycle_file)->required();
    chk->add_option("--report", format);

    auto* isec = app.add_subcommand("intersect", "cap a divisor against a cycle");
    isec->add_option("--complex", complex_file)->required();
    isec->add_option("--affine", affine_file)->required();
    isec->add_option("--plfn", plfn_file)->required();
    isec->add_option("--cycle", cycle_file)->required();
    isec->add_option("--out", out_file);
    isec->add_option("--report", format);

    auto* push = app.add_subcommand("pushforward", "stacky pushforward along a morphism");
    std::string source_file, target_file, morphism_file, affine_source, affine_target;
    push->add_option("--source", source_file)->required();
    push->add_option("--target", target_file)->required();
    push->add_option("--morphism", morphism_file)->required();
    push->add_option("--cycle", cycle_file)->required();
    push->add_option("--affine-source", affine_source);
    push->add_option("--affine-target", affine_target);
    push->add_option("--out", out_file);
    push->add_option("--report", format);

    auto* deg = app.add_subcommand("degree", "local degree sum over a sample point");
    std::string cone, sample;
    deg->add_option("--source", source_file)->required();
    deg->add_option("--target", target_file)->required();
    deg->add_option("--morphism", morphism_file)->required();
    deg->add_option("--cycle", cycle_file)->required();
    deg->add_option("--cone", cone, "target cone id")->required();
    deg->add_option("--sample", sample, "comma-separated rational coordinates")->required();
    deg->add_option("--report", format);

    auto* study = app.add_subcommand("case-study", "built-in reproductions");
    std::string which = "genus1";
    study->add_option("name", which, "case study name (genus1)");
    study->add_option("--report", format);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (format != "text" && format != "json") {
        err << "unknown report format '" + format + "'\n";
        return 1;
    }

    try {
        if (m0n->parsed())
            return cmd_m0n(n, emit, psis, degree_flag, format, out_file, out);
        if (chk->parsed())
            return cmd_check_balanced(complex_file, affine_file, cycle_file, format, out);
        if (isec->parsed())
            return cmd_intersect(complex_file, affine_file, plfn_file, cycle_file, out_file,
                                 format, out);
        if (push->parsed())
            return cmd_pushforward(source_file, target_file, morphism_file, cycle_file,
                                   affine_source, affine_target, out_file, format, out);
        if (deg->parsed())
            return cmd_degree(source_file, target_file, morphism_file, cycle_file, cone, sample,
                              format, out);
        if (study->parsed()) {
            if (which != "genus1") {
                err << "unknown case study '" + which + "'\n";
                return 1;
            }
            return emit_report(case_study_genus1(), format, out);
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 1;
}

} // namespace trop
