#include "trop/io.hpp"

#include <fstream>

namespace trop {

namespace {

void expect(bool cond, const std::string& path, const std::string& msg) {
    if (!cond) fail(errc::schema_error, path + ": " + msg);
}

std::string get_string(const ordered_json& j, const std::string& path) {
    expect(j.is_string(), path, "expected a string");
    return j.get<std::string>();
}

Rat get_rational(const ordered_json& j, const std::string& path) {
    expect(j.is_string(), path, "expected a rational \"p/q\" string");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const error& e) {
        fail(errc::schema_error, path + ": " + e.what());
    }
}

long get_positive_int(const ordered_json& j, const std::string& path) {
    expect(j.is_number_integer(), path, "expected an integer");
    long v = j.get<long>();
    expect(v >= 1, path, "expected a positive integer");
    return v;
}

} // namespace

ordered_json complex_to_json(const ConeComplex& cx) {
    ordered_json j;
    j["rays"] = ordered_json::array();
    for (auto& r : cx.rays()) j["rays"].push_back({{"id", r.id}, {"label", r.label}});
    j["cones"] = ordered_json::array();
    for (auto& c : cx.cones()) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["rays"] = c.rays;
        jc["aut"] = c.aut_order;
        j["cones"].push_back(std::move(jc));
    }
    return j;
}

ComplexPtr complex_from_json(const ordered_json& j) {
    expect(j.is_object(), "$", "expected an object");
    expect(j.contains("rays") && j["rays"].is_array(), "$.rays", "expected an array");
    expect(j.contains("cones") && j["cones"].is_array(), "$.cones", "expected an array");
    std::vector<Ray> rays;
    for (size_t i = 0; i < j["rays"].size(); ++i) {
        auto& jr = j["rays"][i];
        std::string path = "$.rays[" + std::to_string(i) + "]";
        expect(jr.is_object() && jr.contains("id"), path, "expected an object with an id");
        Ray r;
        r.id = get_string(jr["id"], path + ".id");
        if (jr.contains("label")) r.label = get_string(jr["label"], path + ".label");
        rays.push_back(std::move(r));
    }
    std::vector<Cone> cones;
    for (size_t i = 0; i < j["cones"].size(); ++i) {
        auto& jc = j["cones"][i];
        std::string path = "$.cones[" + std::to_string(i) + "]";
        expect(jc.is_object() && jc.contains("id") && jc.contains("rays"), path,
               "expected an object with id and rays");
        Cone c;
        c.id = get_string(jc["id"], path + ".id");
        expect(jc["rays"].is_array(), path + ".rays", "expected an array");
        for (size_t k = 0; k < jc["rays"].size(); ++k)
            c.rays.push_back(get_string(jc["rays"][k], path + ".rays[" + std::to_string(k) + "]"));
        if (jc.contains("aut")) c.aut_order = get_positive_int(jc["aut"], path + ".aut");
        cones.push_back(std::move(c));
    }
    try {
        return build_complex(std::move(rays), std::move(cones));
    } catch (const error& e) {
        fail(errc::schema_error, std::string("$: ") + e.what());
    }
}

ordered_json plfn_to_json(const PLFunction& phi) {
    ordered_json j;
    j["slopes"] = ordered_json::object();
    for (auto& [r, v] : phi.ray_values) j["slopes"][r] = rat_to_string(v);
    j["constant"] = rat_to_string(phi.constant);
    j["domain"] = std::vector<std::string>(phi.domain.begin(), phi.domain.end());
    return j;
}

PLFunction plfn_from_json(const ordered_json& j, const ConeComplex& cx) {
    expect(j.is_object(), "$", "expected an object");
    PLFunction phi;
    if (j.contains("slopes")) {
        expect(j["slopes"].is_object(), "$.slopes", "expected an object");
        for (auto& [r, v] : j["slopes"].items()) {
            expect(cx.has_ray(r), "$.slopes." + r, "unknown ray '" + r + "'");
            Rat val = get_rational(v, "$.slopes." + r);
            if (val != 0) phi.ray_values[r] = val;
        }
    }
    if (j.contains("constant")) phi.constant = get_rational(j["constant"], "$.constant");
    expect(j.contains("domain") && j["domain"].is_array(), "$.domain", "expected an array");
    for (size_t i = 0; i < j["domain"].size(); ++i) {
        std::string id = get_string(j["domain"][i], "$.domain[" + std::to_string(i) + "]");
        expect(cx.has_cone(id), "$.domain[" + std::to_string(i) + "]", "unknown cone '" + id + "'");
        phi.domain.insert(id);
    }
    expect(domain_up_closed(cx, phi.domain), "$.domain", "domain is not a union of open stars");
    return phi;
}

ordered_json affine_to_json(const AffineStructure& a) {
    ordered_json j = ordered_json::object();
    for (auto& [cone, gens] : a.gens_at) {
        ordered_json list = ordered_json::array();
        for (size_t gi : gens) list.push_back(plfn_to_json(a.pool[gi]));
        j[cone] = std::move(list);
    }
    return j;
}

AffineStructure affine_from_json(const ordered_json& j, const ComplexPtr& cx) {
    expect(j.is_object(), "$", "expected an object mapping cone ids to generator lists");
    AffineStructure a;
    a.complex = cx;
    for (auto& [cone, list] : j.items()) {
        expect(cx->has_cone(cone), "$." + cone, "unknown cone '" + cone + "'");
        expect(list.is_array(), "$." + cone, "expected an array of functions");
        std::vector<size_t> idx;
        for (auto& jf : list) {
            PLFunction f = plfn_from_json(jf, *cx);
            expect(f.strict(), "$." + cone, "generators must have integer slopes");
            idx.push_back(a.pool.size());
            a.pool.push_back(std::move(f));
        }
        a.gens_at[cone] = std::move(idx);
    }
    return a;
}

ordered_json cycle_to_json(const TropicalCycle& c) {
    ordered_json j;
    j["dim"] = c.k;
    j["weights"] = ordered_json::object();
    for (auto& [id, w] : c.weights) j["weights"][id] = rat_to_string(w);
    return j;
}

TropicalCycle cycle_from_json(const ordered_json& j, const ComplexPtr& cx) {
    expect(j.is_object() && j.contains("dim"), "$", "expected an object with dim");
    expect(j["dim"].is_number_integer(), "$.dim", "expected an integer");
    TropicalCycle c;
    c.complex = cx;
    c.k = j["dim"].get<int>();
    expect(c.k >= 0, "$.dim", "dimension must be nonnegative");
    if (j.contains("weights")) {
        expect(j["weights"].is_object(), "$.weights", "expected an object");
        for (auto& [id, v] : j["weights"].items()) {
            expect(cx->has_cone(id), "$.weights." + id, "unknown cone '" + id + "'");
            expect(cx->cone(id).dim() == c.k, "$.weights." + id,
                   "cone '" + id + "' does not have dimension " + std::to_string(c.k));
            Rat w = get_rational(v, "$.weights." + id);
            if (w != 0) c.weights[id] = w;
        }
    }
    return c;
}

ordered_json morphism_to_json(const ComplexMorphism& f) {
    ordered_json j;
    j["cone_map"] = ordered_json::object();
    for (auto& [s, t] : f.cone_map) j["cone_map"][s] = t;
    j["ray_images"] = ordered_json::object();
    for (auto& [r, img] : f.ray_images) {
        ordered_json ji = ordered_json::object();
        for (auto& [t, v] : img) ji[t] = static_cast<long>(v);
        j["ray_images"][r] = std::move(ji);
    }
    return j;
}

ComplexMorphism morphism_from_json(const ordered_json& j, const ComplexPtr& source,
                                   const ComplexPtr& target) {
    expect(j.is_object() && j.contains("cone_map") && j.contains("ray_images"), "$",
           "expected an object with cone_map and ray_images");
    ComplexMorphism f;
    f.source = source;
    f.target = target;
    expect(j["cone_map"].is_object(), "$.cone_map", "expected an object");
    for (auto& [s, t] : j["cone_map"].items()) {
        expect(source->has_cone(s), "$.cone_map." + s, "unknown source cone");
        f.cone_map[s] = get_string(t, "$.cone_map." + s);
    }
    expect(j["ray_images"].is_object(), "$.ray_images", "expected an object");
    for (auto& [r, img] : j["ray_images"].items()) {
        expect(source->has_ray(r), "$.ray_images." + r, "unknown source ray");
        expect(img.is_object(), "$.ray_images." + r, "expected an object");
        std::map<std::string, Int> m;
        for (auto& [t, v] : img.items()) {
            expect(v.is_number_integer(), "$.ray_images." + r + "." + t, "expected an integer");
            m[t] = Int(v.get<long>());
        }
        f.ray_images[r] = std::move(m);
    }
    try {
        validate_morphism(f);
    } catch (const error& e) {
        fail(errc::schema_error, std::string("$: ") + e.what());
    }
    return f;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::schema_error, "cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::schema_error, path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) fail(errc::schema_error, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace trop
