#pragma once

// Job files: JSON describing an algebra, an endofunctor, a family of objects
// in K^b(proj A), an angle seed and Phi. Loading resolves every name and
// builds the catalog; reports are emitted as ordered JSON or plain text.

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "angleforge/tilting.hpp"

namespace angleforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJobSchema = "angle-forge/job@1";
inline constexpr const char* kReportSchema = "angle-forge/report@1";
inline constexpr const char* kToolVersion = "0.1.0";

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Input, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Input, path + ": " + e.what());
    }
}

namespace detail {

inline const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Input, where + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::string text_of(const Json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::Input, where + ": expected a string or an integer");
}

inline int int_of(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw Error(ErrorKind::Input, where + ": expected an integer");
    return j.get<int>();
}

template <class K>
K scalar_of(const Json& j, const std::string& where) {
    try {
        return parse_scalar<K>(text_of(j, where));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Input, where + ": bad scalar");
    }
}

}  // namespace detail

struct JobOptions {
    std::size_t bound = 32;  // resolution bound for the Nakayama functor
};

template <class K>
struct Job {
    Json raw;
    std::string name;
    AlgPtr<K> alg;
    Quiver quiver;
    std::unique_ptr<Catalog<K>> cat;
    Family family;
    std::size_t n = 0;
    std::vector<int> phi;
    bool phi_defaulted = false;
    std::optional<std::size_t> ar_source;  // set when the seed is a source map
    std::optional<NAngleInstance<K>> angle;
    std::vector<std::string> checks;
};

template <class K>
AlgPtr<K> load_algebra(const Json& a, Quiver* quiver_out = nullptr) {
    using namespace detail;
    std::vector<std::string> vs;
    for (const auto& v : need(a, "vertices", "algebra")) vs.push_back(text_of(v, "algebra.vertices"));
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    if (a.contains("arrows"))
        for (const auto& x : a.at("arrows"))
            as.emplace_back(text_of(need(x, "label", "arrow"), "arrow.label"), text_of(need(x, "from", "arrow"), "arrow.from"),
                            text_of(need(x, "to", "arrow"), "arrow.to"));
    Quiver q = Quiver::from_names(vs, as);
    std::vector<Relation<K>> rels;
    if (a.contains("relations"))
        for (const auto& r : a.at("relations")) {
            Relation<K> rel;
            for (const auto& t : r) {
                RelationTerm<K> term{scalar_of<K>(need(t, "coeff", "relation"), "relation.coeff"), {}};
                for (const auto& l : need(t, "path", "relation")) term.path.push_back(text_of(l, "relation.path"));
                rel.push_back(std::move(term));
            }
            rels.push_back(std::move(rel));
        }
    // "left": the quiver is read for left modules (the usual reading); internally
    // modules are right modules, so arrows and relations are reversed.
    std::string conv = a.contains("modules") ? text_of(a.at("modules"), "algebra.modules") : "left";
    if (conv == "left") {
        q = q.opposite();
        rels = opposite_relations(rels);
    } else if (conv != "right") {
        throw Error(ErrorKind::Input, "algebra.modules must be \"left\" or \"right\"");
    }
    if (quiver_out) *quiver_out = q;
    std::string name = a.contains("name") ? text_of(a.at("name"), "algebra.name") : "A";
    return std::make_shared<const AlgebraData<K>>(build_algebra<K>(q, rels, name));
}

namespace detail {

inline std::size_t vertex_index(const Quiver& q, const std::string& v) {
    const auto& vs = q.vertices();
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) throw Error(ErrorKind::Input, "unknown vertex " + v);
    return static_cast<std::size_t>(it - vs.begin());
}

template <class K>
std::size_t add_object(Catalog<K>& cat, const std::string& name, Complex<K> c, int translate, int shift_by) {
    if (translate == 0 && shift_by == 0) {
        std::size_t id = cat.add(name, std::move(c));
        if (cat.name(id) != name) cat.rename(id, name);
        return id;
    }
    std::size_t base = cat.add_fresh(name + "/base", std::move(c));
    std::size_t id = cat.shift(cat.translate(base, translate), shift_by);
    cat.rename(id, name);
    return id;
}

template <class K>
AddObj object_list(const Catalog<K>& cat, const Json& j, const std::string& where) {
    AddObj out;
    for (const auto& x : j) out.push_back(cat.id(text_of(x, where)));
    return out;
}

}  // namespace detail

template <class K>
Job<K> load_job(const Json& j, const JobOptions& opt = {}) {
    using namespace detail;
    Job<K> job;
    job.raw = j;
    if (!j.is_object()) throw Error(ErrorKind::Input, "job must be a JSON object");
    if (j.contains("schema") && text_of(j.at("schema"), "schema") != kJobSchema)
        throw Error(ErrorKind::Input, "unsupported schema " + text_of(j.at("schema"), "schema"));
    job.name = j.contains("name") ? text_of(j.at("name"), "name") : "job";
    job.alg = load_algebra<K>(need(j, "algebra", "job"), &job.quiver);
    job.n = static_cast<std::size_t>(int_of(need(j, "n", "job"), "n"));
    if (job.n < 3) throw Error(ErrorKind::Input, "n must be at least 3");
    int susp = j.contains("suspension") ? int_of(j.at("suspension"), "suspension") : static_cast<int>(job.n) - 2;

    const Json& fj = need(j, "functor", "job");
    std::string kind = text_of(need(fj, "kind", "functor"), "functor.kind");
    Functor<K> f = Functor<K>::identity(job.alg);
    if (kind == "identity") {
    } else if (kind == "shift") {
        f = Functor<K>::shift_by(job.alg, int_of(need(fj, "by", "functor"), "functor.by"));
    } else if (kind == "nakayama") {
        f = Functor<K>::nakayama(job.alg, int_of(need(fj, "n", "functor"), "functor.n"), opt.bound);
    } else {
        throw Error(ErrorKind::Input, "functor.kind must be identity, shift or nakayama");
    }
    job.cat = std::make_unique<Catalog<K>>(f, susp);
    auto& cat = *job.cat;

    if (j.contains("phi")) {
        for (const auto& x : j.at("phi")) job.phi.push_back(int_of(x, "phi"));
        if (job.phi.empty()) throw Error(ErrorKind::Input, "phi must not be empty");
    } else {
        job.phi = {0};
        job.phi_defaulted = true;
    }

    // family
    const Json& fam = need(j, "family", "job");
    if (fam.contains("grid")) {
        // label:i names F^{-i}(P_v), as in the grid pictures of cluster tilting families
        const Json& g = fam.at("grid");
        const Json& lv = need(g, "levels", "family.grid");
        if (!lv.is_array() || lv.size() != 2) throw Error(ErrorKind::Input, "family.grid.levels must be [lo, hi]");
        int lo = int_of(lv[0], "levels"), hi = int_of(lv[1], "levels");
        const Json& labels = need(g, "labels", "family.grid");
        for (int l = lo; l <= hi; ++l)
            for (const auto& v : job.quiver.vertices()) {
                if (!labels.contains(v)) throw Error(ErrorKind::Input, "family.grid.labels: no label for vertex " + v);
                std::string name = text_of(labels.at(v), "label") + ":" + std::to_string(l);
                auto c = Complex<K>::stalk(projective(job.alg, vertex_index(job.quiver, v)));
                job.family.push_back(add_object(cat, name, std::move(c), -l, 0));
            }
    }
    if (fam.contains("objects"))
        for (const auto& o : fam.at("objects")) {
            std::string name = text_of(need(o, "name", "family.objects"), "name");
            int tr = o.contains("translate") ? int_of(o.at("translate"), "translate") : 0;
            int sh = o.contains("shift") ? int_of(o.at("shift"), "shift") : 0;
            Complex<K> c;
            if (o.contains("vertex")) {
                c = Complex<K>::stalk(projective(job.alg, vertex_index(job.quiver, text_of(o.at("vertex"), "vertex"))));
            } else if (o.contains("cone")) {
                // the two-term complex P_from -> P_to in degrees -1, 0
                const Json& cj = o.at("cone");
                auto p = projective(job.alg, vertex_index(job.quiver, text_of(need(cj, "from", "cone"), "cone.from")));
                auto q = projective(job.alg, vertex_index(job.quiver, text_of(need(cj, "to", "cone"), "cone.to")));
                auto hs = hom_modules(p, q);
                std::vector<K> coords(hs.dim(), K(0));
                if (cj.contains("map")) {
                    const Json& m = cj.at("map");
                    if (m.size() != hs.dim()) throw Error(ErrorKind::Input, name + ": cone map needs " + std::to_string(hs.dim()) + " coordinates");
                    for (std::size_t k = 0; k < hs.dim(); ++k) coords[k] = scalar_of<K>(m[k], "cone.map");
                } else if (hs.dim()) {
                    coords[0] = K(1);
                }
                c = Complex<K>(job.alg, -1, {p, q}, {hs.combine(coords)});
            } else {
                throw Error(ErrorKind::Input, name + ": object needs \"vertex\" or \"cone\"");
            }
            job.family.push_back(add_object(cat, name, std::move(c), tr, sh));
        }
    if (job.family.empty()) throw Error(ErrorKind::Input, "family is empty");

    // angle seed
    const Json& aj = need(j, "angle", "job");
    for (const auto& [k, v] : aj.items())
        if (k != "trivial" && k != "source_map" && k != "left_approximation" && k != "map" && k != "zero_first_map" &&
            k != "drop")
            throw Error(ErrorKind::Input, "angle: unknown key " + k);
    std::optional<AddMap<K>> alpha1;
    if (aj.contains("trivial")) {
        AddObj x = object_list(cat, aj.at("trivial"), "angle.trivial");
        job.angle = NAngleInstance<K>{trivial_sequence(cat, x, job.n), std::nullopt};
    } else if (aj.contains("source_map")) {
        std::size_t x = cat.id(text_of(aj.at("source_map"), "angle.source_map"));
        job.ar_source = x;
        alpha1 = source_map(cat, x, job.family);
    } else if (aj.contains("left_approximation")) {
        const Json& la = aj.at("left_approximation");
        std::size_t x = cat.id(text_of(need(la, "of", "left_approximation"), "of"));
        Family by = object_list(cat, need(la, "by", "left_approximation"), "by");
        alpha1 = minimal_left_approximation(cat, x, by, false);
    } else if (aj.contains("map")) {
        const Json& mj = aj.at("map");
        AddObj src = object_list(cat, need(mj, "from", "angle.map"), "from");
        AddObj tgt = object_list(cat, need(mj, "to", "angle.map"), "to");
        AddMap<K> m = AddMap<K>::zero(cat, src, tgt);
        const Json& bl = need(mj, "blocks", "angle.map");
        if (bl.size() != src.size()) throw Error(ErrorKind::Input, "angle.map.blocks: one row per source summand");
        for (std::size_t r = 0; r < src.size(); ++r) {
            if (bl[r].size() != tgt.size()) throw Error(ErrorKind::Input, "angle.map.blocks: one block per target summand");
            for (std::size_t c = 0; c < tgt.size(); ++c) {
                if (bl[r][c].size() != m.blk[r][c].size())
                    throw Error(ErrorKind::Input, "angle.map.blocks[" + std::to_string(r) + "][" + std::to_string(c) +
                                                      "] needs " + std::to_string(m.blk[r][c].size()) + " coordinates");
                for (std::size_t k = 0; k < m.blk[r][c].size(); ++k) m.blk[r][c][k] = scalar_of<K>(bl[r][c][k], "block");
            }
        }
        alpha1 = std::move(m);
    } else {
        throw Error(ErrorKind::Input, "angle needs one of trivial, source_map, left_approximation, map");
    }
    if (alpha1) {
        if (aj.contains("zero_first_map") && aj.at("zero_first_map").get<bool>())
            alpha1 = AddMap<K>::zero(cat, alpha1->src, alpha1->tgt);
        job.angle = build_from_tower(cat, *alpha1, job.n, job.family);
    }
    if (aj.contains("drop"))
        for (const auto& d : aj.at("drop")) {
            int term = int_of(need(d, "term", "angle.drop"), "term");
            std::size_t e = cat.id(text_of(need(d, "summand", "angle.drop"), "summand"));
            job.angle->seq = drop_summand(job.angle->seq, static_cast<std::size_t>(term), e);
            job.angle->tower.reset();
        }
    if (j.contains("checks"))
        for (const auto& c : j.at("checks")) job.checks.push_back(text_of(c, "checks"));
    else
        job.checks = {"exactness", "theorem"};
    for (const auto& c : job.checks)
        if (c != "exactness" && c != "ar" && c != "theorem") throw Error(ErrorKind::Input, "unknown check " + c);
    return job;
}

// ---------------------------------------------------------------- reports

template <class K>
Json names_of(const Catalog<K>& cat, const AddObj& x) {
    Json a = Json::array();
    for (auto e : x) a.push_back(cat.name(e));
    return a;
}

inline Json to_json(const HypothesisReport& h) {
    return Json{{"n_angle", h.angle},
                {"left_approximation", h.left_approximation},
                {"right_approximation", h.right_approximation},
                {"x_in_script_y", h.x_in_y_of_m},
                {"y_in_script_x", h.y_in_x_of_m}};
}

inline Json to_json(const EquivalenceReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    if (!r.error_kind.empty()) j["error"] = Json{{"kind", r.error_kind}, {"message", r.error_message}};
    j["phi"] = r.phi;
    j["phi_assumed"] = r.phi_defaulted;
    j["n"] = r.n;
    j["hypotheses"] = to_json(r.hyp);
    j["dims"] = Json{{"lambda", r.dim_lambda}, {"gamma", r.dim_gamma},         {"I", r.dim_i},
                     {"J", r.dim_j},           {"lambda_bar", r.dim_lambda_bar}, {"gamma_bar", r.dim_gamma_bar}};
    j["ideals_closed"] = Json{{"I", r.i_closed}, {"J", r.j_closed}};
    j["tilting_complex"] = r.t_terms;
    j["pq_equals_e_alpha1"] = r.pq_identity;
    j["ideal_kills_e_v_m"] = r.ideal_kills_m;
    Json orth = Json::array();
    for (const auto& e : r.orthogonality) orth.push_back(Json{{"shift", e.shift}, {"dim", e.dim}});
    j["self_orthogonality"] = orth;
    j["generation"] = Json{{"splits_off_m", r.generation.splits},
                           {"all_projectives", r.generation.all_projectives},
                           {"cone_is_p", r.generation.cone_is_p}};
    j["end"] = Json{{"dim", r.dim_end}, {"associative", r.end_associative}};
    j["theta"] = Json{{"square", r.theta_square},       {"rank", r.theta_rank},
                      {"multiplicative", r.theta_multiplicative}, {"unital", r.theta_unital},
                      {"well_defined", r.theta_well_defined},     {"matrix", r.theta}};
    return j;
}

inline Json exactness_json(const ExactnessReport& e) {
    Json f = Json::array();
    for (const auto& x : e.failures) f.push_back(Json{{"probe", x.probe}, {"position", x.position}});
    return Json{{"exact", e.ok()}, {"probes", e.probes}, {"failures", f}};
}

inline Json to_json(const ArReport& a) {
    return Json{{"terms_in_family", a.terms_in_family},     {"source_map", a.source_map},
                {"sink_map", a.sink_map},                   {"right_approximations", a.right_approximations},
                {"left_approximations", a.left_approximations}, {"notes", a.notes},
                {"ok", a.ok()}};
}

/// Flattens a JSON report into "key: value" lines.
inline void text_lines(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t k = 0; k < j.size(); ++k) text_lines(j[k], prefix + "[" + std::to_string(k) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline std::string to_text(const Json& j) {
    std::ostringstream out;
    text_lines(j, "", out);
    return out.str();
}

}  // namespace angleforge
