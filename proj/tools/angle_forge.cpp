// angle-forge: batch driver for jobs (algebra + functor + family + angle seed).
// Exit codes: 0 all requested checks pass, 1 mathematical failure, 2 input error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "angleforge/job.hpp"

using namespace angleforge;

namespace {

struct Options {
    std::string field = "q";
    std::size_t bound = 32;
    std::string out;
    std::string format = "text";
};

bool is_input_error(ErrorKind k) {
    return k == ErrorKind::Input || k == ErrorKind::CyclicQuiver || k == ErrorKind::UnknownArrow ||
           k == ErrorKind::DimensionMismatch;
}

void emit(const Options& o, const std::string& stem, const Json& j) {
    std::string text = to_text(j);
    std::string js = j.dump(2) + "\n";
    std::cout << (o.format == "json" ? js : text);
    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        std::ofstream(std::filesystem::path(o.out) / (stem + ".json")) << js;
        std::ofstream(std::filesystem::path(o.out) / (stem + ".txt")) << text;
    }
}

template <class K>
Json header(const std::string& command) {
    return Json{{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"command", command}, {"field", field_name<K>()}};
}

template <class K>
Job<K> load(const std::string& path, const Options& o) {
    JobOptions jo;
    jo.bound = o.bound;
    return load_job<K>(read_json_file(path), jo);
}

template <class K>
int cmd_paths(const std::string& path, const Options& o) {
    Json j = read_json_file(path);
    auto alg = load_algebra<K>(j.contains("algebra") ? j.at("algebra") : j);
    Json r = header<K>("paths");
    r["dim"] = alg->dim();
    Json ps = Json::array();
    for (const auto& b : alg->basis)
        ps.push_back(Json{{"path", b.tag}, {"from", alg->idempotent_names[b.src]}, {"to", alg->idempotent_names[b.tgt]}});
    r["basis"] = ps;
    emit(o, "paths", r);
    return 0;
}

template <class K>
int cmd_algebra(const std::string& path, const Options& o) {
    Json j = read_json_file(path);
    auto alg = load_algebra<K>(j.contains("algebra") ? j.at("algebra") : j);
    validate_algebra(*alg);
    Json r = header<K>("algebra");
    r["name"] = alg->name;
    r["dim"] = alg->dim();
    r["vertices"] = alg->idempotent_names;
    r["radical_dim"] = alg->radical.rows();
    Json cartan = Json::array();
    for (std::size_t s = 0; s < alg->num_idempotents(); ++s) {
        Json row = Json::array();
        for (std::size_t t = 0; t < alg->num_idempotents(); ++t) row.push_back(alg->block[s][t].size());
        cartan.push_back(row);
    }
    r["cartan"] = cartan;
    Json bs = Json::array();
    for (const auto& b : alg->basis) bs.push_back(b.tag);
    r["basis"] = bs;
    emit(o, "algebra", r);
    return 0;
}

template <class K>
Json angle_json(const Job<K>& job) {
    Json terms = Json::array();
    for (const auto& x : job.angle->seq.x) terms.push_back(names_of(*job.cat, x));
    return Json{{"n", job.n}, {"terms", terms}};
}

template <class K>
int cmd_nangle(const std::string& mode, const std::string& path, const Options& o) {
    auto job = load<K>(path, o);
    auto& cat = *job.cat;
    Json r = header<K>("nangle " + mode);
    r["job"] = job.name;
    r["angle"] = angle_json(job);
    bool ok = true;
    if (mode == "check") {
        try {
            validate(cat, job.angle->seq);
            auto e = check_exactness(cat, job.angle->seq, default_probes(cat, job.angle->seq));
            r["exactness"] = exactness_json(e);
            ok = e.ok();
        } catch (const Error& e) {
            if (is_input_error(e.kind())) throw;
            r["exactness"] = Json{{"exact", false}, {"error", e.what()}};
            ok = false;
        }
        if (job.ar_source) {
            auto ar = ar_checks(cat, *job.angle, job.family);
            r["ar"] = to_json(ar);
            ok = ok && ar.ok();
        }
        r["status"] = ok ? "pass" : "fail";
    }
    emit(o, job.name + ".nangle", r);
    return ok ? 0 : 1;
}

template <class K>
int cmd_yoneda(const std::string& path, const Options& o) {
    auto job = load<K>(path, o);
    auto& cat = *job.cat;
    Json r = header<K>("yoneda");
    r["job"] = job.name;
    r["phi"] = normalize_phi(job.phi);
    r["phi_assumed"] = job.phi_defaulted;
    int code = 0;
    try {
        auto s = prepare(cat, job.angle->seq, job.phi);
        r["hypotheses"] = to_json(s.hyp);
        r["V"] = names_of(cat, s.ev.v);
        r["W"] = names_of(cat, s.ew.v);
        r["dims"] = Json{{"E(V)", s.ev.dim()},          {"I", s.i.dim()}, {"lambda_bar", s.lam.alg->dim()},
                         {"E(W)", s.ew.dim()},          {"J", s.j.dim()}, {"gamma_bar", s.gam.alg->dim()}};
        r["ideals_closed"] = Json{{"I", s.i.closed}, {"J", s.j.closed}};
    } catch (const Error& e) {
        if (is_input_error(e.kind())) throw;
        r["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
        code = 1;
    }
    emit(o, job.name + ".yoneda", r);
    return code;
}

template <class K>
Json run_report(Job<K>& job, bool& pass) {
    auto& cat = *job.cat;
    Json r = header<K>("run");
    r["job"] = job.name;
    r["algebra"] = Json{{"name", job.alg->name}, {"dim", job.alg->dim()}, {"vertices", job.alg->idempotent_names}};
    r["functor"] = cat.functor().name();
    r["angle"] = angle_json(job);
    pass = true;
    for (const auto& c : job.checks) {
        if (c == "exactness") {
            try {
                validate(cat, job.angle->seq);
                auto e = check_exactness(cat, job.angle->seq, default_probes(cat, job.angle->seq));
                r["exactness"] = exactness_json(e);
                pass = pass && e.ok();
            } catch (const Error& e) {
                if (is_input_error(e.kind())) throw;
                r["exactness"] = Json{{"exact", false}, {"error", e.what()}};
                pass = false;
            }
        } else if (c == "ar") {
            if (!job.angle->tower) {
                r["ar"] = Json{{"ok", false}, {"error", "AR checks need an angle built from a seed"}};
                pass = false;
                continue;
            }
            try {
                auto ar = ar_checks(cat, *job.angle, job.family);
                r["ar"] = to_json(ar);
                pass = pass && ar.ok();
            } catch (const Error& e) {
                if (is_input_error(e.kind())) throw;
                r["ar"] = Json{{"ok", false}, {"error", e.what()}};
                pass = false;
            }
        } else if (c == "theorem") {
            auto rep = verify_theorem_instance(cat, job.angle->seq, job.phi, job.phi_defaulted);
            r["theorem"] = to_json(rep);
            pass = pass && rep.verdict == "equivalent";
        }
    }
    r["status"] = pass ? "pass" : "fail";
    return r;
}

template <class K>
int cmd_run(const std::string& path, const Options& o) {
    auto job = load<K>(path, o);
    bool pass = false;
    Json r = run_report(job, pass);
    emit(o, job.name, r);
    return pass ? 0 : 1;
}

int cmd_phi(const std::string& list, const Options& o) {
    std::vector<int> phi;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            phi.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Input, "phi: bad integer \"" + item + "\"");
        }
    }
    if (phi.empty()) throw Error(ErrorKind::Input, "phi: empty list");
    phi = normalize_phi(phi);
    Json r{{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"command", "phi"}, {"phi", phi}};
    bool ok = is_admissible(phi);
    r["admissible"] = ok;
    if (auto w = admissibility_witness(phi)) r["witness"] = *w;
    if (o.format == "json") {
        emit(o, "phi", r);
    } else {
        std::cout << (ok ? "admissible" : "not admissible");
        if (!ok) {
            auto w = *admissibility_witness(phi);
            std::cout << " (i, j, k) = (" << w[0] << ", " << w[1] << ", " << w[2] << ")";
        }
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

// A compact property suite over built-in fixtures.
template <class K>
int cmd_selftest(const Options&) {
    int failed = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        if (!ok) ++failed;
    };
    check(is_admissible({0}), "{0} is admissible");
    bool triples = true;
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) triples = triples && is_admissible({0, i, j});
    check(triples, "every {0,i,j} with 0 <= i,j <= 20 is admissible");
    check(!is_admissible({0, 1, 2, 4}), "{0,1,2,4} is not admissible");

    Json a2 = {{"vertices", {"1", "2"}}, {"arrows", {{{"label", "a"}, {"from", "1"}, {"to", "2"}}}}};
    auto alg = load_algebra<K>(a2);
    check(alg->dim() == 3, "path algebra of 1 -> 2 has dimension 3");
    validate_algebra(*alg);

    Json job = {
        {"name", "selftest-a2"},
        {"algebra", a2},
        {"n", 3},
        {"functor", {{"kind", "identity"}}},
        {"family",
         {{"objects",
           {{{"name", "P1"}, {"vertex", "1"}},
            {{"name", "P2"}, {"vertex", "2"}},
            {{"name", "S"}, {"cone", {{"from", "2"}, {"to", "1"}}}}}}}},
        {"angle", {{"trivial", {"P1"}}}}};
    auto triv = load_job<K>(job);
    check(check_exactness(*triv.cat, triv.angle->seq, default_probes(*triv.cat, triv.angle->seq)).ok(),
          "trivial triangle is exact");

    // random complexes: cone of the identity is contractible
    auto& cat = *triv.cat;
    for (auto x : triv.family) {
        const auto& c = cat.obj(x);
        auto cn = cone(ChainMap<K>::identity(c), c, c);
        check(HomKb<K>(cn.obj, cn.obj).dim() == 0, "cone(id) of " + cat.name(x) + " is contractible");
    }

    // mu on End of everything in the family
    auto e = e_algebra(cat, triv.family, {0});
    std::vector<std::size_t> all(e.v.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto mu = mu_check(e, all, all, all);
    check(mu.bijective && mu.multiplicative && mu.faithful, "mu is a multiplicative bijection on E(U)");
    return failed ? 1 : 0;
}

template <class K>
int dispatch(const std::string& cmd, const std::vector<std::string>& args, const Options& o) {
    if (cmd == "paths") return cmd_paths<K>(args.at(0), o);
    if (cmd == "algebra") return cmd_algebra<K>(args.at(0), o);
    if (cmd == "nangle") return cmd_nangle<K>(args.at(0), args.at(1), o);
    if (cmd == "yoneda") return cmd_yoneda<K>(args.at(0), o);
    if (cmd == "run") return cmd_run<K>(args.at(0), o);
    if (cmd == "selftest") return cmd_selftest<K>(o);
    throw Error(ErrorKind::Input, "unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"angle-forge: derived equivalences from n-angles"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "ground field: q or fp:<prime>")->capture_default_str();
    app.add_option("--bound", o.bound, "bound on projective resolution length for the Nakayama functor")
        ->capture_default_str();
    app.add_option("--out", o.out, "directory for report files");
    app.add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string job_path, mode, phi_list;
    auto* paths = app.add_subcommand("paths", "list the path basis of the job's algebra");
    paths->add_option("job", job_path)->required();
    auto* algebra = app.add_subcommand("algebra", "build and dump the algebra");
    algebra->add_option("job", job_path)->required();
    auto* nangle = app.add_subcommand("nangle", "build or check the job's n-angle");
    nangle->add_option("mode", mode)->required()->check(CLI::IsMember({"build", "check"}));
    nangle->add_option("job", job_path)->required();
    auto* yoneda = app.add_subcommand("yoneda", "E-algebras, ideals and quotients");
    yoneda->add_option("job", job_path)->required();
    auto* run = app.add_subcommand("run", "full pipeline");
    run->add_option("job", job_path)->required();
    auto* phi = app.add_subcommand("phi", "admissibility of a set of integers");
    phi->add_option("--check", phi_list, "comma-separated list, e.g. 0,1,2")->required();
    auto* selftest = app.add_subcommand("selftest", "run the built-in property suite");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "phi") return cmd_phi(phi_list, o);
        std::vector<std::string> args;
        if (cmd == "nangle") args = {mode, job_path};
        else if (cmd != "selftest") args = {job_path};
        if (o.field == "q") return dispatch<Rational>(cmd, args, o);
        if (o.field.rfind("fp:", 0) == 0) {
            unsigned long long p = 0;
            try {
                p = std::stoull(o.field.substr(3));
                Fp::set_modulus(p);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Input, "--field fp:<p> needs a prime below 2^32");
            }
            return dispatch<Fp>(cmd, args, o);
        }
        throw Error(ErrorKind::Input, "--field must be q or fp:<p>");
    } catch (const Error& e) {
        std::cerr << "angle-forge: " << e.what() << "\n";
        return is_input_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "angle-forge: " << e.what() << "\n";
        return 2;
    }
}
