#pragma once

// The tilting complex T over Lambda/I built from an n-angle, its
// self-orthogonality and generation checks, End(T) in the homotopy category,
// and the ring map Theta : End(T) -> Gamma/J.
//
// Left Lambda/I-modules are handled as right modules over the opposite
// algebra B. The projective E(V, U) for a summand U of V is P_U = e_U B, and
// an element a of e_U (Lambda/I) e_U' is the B-map P_U -> P_U' sending the
// generator to a; composition stays diagrammatic on both sides.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "angleforge/yoneda.hpp"

namespace angleforge {

template <class K>
struct TheoremSetup {
    NSigmaSequence<K> seq, bar;
    std::vector<int> phi;
    HypothesisReport hyp;
    AddObj m, v, w;  // middle sum, X + M, M + Y (as padded, possibly with repeats)
    EAlgebra<K> ev, ew;
    IdealData<K> i, j;
    QuotientAlgebra<K> lam, gam;
};

/// Admissibility first, then the approximation and orthogonality hypotheses.
template <class K>
TheoremSetup<K> prepare(Catalog<K>& cat, const NSigmaSequence<K>& s, std::vector<int> phi) {
    TheoremSetup<K> t;
    t.phi = normalize_phi(std::move(phi));
    if (!is_admissible(t.phi)) throw Error(ErrorKind::NonAdmissiblePhi, "Phi is not admissible");
    validate_shape(cat, s);
    t.hyp = check_hypotheses(cat, s, t.phi);
    if (!t.hyp.ok()) throw Error(ErrorKind::HypothesisFailed, t.hyp.failures());
    validate(cat, s);
    t.seq = s;
    std::size_t n = s.n();
    t.m = middle_sum(s);
    t.v = concat(s.x[0], t.m);
    t.w = concat(t.m, s.x[n - 1]);
    t.bar = pad_angle(cat, s, PadSide::Bar);
    t.ev = e_algebra(cat, t.v, t.phi, false, "Lambda");
    t.ew = e_algebra(cat, t.w, t.phi, false, "Gamma", false);
    t.i = ideal_I(cat, t.ev, s, t.phi, false);
    t.j = ideal_J(cat, t.ew, s, t.phi, false);
    if (!t.i.closed) throw Error(ErrorKind::Internal, "I is not a two-sided ideal");
    if (!t.j.closed) throw Error(ErrorKind::Internal, "J is not a two-sided ideal");
    t.lam = quotient_algebra(t.ev.table, t.i.basis, "Lambda/I");
    // Gamma/J is only ever used through its structure constants
    t.gam = quotient_algebra(t.ew.table, t.j.basis, "Gamma/J", false);
    return t;
}

/// E coordinates of a degree-i map f : U1 -> F^i U2 with U1, U2 made of summands of V.
template <class K>
std::vector<K> e_element(Catalog<K>& cat, const EAlgebra<K>& e, const AddMap<K>& f, int i) {
    std::vector<K> x(e.dim(), K(0));
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (all_zero<K>(f.blk[r][c])) continue;
            std::size_t a = e.require_position(cat, f.src[r]);
            std::size_t b = e.require_position(cat, cat.translate(f.tgt[c], -i));
            e.add_hom(x, i, a, b, f.blk[r][c]);
        }
    return x;
}

template <class K>
struct TiltingData {
    std::shared_ptr<const AlgebraData<K>> b;  // (Lambda/I)^op
    Complex<K> t;
    std::vector<AddObj> objs;                     // objs[j]: the summands behind T^j
    std::vector<std::vector<std::size_t>> tops;   // vertex of each summand
    std::size_t m_block = 0;                      // the last term is M_{n-2} + M; M starts here
    bool pq_identity = false;                     // p then q equals E(V, alpha_1)
    bool ideal_kills_m = false;                   // I E(V, M) = 0
};

/// Images of the generators for the map E(V, U1) -> E(V, U2) given by
/// right multiplication with f : U1 -> U2 (degree 0).
template <class K>
std::vector<std::vector<K>> generator_images(Catalog<K>& cat, const TheoremSetup<K>& s, const AddMap<K>& f,
                                             const std::vector<std::size_t>& src_tops,
                                             const std::vector<std::size_t>& tgt_tops) {
    const auto& lam = *s.lam.alg;
    std::vector<std::vector<K>> images;
    for (std::size_t r = 0; r < f.src.size(); ++r) {
        std::vector<K> img;
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            AddMap<K> one = AddMap<K>::zero(cat, {f.src[r]}, {f.tgt[c]});
            one.blk[0][0] = f.blk[r][c];
            auto el = s.lam.project(e_element(cat, s.ev, one, 0));
            for (auto k : lam.block[src_tops[r]][tgt_tops[c]]) img.push_back(el[k]);
        }
        images.push_back(std::move(img));
    }
    return images;
}

template <class K>
TiltingData<K> build_T(Catalog<K>& cat, const TheoremSetup<K>& s) {
    TiltingData<K> td;
    auto b = std::make_shared<AlgebraData<K>>(opposite_algebra(*s.lam.alg));
    td.b = b;
    std::size_t n = s.seq.n();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        td.objs.push_back(s.bar.x[j]);
        std::vector<std::size_t> tp;
        for (auto x : s.bar.x[j]) tp.push_back(s.ev.require_position(cat, x));
        td.tops.push_back(std::move(tp));
    }
    td.m_block = s.seq.x[n - 2].size();
    std::vector<Rep<K>> terms;
    for (const auto& tp : td.tops) terms.push_back(projective_sum<K>(b, tp));
    std::vector<ModMap<K>> d;
    for (std::size_t j = 0; j + 2 < n; ++j)
        d.push_back(yoneda_map(terms[j], terms[j + 1],
                               generator_images(cat, s, s.bar.a[j], td.tops[j], td.tops[j + 1])));
    td.t = Complex<K>(b, 0, std::move(terms), std::move(d));
    if (!is_complex(td.t)) throw Error(ErrorKind::Internal, "T: differentials do not compose to zero");
    const auto& e = s.ev.table;
    const auto& lam = *s.lam.alg;
    // p then q = E(V, alpha_1): the class of m alpha_1 is [m][alpha_1]
    auto a1 = e_element(cat, s.ev, s.seq.a[0], 0);
    auto a1bar = s.lam.project(a1);
    td.pq_identity = true;
    std::set<std::size_t> xpos(td.tops[0].begin(), td.tops[0].end());
    for (std::size_t k = 0; k < e.dim() && td.pq_identity; ++k) {
        if (!xpos.count(e.basis[k].tgt)) continue;
        auto lhs = s.lam.project(e.multiply(e.unit_vector(k), a1));
        auto rhs = lam.multiply(s.lam.project(e.unit_vector(k)), a1bar);
        td.pq_identity = lhs == rhs;
    }
    // I E(V, M) = 0
    std::set<std::size_t> mpos;
    for (auto x : s.m) mpos.insert(s.ev.require_position(cat, x));
    td.ideal_kills_m = true;
    for (std::size_t r = 0; r < s.i.basis.rows() && td.ideal_kills_m; ++r)
        for (std::size_t k = 0; k < e.dim(); ++k) {
            if (!mpos.count(e.basis[k].tgt)) continue;
            if (!all_zero<K>(e.multiply(s.i.basis.row_copy(r), e.unit_vector(k)))) {
                td.ideal_kills_m = false;
                break;
            }
        }
    return td;
}

struct OrthogonalityEntry {
    int shift;
    std::size_t dim;
};

/// dim Hom(T, T[i]) for 1 <= |i| <= n-2.
template <class K>
std::vector<OrthogonalityEntry> check_self_orthogonal(const TiltingData<K>& td, int n) {
    std::vector<OrthogonalityEntry> out;
    for (int i = -(n - 2); i <= n - 2; ++i) {
        if (i == 0) continue;
        out.push_back({i, HomKb<K>(td.t, shift(td.t, i)).dim()});
    }
    return out;
}

struct GenerationCertificate {
    bool splits = false;           // the last differential misses the E(V, M) block
    bool all_projectives = false;  // every indecomposable projective is a summand of a term
    bool cone_is_p = false;        // cone of the truncation inclusion is P[0]
    bool ok() const { return splits && all_projectives && cone_is_p; }
};

template <class K>
GenerationCertificate generation_certificate(const TiltingData<K>& td) {
    GenerationCertificate g;
    const auto& t = td.t;
    int last = t.hi();
    // (i)
    {
        g.splits = true;
        if (last >= 1) {
            const Rep<K>& tgt = t.term(last);
            HomSpace<K> hs = hom_from_projective(t.term(last - 1), tgt);
            auto c = hs.coords(t.diff(last - 1));
            // coordinates: per source summand, the target space at its top, summand by summand
            const auto& b = *td.b;
            std::size_t pos = 0;
            for (auto s : t.term(last - 1).tops)
                for (std::size_t k = 0; k < tgt.tops.size(); ++k) {
                    std::size_t w = b.block[tgt.tops[k]][s].size();
                    if (k >= td.m_block)
                        for (std::size_t q = 0; q < w; ++q)
                            if (!is_zero(c[pos + q])) g.splits = false;
                    pos += w;
                }
        }
    }
    // (ii)
    {
        std::set<std::size_t> seen;
        for (const auto& term : t.terms) seen.insert(term.tops.begin(), term.tops.end());
        g.all_projectives = seen.size() == td.b->num_idempotents();
    }
    // (iii) the brutal truncation sigma_{>=1} T -> T has cone isomorphic to P[0]
    {
        if (t.terms.size() == 1) {
            g.cone_is_p = true;
        } else {
            std::vector<Rep<K>> ts(t.terms.begin() + 1, t.terms.end());
            std::vector<ModMap<K>> ds(t.d.begin() + 1, t.d.end());
            Complex<K> upper(t.alg, 1, ts, ds);
            ChainMap<K> inc = ChainMap<K>::zero(upper, t);
            for (int i = 1; i <= t.hi(); ++i) inc.f[i - 1] = ModMap<K>::identity(t.term(i));
            auto c = cone(inc, upper, t);
            Complex<K> p = Complex<K>::stalk(t.term(0));
            HomKb<K> to_c(p, c.obj), from_c(c.obj, p), endo(c.obj, c.obj);
            // find v : P -> C and u : C -> P with v u = 1_P, then test u v ~ 1_C
            g.cone_is_p = false;
            if (to_c.dim() && from_c.dim()) {
                ChainMap<K> u = from_c.basis(0);
                // try the basis of Hom(C, P) for u, solve v u = 1 linearly in v
                for (std::size_t a = 0; a < from_c.dim() && !g.cone_is_p; ++a) {
                    u = from_c.basis(a);
                    std::size_t nv = to_c.dim();
                    auto one = ChainMap<K>::identity(p).f[0].flatten();
                    Mat<K> sys(nv, one.size());
                    for (std::size_t k = 0; k < nv; ++k) {
                        auto vu = compose(to_c.basis(k), u, p, c.obj, p);
                        auto fl = vu.at(0, p, p).flatten();
                        for (std::size_t q = 0; q < fl.size(); ++q) sys(k, q) = fl[q];
                    }
                    auto sol = solve_left(sys, Mat<K>::row_vector(one));
                    if (!sol) continue;
                    ChainMap<K> v = to_c.combine(sol->row(0));
                    auto uv = compose(u, v, c.obj, p, c.obj);
                    g.cone_is_p = endo.is_null(uv - ChainMap<K>::identity(c.obj));
                }
            }
        }
    }
    return g;
}

inline void require_certificate(const GenerationCertificate& g) {
    if (!g.splits) throw Error(ErrorKind::CertificateFailed, "(i) the last differential reaches the E(V, M) block");
    if (!g.all_projectives) throw Error(ErrorKind::CertificateFailed, "(ii) some indecomposable projective is missing");
    if (!g.cone_is_p) throw Error(ErrorKind::CertificateFailed, "(iii) the truncation cone is not P[0]");
}

/// Structure constants of a finite-dimensional algebra with a chosen basis.
template <class K>
struct StructureTable {
    std::size_t dim = 0;
    std::vector<std::vector<K>> products;  // products[i * dim + j] = b_i b_j, dense
    std::vector<K> one;
    bool associative = false;
};

template <class K>
StructureTable<K> end_algebra_kb(const TiltingData<K>& td) {
    const auto& t = td.t;
    HomKb<K> h(t, t);
    StructureTable<K> s;
    s.dim = h.dim();
    std::vector<ChainMap<K>> reps;
    for (std::size_t k = 0; k < s.dim; ++k) reps.push_back(h.basis(k));
    for (std::size_t a = 0; a < s.dim; ++a)
        for (std::size_t b = 0; b < s.dim; ++b) s.products.push_back(h.coords(compose(reps[a], reps[b], t, t, t)));
    s.one = h.coords(ChainMap<K>::identity(t));
    auto mul = [&](const std::vector<K>& x, const std::vector<K>& y) {
        std::vector<K> r(s.dim, K(0));
        for (std::size_t a = 0; a < s.dim; ++a) {
            if (is_zero(x[a])) continue;
            for (std::size_t b = 0; b < s.dim; ++b) {
                if (is_zero(y[b])) continue;
                const auto& p = s.products[a * s.dim + b];
                for (std::size_t c = 0; c < s.dim; ++c) r[c] += x[a] * y[b] * p[c];
            }
        }
        return r;
    };
    s.associative = true;
    for (std::size_t a = 0; a < s.dim && s.associative; ++a)
        for (std::size_t b = 0; b < s.dim && s.associative; ++b)
            for (std::size_t c = 0; c < s.dim; ++c) {
                std::vector<K> ea(s.dim, K(0)), ec(s.dim, K(0));
                ea[a] = K(1);
                ec[c] = K(1);
                if (mul(s.products[a * s.dim + b], ec) != mul(ea, s.products[b * s.dim + c])) {
                    s.associative = false;
                    break;
                }
            }
    return s;
}

/// Theta on a chain endomorphism f of T: read x^0 and x^{n-2} off f, solve
///   alpha_{n-1} h_i = x^{n-2}_i F^i(alpha_{n-1}),  h_i F^i(alpha_n) = alpha_n Sigma(x^0_i)
/// on the padded angle, and return the class of h = (h_i) in Gamma/J.
template <class K>
class ThetaMap {
public:
    ThetaMap(Catalog<K>& cat, const TheoremSetup<K>& s, const TiltingData<K>& td) : cat_(cat), s_(s), td_(td) {}

    /// Component of f^j in degree i as a map objs[j] -> F^i objs[j].
    AddMap<K> component(const ChainMap<K>& f, int j, int i) const {
        const auto& t = td_.t;
        const Rep<K>& term = t.term(j);
        auto c = hom_from_projective(term, term).coords(f.at(j, t, t));
        const auto& lam = *s_.lam.alg;
        const auto& obj = td_.objs[j];
        const auto& tp = td_.tops[j];
        AddMap<K> out = AddMap<K>::zero(cat_, obj, translate(cat_, obj, i));
        std::size_t pos = 0;
        for (std::size_t r = 0; r < obj.size(); ++r)
            for (std::size_t q = 0; q < obj.size(); ++q) {
                const auto& blk = lam.block[tp[r]][tp[q]];
                std::vector<K> el(lam.dim(), K(0));
                for (std::size_t k = 0; k < blk.size(); ++k) el[blk[k]] = c[pos + k];
                pos += blk.size();
                auto e = vec_times(el, s_.lam.lift);
                auto part = s_.ev.hom_part(e, i, tp[r], tp[q]);
                if (!part.empty()) out.blk[r][q] = part;
            }
        return out;
    }

    std::vector<K> operator()(const ChainMap<K>& f) const {
        std::size_t n = s_.seq.n();
        int top = static_cast<int>(n) - 2;
        const auto& w = s_.w;
        const AddMap<K>& a1 = s_.bar.a[n - 2];  // M_{n-2} + M -> M + Y
        const AddMap<K>& an = s_.bar.a[n - 1];  // M + Y -> Sigma X
        std::vector<K> h_all(s_.ew.dim(), K(0));
        for (int i : s_.phi) {
            AddMap<K> x0 = component(f, 0, i), xl = component(f, top, i);
            for (auto x : s_.seq.x[0]) cat_.require_strict_delta(x, i);
            AddObj fw = translate(cat_, w, i);
            AddMap<K> r1 = compose(cat_, xl, translate(cat_, a1, i));
            AddMap<K> r2 = compose(cat_, an, sigma(cat_, x0));
            std::vector<std::pair<AddObj, AddObj>> shapes{{w, fw}};
            AddMap<K> fan = translate(cat_, an, i);
            std::function<std::vector<AddMap<K>>(const std::vector<AddMap<K>>&)> op =
                [&](const std::vector<AddMap<K>>& u) {
                    return std::vector<AddMap<K>>{compose(cat_, a1, u[0]), compose(cat_, u[0], fan)};
                };
            auto sol = solve_maps<K>(cat_, shapes, op, {r1, r2});
            if (!sol) throw Error(ErrorKind::CompletionFailed, "no h in degree " + std::to_string(i));
            const AddMap<K>& h = (*sol)[0];
            for (std::size_t a = 0; a < w.size(); ++a)
                for (std::size_t b = 0; b < w.size(); ++b) s_.ew.add_hom(h_all, i, a, b, h.blk[a][b]);
        }
        return s_.gam.project(h_all);
    }

private:
    Catalog<K>& cat_;
    const TheoremSetup<K>& s_;
    const TiltingData<K>& td_;
};

template <class K>
struct ThetaReport {
    Mat<K> matrix;  // rows: images of the End(T) basis in Gamma/J coordinates
    std::size_t rank = 0;
    bool square = false;
    bool multiplicative = false;
    bool unital = false;
    bool well_defined = false;  // invariant under null-homotopic perturbations
    bool ok() const { return square && rank == matrix.rows() && multiplicative && unital && well_defined; }
};

template <class K>
ThetaReport<K> theta_check(Catalog<K>& cat, const TheoremSetup<K>& s, const TiltingData<K>& td,
                           const StructureTable<K>& end, std::size_t perturbations = 4, unsigned seed = 7) {
    ThetaMap<K> theta(cat, s, td);
    const auto& t = td.t;
    HomKb<K> h(t, t);
    const auto& gam = *s.gam.alg;
    ThetaReport<K> r;
    std::vector<ChainMap<K>> reps;
    r.matrix = Mat<K>(0, gam.dim());
    for (std::size_t k = 0; k < end.dim; ++k) {
        reps.push_back(h.basis(k));
        r.matrix.append_row(theta(reps.back()));
    }
    r.square = end.dim == gam.dim();
    r.rank = r.matrix.rows() ? rank(r.matrix) : 0;
    auto image = [&](const std::vector<K>& c) {
        std::vector<K> out(gam.dim(), K(0));
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!is_zero(c[k]))
                for (std::size_t q = 0; q < gam.dim(); ++q) out[q] += c[k] * r.matrix(k, q);
        return out;
    };
    r.multiplicative = true;
    for (std::size_t a = 0; a < end.dim && r.multiplicative; ++a)
        for (std::size_t b = 0; b < end.dim; ++b)
            if (image(end.products[a * end.dim + b]) != gam.multiply(r.matrix.row_copy(a), r.matrix.row_copy(b))) {
                r.multiplicative = false;
                break;
            }
    r.unital = image(end.one) == gam.one();
    // perturb representatives by random null-homotopic maps
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    r.well_defined = true;
    std::vector<HomSpace<K>> down;
    for (int i = t.lo; i <= t.hi(); ++i) down.push_back(hom_modules(t.term(i), t.term(i - 1)));
    for (std::size_t k = 0; k < end.dim && r.well_defined; ++k)
        for (std::size_t p = 0; p < perturbations; ++p) {
            Homotopy<K> hh;
            hh.lo = t.lo;
            for (int i = t.lo; i <= t.hi(); ++i) {
                const auto& hs = down[i - t.lo];
                std::vector<K> c(hs.dim());
                for (auto& x : c) x = K(coef(rng));
                hh.h.push_back(hs.combine(c));
            }
            ChainMap<K> f = reps[k] + boundary_of(hh, t, t);
            if (theta(f) != r.matrix.row_copy(k)) {
                r.well_defined = false;
                break;
            }
        }
    return r;
}

template <class K>
void require_isomorphism(const ThetaReport<K>& r, std::size_t dim_target) {
    bool inj = r.rank == r.matrix.rows(), surj = r.rank == dim_target;
    if (!inj || !surj)
        throw Error(ErrorKind::RankDeficient, std::string("Theta is not ") +
                                                  (!inj && !surj ? "injective or surjective" : !inj ? "injective" : "surjective"));
    if (!r.multiplicative) throw Error(ErrorKind::Internal, "Theta is not multiplicative");
    if (!r.unital) throw Error(ErrorKind::Internal, "Theta does not preserve the identity");
    if (!r.well_defined) throw Error(ErrorKind::Internal, "Theta depends on the representative");
}

struct EquivalenceReport {
    std::string verdict = "not-run";
    std::string error_kind, error_message;
    std::vector<int> phi;
    bool phi_defaulted = false;
    int n = 0;
    HypothesisReport hyp;
    std::size_t dim_lambda = 0, dim_gamma = 0, dim_i = 0, dim_j = 0, dim_lambda_bar = 0, dim_gamma_bar = 0;
    bool i_closed = false, j_closed = false;
    std::vector<std::vector<std::string>> t_terms;  // summand names per degree
    bool pq_identity = false, ideal_kills_m = false;
    std::vector<OrthogonalityEntry> orthogonality;
    GenerationCertificate generation;
    std::size_t dim_end = 0;
    bool end_associative = false;
    std::vector<std::vector<std::string>> theta;  // matrix entries as strings
    std::size_t theta_rank = 0;
    bool theta_square = false, theta_multiplicative = false, theta_unital = false, theta_well_defined = false;
    double seconds = 0;  // not serialized
};

/// The full pipeline; errors from the mathematics are recorded in the report.
template <class K>
EquivalenceReport verify_theorem_instance(Catalog<K>& cat, const NSigmaSequence<K>& seq, std::vector<int> phi,
                                          bool phi_defaulted = false) {
    EquivalenceReport rep;
    rep.phi = normalize_phi(phi);
    rep.phi_defaulted = phi_defaulted;
    rep.n = static_cast<int>(seq.n());
    try {
        if (!rep.phi.empty() && !is_admissible(rep.phi)) {
            rep.verdict = "non-admissible-phi";
            rep.error_kind = to_string(ErrorKind::NonAdmissiblePhi);
            rep.error_message = "Phi is not admissible";
            return rep;
        }
        validate_shape(cat, seq);
        rep.hyp = check_hypotheses(cat, seq, rep.phi);
        auto s = prepare(cat, seq, rep.phi);
        rep.dim_lambda = s.ev.dim();
        rep.dim_gamma = s.ew.dim();
        rep.dim_i = s.i.dim();
        rep.dim_j = s.j.dim();
        rep.i_closed = s.i.closed;
        rep.j_closed = s.j.closed;
        rep.dim_lambda_bar = s.lam.alg->dim();
        rep.dim_gamma_bar = s.gam.alg->dim();
        auto td = build_T(cat, s);
        for (const auto& o : td.objs) {
            std::vector<std::string> names;
            for (auto x : o) names.push_back(cat.name(x));
            rep.t_terms.push_back(std::move(names));
        }
        rep.pq_identity = td.pq_identity;
        rep.ideal_kills_m = td.ideal_kills_m;
        rep.orthogonality = check_self_orthogonal(td, rep.n);
        rep.generation = generation_certificate(td);
        auto end = end_algebra_kb(td);
        rep.dim_end = end.dim;
        rep.end_associative = end.associative;
        auto th = theta_check(cat, s, td, end);
        for (std::size_t r = 0; r < th.matrix.rows(); ++r) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < th.matrix.cols(); ++c) row.push_back(to_string(th.matrix(r, c)));
            rep.theta.push_back(std::move(row));
        }
        rep.theta_rank = th.rank;
        rep.theta_square = th.square;
        rep.theta_multiplicative = th.multiplicative;
        rep.theta_unital = th.unital;
        rep.theta_well_defined = th.well_defined;
        bool orth = true;
        for (const auto& e : rep.orthogonality) orth = orth && e.dim == 0;
        bool ok = orth && rep.generation.ok() && th.ok() && rep.end_associative && rep.pq_identity &&
                  rep.ideal_kills_m && rep.i_closed && rep.j_closed;
        rep.verdict = ok ? "equivalent" : "not-verified";
        if (!ok) {
            // name the first failing stage
            try {
                if (!orth) throw Error(ErrorKind::Internal, "T is not self-orthogonal");
                require_certificate(rep.generation);
                require_isomorphism(th, rep.dim_gamma_bar);
                throw Error(ErrorKind::Internal, "consistency check failed");
            } catch (const Error& e) {
                rep.error_kind = to_string(e.kind());
                rep.error_message = e.what();
            }
        }
    } catch (const Error& e) {
        rep.error_kind = to_string(e.kind());
        rep.error_message = e.what();
        rep.verdict = e.kind() == ErrorKind::HypothesisFailed   ? "hypothesis-failed"
                      : e.kind() == ErrorKind::NonAdmissiblePhi ? "non-admissible-phi"
                                                                : "error";
    }
    return rep;
}

}  // namespace angleforge
