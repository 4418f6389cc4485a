#pragma once

// Endofunctors of K^b(proj A): the identity, shifts [j], and nu_n = nu[-n].
//
// nu_n(X) is the projective replacement of the termwise Nakayama image,
// shifted by -n; on morphisms, q_X nu(f) is lifted through q_Y. The inverse
// uses an injective replacement followed by the termwise inverse Nakayama
// functor and [n]. Every construction is deterministic, so applying the
// functor twice to the same input gives identical complexes.

#include <memory>
#include <string>

#include "angleforge/replacement.hpp"

namespace angleforge {

enum class FunctorKind { Identity, Shift, Nakayama };

template <class K>
class Functor {
public:
    static Functor identity(AlgPtr<K> alg) { return Functor(FunctorKind::Identity, alg, 0); }
    static Functor shift_by(AlgPtr<K> alg, int j) { return Functor(FunctorKind::Shift, alg, j); }
    static Functor nakayama(AlgPtr<K> alg, int n, std::size_t bound = 32) {
        Functor f(FunctorKind::Nakayama, alg, n);
        f.bound_ = bound;
        f.nu_ = std::make_shared<Nakayama<K>>(alg);
        f.op_ = std::make_shared<const AlgebraData<K>>(opposite_algebra(*alg));
        check_finite_global_dimension(alg, bound);
        return f;
    }

    FunctorKind kind() const { return kind_; }
    int parameter() const { return param_; }
    const AlgPtr<K>& algebra() const { return alg_; }

    /// Negative powers are strict only when the functor is strictly invertible.
    bool strictly_invertible() const { return kind_ != FunctorKind::Nakayama; }

    std::string name() const {
        switch (kind_) {
            case FunctorKind::Identity: return "identity";
            case FunctorKind::Shift: return "shift " + std::to_string(param_);
            case FunctorKind::Nakayama: return "nu_" + std::to_string(param_);
        }
        return "?";
    }

    /// Image of an object, with the data needed to act on morphisms.
    struct Image {
        Complex<K> obj;
        Complex<K> raw;  // termwise nu(X), nakayama only
        ChainMap<K> q;   // obj[n] -> raw, nakayama only
    };

    Image apply(const Complex<K>& x) const {
        switch (kind_) {
            case FunctorKind::Identity: return {x, {}, {}};
            case FunctorKind::Shift: return {shift(x, param_), {}, {}};
            case FunctorKind::Nakayama: break;
        }
        Complex<K> raw = termwise_nu(x);
        auto rep = projective_replacement(raw, bound_);
        return {shift(rep.obj, -param_), raw, rep.q};
    }

    /// F(f) : F(X) -> F(Y), given the images of X and Y from apply().
    ChainMap<K> apply(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y, const Image& fx,
                      const Image& fy) const {
        switch (kind_) {
            case FunctorKind::Identity: return normalize(f, x, y);
            case FunctorKind::Shift: return shift(normalize(f, x, y), param_);
            case FunctorKind::Nakayama: break;
        }
        ChainMap<K> nf;
        nf.lo = x.lo;
        for (int i = x.lo; i <= x.hi(); ++i) nf.f.push_back(nu_->apply(f.at(i, x, y), x.term(i), y.term(i)));
        Complex<K> px = shift(fx.obj, param_), py = shift(fy.obj, param_);
        ChainMap<K> target = compose(fx.q, nf, px, fx.raw, fy.raw);
        auto lift = lift_through_quasi_iso(target, fy.q, px, py, fy.raw);
        return shift(lift.map, -param_);
    }

    /// Inverse image of an object (for nu_n: nu^{-1} of an injective replacement, then [n]).
    Image apply_inverse(const Complex<K>& x) const {
        switch (kind_) {
            case FunctorKind::Identity: return {x, {}, {}};
            case FunctorKind::Shift: return {shift(x, -param_), {}, {}};
            case FunctorKind::Nakayama: break;
        }
        auto inj = injective_replacement(x, op_, bound_);
        Complex<K> raw = termwise_nu_inverse(inj.obj);
        auto ex = make_explicit(raw);
        // store the injective replacement in raw/q for the morphism action
        return {shift(ex.obj, param_), inj.obj, inj.q};
    }

    /// F^{-1}(f), given images from apply_inverse().
    ChainMap<K> apply_inverse(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y, const Image& fx,
                              const Image& fy) const {
        switch (kind_) {
            case FunctorKind::Identity: return normalize(f, x, y);
            case FunctorKind::Shift: return shift(normalize(f, x, y), -param_);
            case FunctorKind::Nakayama: break;
        }
        // extend j_X f... find g : I_X -> I_Y with j_X g ~ f j_Y, by duality
        ChainMap<K> fj = compose(f, fy.q, x, y, fy.raw);
        Complex<K> dix = dual(fx.raw, op_), diy = dual(fy.raw, op_), dx = dual(x, op_);
        ChainMap<K> dfj = dual(fj, x, fy.raw);       // D I_Y -> D X
        ChainMap<K> djx = dual(fx.q, x, fx.raw);     // D I_X -> D X
        auto lift = lift_through_quasi_iso(dfj, djx, diy, dix, dx);
        ChainMap<K> g = dual(lift.map, diy, dix);    // I_X -> I_Y
        // termwise nu^{-1}, transported to the explicit terms
        Complex<K> rx = termwise_nu_inverse(fx.raw), ry = termwise_nu_inverse(fy.raw);
        auto ex = make_explicit(rx), ey = make_explicit(ry);
        ChainMap<K> out;
        out.lo = ex.obj.lo;
        for (int i = ex.obj.lo; i <= ex.obj.hi(); ++i) {
            ModMap<K> gi = nu_->apply_inverse(g.at(i, fx.raw, fy.raw), fx.raw.term(i), fy.raw.term(i));
            ModMap<K> to = ex.q.at(i, ex.obj, rx);
            ModMap<K> back = ey.obj.in_range(i) ? inverse_iso(ey.q.at(i, ey.obj, ry))
                                                : ModMap<K>::zero(ry.term(i), ey.obj.term(i));
            out.f.push_back(to * gi * back);
        }
        return shift(normalize(out, ex.obj, ey.obj), param_);
    }

    /// F^k(X) for k >= 0 by iteration; k < 0 through the inverse.
    Complex<K> power(const Complex<K>& x, int k) const {
        Complex<K> cur = x;
        for (int i = 0; i < k; ++i) cur = apply(cur).obj;
        for (int i = 0; i > k; --i) cur = apply_inverse(cur).obj;
        return cur;
    }

    /// F^k(f) for k >= 0.
    ChainMap<K> power(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y, int k) const {
        if (k < 0 && !strictly_invertible())
            throw Error(ErrorKind::Unsupported, "negative powers of " + name() + " on morphisms");
        ChainMap<K> cur = normalize(f, x, y);
        Complex<K> cx = x, cy = y;
        for (int i = 0; i < k; ++i) {
            auto ix = apply(cx), iy = apply(cy);
            cur = apply(cur, cx, cy, ix, iy);
            cx = ix.obj;
            cy = iy.obj;
        }
        for (int i = 0; i > k; --i) {
            auto ix = apply_inverse(cx), iy = apply_inverse(cy);
            cur = apply_inverse(cur, cx, cy, ix, iy);
            cx = ix.obj;
            cy = iy.obj;
        }
        return cur;
    }

    /// The comparison F(X[j]) -> F(X)[j]. It is the identity whenever both
    /// sides are equal as complexes (always for the identity and shifts, and
    /// for nu_n with j even); otherwise it is the lift of the identity of
    /// nu(X)[j] through the two replacements.
    ChainMap<K> delta(const Complex<K>& x, int j) const {
        auto a = apply(shift(x, j));
        Complex<K> b = shift(apply(x).obj, j);
        if (a.obj.lo == b.lo && a.obj.terms.size() == b.terms.size() && same_differentials(a.obj, b))
            return ChainMap<K>::identity(a.obj);
        ensure(kind_ == FunctorKind::Nakayama, "delta: unexpected mismatch");
        auto ix = apply(x);
        Complex<K> raw_shift = shift(ix.raw, j);
        Complex<K> pa = shift(a.obj, param_), pb = shift(ix.obj, param_ + j);
        ChainMap<K> qb = shift(ix.q, j);
        auto lift = lift_through_quasi_iso(a.q, qb, pa, pb, raw_shift);
        return shift(lift.map, -param_);
    }

    Complex<K> termwise_nu(const Complex<K>& x) const {
        std::vector<Rep<K>> ts;
        std::vector<ModMap<K>> ds;
        for (const auto& t : x.terms) ts.push_back(nu_->apply(t));
        for (std::size_t k = 0; k < x.d.size(); ++k) ds.push_back(nu_->apply(x.d[k], x.terms[k], x.terms[k + 1]));
        return Complex<K>(alg_, x.lo, std::move(ts), std::move(ds));
    }

    Complex<K> termwise_nu_inverse(const Complex<K>& x) const {
        std::vector<Rep<K>> ts;
        std::vector<ModMap<K>> ds;
        for (const auto& t : x.terms) ts.push_back(nu_->apply_inverse(t));
        for (std::size_t k = 0; k < x.d.size(); ++k)
            ds.push_back(nu_->apply_inverse(x.d[k], x.terms[k], x.terms[k + 1]));
        return Complex<K>(alg_, x.lo, std::move(ts), std::move(ds));
    }

    const Nakayama<K>& nakayama_data() const { return *nu_; }

private:
    Functor(FunctorKind k, AlgPtr<K> alg, int p) : kind_(k), alg_(std::move(alg)), param_(p) {}

    static bool same_differentials(const Complex<K>& a, const Complex<K>& b) {
        for (std::size_t k = 0; k < a.terms.size(); ++k)
            if (a.terms[k].tops != b.terms[k].tops || a.terms[k].dims != b.terms[k].dims) return false;
        return a.d == b.d;
    }

    static void check_finite_global_dimension(const AlgPtr<K>& alg, std::size_t bound) {
        for (std::size_t t = 0; t < alg->num_idempotents(); ++t) {
            try {
                min_proj_resolution(simple_module(alg, t), bound);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ResolutionTooLong) throw;
                throw Error(ErrorKind::InfiniteGlobalDimension,
                            "simple module at vertex " + alg->idempotent_names[t] + " has no resolution within the bound");
            }
        }
    }

    FunctorKind kind_;
    AlgPtr<K> alg_;
    int param_ = 0;
    std::size_t bound_ = 32;
    std::shared_ptr<Nakayama<K>> nu_;
    AlgPtr<K> op_;
};

}  // namespace angleforge
