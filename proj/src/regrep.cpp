#include "ringrep/regrep.hpp"

#include <algorithm>

#include "ringrep/parse.hpp"

namespace ringrep {

namespace {

void require_window_ring(const Generator& g, const Window& w) {
    if (g.ring() != w.ring())
        throw RingMismatchError("generator over " + g.ring().name() + " on a window over " +
                                w.ring().name());
}

} // namespace

PartialInjection PartialInjection::identity(WindowPtr w) {
    std::vector<std::optional<std::size_t>> map(w->size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return PartialInjection(std::move(w), std::move(map));
}

PartialInjection::PartialInjection(WindowPtr w, std::vector<std::optional<std::size_t>> map)
    : window_(std::move(w)), map_(std::move(map)) {
    if (map_.size() != window_->size()) throw ArgumentError("partial injection: size mismatch");
    std::vector<bool> hit(map_.size(), false);
    for (const auto& img : map_) {
        if (!img) continue;
        if (*img >= map_.size() || hit[*img]) throw ArgumentError("partial injection: not injective");
        hit[*img] = true;
    }
}

std::optional<RingElement> PartialInjection::apply_label(const RingElement& q) const {
    auto pos = window_->index_of(q);
    if (!pos) return std::nullopt;
    auto img = map_[*pos];
    if (!img) return std::nullopt;
    return window_->label(*img);
}

std::size_t PartialInjection::domain_size() const {
    std::size_t n = 0;
    for (const auto& img : map_)
        if (img) ++n;
    return n;
}

bool PartialInjection::is_bijection() const { return is_total(); } // injective + total on a finite set

PartialInjection PartialInjection::compose_after(const PartialInjection& inner) const {
    if (window_ != inner.window_)
        throw ArgumentError("partial injection composition: different windows");
    std::vector<std::optional<std::size_t>> map(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        auto mid = inner.map_[i];
        if (mid) map[i] = map_[*mid];
    }
    return PartialInjection(window_, std::move(map));
}

PartialInjection PartialInjection::adjoint() const {
    std::vector<std::optional<std::size_t>> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i]) inv[*map_[i]] = i;
    }
    return PartialInjection(window_, std::move(inv));
}

bool operator==(const PartialInjection& a, const PartialInjection& b) {
    return a.window_ == b.window_ && a.map_ == b.map_;
}

PartialInjection rep_generator(const Generator& g, WindowPtr w) {
    require_window_ring(g, *w);
    std::vector<std::optional<std::size_t>> map(w->size());
    for (std::size_t i = 0; i < w->size(); ++i) {
        const RingElement& q = w->label(i);
        RingElement image = g.is_u() ? q + g.elem() : g.elem() * q;
        map[i] = w->index_of(image);
    }
    return PartialInjection(std::move(w), std::move(map));
}

PartialInjection rep_word(const Word& wd, WindowPtr w) {
    if (wd.ring() != w->ring())
        throw RingMismatchError("word over " + wd.ring().name() + " on a window over " +
                                w->ring().name());
    PartialInjection acc = PartialInjection::identity(w);
    // leftmost letter applied last: fold left to right as acc = acc . rep(letter)
    for (const Generator& g : wd.letters()) acc = acc.compose_after(rep_generator(g, w));
    return acc;
}

PartialInjection unitary_regular_rep(const Generator& g, WindowPtr fraction_window) {
    if (!fraction_window->ring().is_fraction_field())
        throw ArgumentError("unitary_regular_rep: window must be a fraction window");
    if (g.ring() != fraction_window->ring().base() && g.ring() != fraction_window->ring())
        throw RingMismatchError("generator ring does not match the fraction window");
    RingElement lifted = embed_in_fraction_field(g.elem());
    Generator gq = g.is_u() ? Generator::u(lifted) : Generator::s(lifted);
    return rep_generator(gq, std::move(fraction_window));
}

const char* relation_name(RelationKind kind) {
    switch (kind) {
    case RelationKind::MulS: return "mul-s";
    case RelationKind::AddU: return "add-u";
    case RelationKind::Covariance: return "covariance";
    case RelationKind::Isometry: return "isometry";
    case RelationKind::UnitUnitarity: return "unit-unitarity";
    }
    return "?";
}

namespace {

const RingElement& want(const std::optional<RingElement>& v, const char* name) {
    if (!v) throw ArgumentError(std::string("relation check: missing parameter ") + name);
    return *v;
}

const RingElement& want_nonzero(const std::optional<RingElement>& v, const char* name) {
    const RingElement& e = want(v, name);
    if (e.is_zero()) throw ArgumentError(std::string("relation check: ") + name + " must be nonzero");
    return e;
}

struct RelationSides {
    std::optional<PartialInjection> lhs;
    std::optional<PartialInjection> rhs;
};

RelationSides build_sides(RelationKind kind, const RelationParams& params, const WindowPtr& w) {
    RelationSides out;
    switch (kind) {
    case RelationKind::MulS: {
        const RingElement& r = want_nonzero(params.r, "r");
        const RingElement& t = want_nonzero(params.t, "t");
        out.lhs = rep_generator(Generator::s(r), w).compose_after(rep_generator(Generator::s(t), w));
        out.rhs = rep_generator(Generator::s(r * t), w);
        break;
    }
    case RelationKind::AddU: {
        const RingElement& n = want(params.n, "n");
        const RingElement& m = want(params.m, "m");
        out.lhs = rep_generator(Generator::u(n), w).compose_after(rep_generator(Generator::u(m), w));
        out.rhs = rep_generator(Generator::u(n + m), w);
        break;
    }
    case RelationKind::Covariance: {
        const RingElement& r = want_nonzero(params.r, "r");
        const RingElement& n = want(params.n, "n");
        out.lhs = rep_generator(Generator::s(r), w).compose_after(rep_generator(Generator::u(n), w));
        out.rhs =
            rep_generator(Generator::u(r * n), w).compose_after(rep_generator(Generator::s(r), w));
        break;
    }
    case RelationKind::Isometry: {
        const RingElement& r = want_nonzero(params.r, "r");
        PartialInjection sr = rep_generator(Generator::s(r), w);
        out.lhs = sr.adjoint().compose_after(sr);
        out.rhs = PartialInjection::identity(w);
        break;
    }
    case RelationKind::UnitUnitarity:
        want_nonzero(params.r, "r");
        break; // handled point by point
    }
    return out;
}

void set_params(Report& rep, const RelationParams& params) {
    if (params.r) rep.set("r", format_element(*params.r));
    if (params.t) rep.set("t", format_element(*params.t));
    if (params.n) rep.set("n", format_element(*params.n));
    if (params.m) rep.set("m", format_element(*params.m));
}

Report::PointClass classify_unit_unitarity(const RingElement& r, const Window& w,
                                           std::size_t pos) {
    // surjectivity of q -> r*q onto the window: is label(pos) hit from R at all,
    // and if so, from inside the window?
    auto x = divide_exact(w.label(pos), r);
    if (!x) return Report::PointClass::Violated; // missed even on the full space
    return w.contains(*x) ? Report::PointClass::Verified : Report::PointClass::Inconclusive;
}

Report::PointClass classify_point(RelationKind kind, const RelationParams& params,
                                  const RelationSides& sides, const Window& w, std::size_t pos) {
    if (kind == RelationKind::UnitUnitarity) return classify_unit_unitarity(*params.r, w, pos);
    auto la = sides.lhs->apply(pos);
    auto ra = sides.rhs->apply(pos);
    if (!la || !ra) return Report::PointClass::Inconclusive;
    return *la == *ra ? Report::PointClass::Verified : Report::PointClass::Violated;
}

} // namespace

Report check_relation(RelationKind kind, const RelationParams& params, WindowPtr w) {
    Report rep("relation");
    rep.set("relation", relation_name(kind));
    rep.set("ring", w->ring().name());
    set_params(rep, params);
    rep.set("window", w->descriptor());
    if (kind == RelationKind::Covariance) {
        // the orientation the regular representation actually satisfies; the
        // reversed form u^n s_r = s_r u^{rn} fails on it
        rep.set("identity", "s[r]*u[n] = u[r*n]*s[r]");
    }

    RelationSides sides = build_sides(kind, params, w);
    for (std::size_t i = 0; i < w->size(); ++i) {
        rep.add_point(classify_point(kind, params, sides, *w, i), format_element(w->label(i)));
    }

    if (kind == RelationKind::UnitUnitarity) {
        const RingElement& r = *params.r;
        if (is_unit(r)) {
            PartialInjection sr = rep_generator(Generator::s(r), w);
            PartialInjection sinv = rep_generator(Generator::s(unit_inverse(r)), w);
            rep.set("adjoint_equals_inverse", sr.adjoint() == sinv ? "true" : "false");
            rep.set("bijection", sr.is_bijection() ? "true" : "false");
        } else if (w->ring().is_field()) {
            PartialInjection sr = rep_generator(Generator::s(r), w);
            rep.set("bijection", sr.is_bijection() ? "true" : "false");
        }
    }
    return rep;
}

std::optional<RingElement> separation_test(const NormalForm& a, const NormalForm& b,
                                           const Window& w) {
    if (a.ring() != b.ring()) throw RingMismatchError("separation_test: different rings");
    if (a.ring() != w.ring())
        throw RingMismatchError("separation_test: normal forms do not match the window ring");
    if (a == b) return std::nullopt;
    auto conclusive_value = [&](const NormalForm& nf,
                                const RingElement& q) -> std::optional<RingElement> {
        RingElement mid = nf.mult() * q;
        if (!w.contains(mid)) return std::nullopt;
        RingElement img = mid + nf.trans();
        if (!w.contains(img)) return std::nullopt;
        return img;
    };
    for (std::size_t pos : w.magnitude_order()) {
        const RingElement& q = w.label(pos);
        auto va = conclusive_value(a, q);
        if (!va) continue;
        auto vb = conclusive_value(b, q);
        if (!vb) continue;
        if (!(*va == *vb)) return q;
    }
    return std::nullopt;
}

Report check_compression(const Generator& g, WindowPtr inner, WindowPtr outer) {
    if (!outer->ring().is_fraction_field() || outer->ring().base() != inner->ring())
        throw ArgumentError("check_compression: outer must be the fraction window of inner's ring");
    require_window_ring(g, *inner);

    Report rep("compression");
    rep.set("ring", inner->ring().name());
    rep.set("generator", std::string(g.is_u() ? "u" : "s") + "[" + format_element(g.elem()) + "]");
    rep.set("inner", inner->descriptor());
    rep.set("outer", outer->descriptor());

    // precondition: the inner window consists of integral points of the outer one
    std::vector<std::size_t> embedded(inner->size());
    for (std::size_t i = 0; i < inner->size(); ++i) {
        auto j = outer->index_of(embed_in_fraction_field(inner->label(i)));
        if (!j) throw ArgumentError("check_compression: inner window is not a subset of outer");
        embedded[i] = *j;
    }

    PartialInjection tilde = unitary_regular_rep(g, outer);
    PartialInjection base = rep_generator(g, inner);

    for (std::size_t i = 0; i < inner->size(); ++i) {
        const std::string label = format_element(inner->label(i));
        auto timg = tilde.apply(embedded[i]);
        if (!timg) {
            rep.add_point(Report::PointClass::Inconclusive, label);
            continue;
        }
        const RingElement& image = outer->label(*timg);
        if (!image.as_fraction().is_integral()) {
            // invariance of the integral subspace failed
            rep.add_point(Report::PointClass::Violated, label);
            continue;
        }
        // compression: project the image onto the inner window
        std::optional<std::size_t> compressed;
        for (std::size_t k = 0; k < inner->size(); ++k) {
            if (embedded[k] == *timg) {
                compressed = k;
                break;
            }
        }
        auto direct = base.apply(i);
        rep.add_point(compressed == direct ? Report::PointClass::Verified
                                           : Report::PointClass::Violated,
                      label);
    }
    return rep;
}

std::optional<Int> truncation_conclusive_bound(RelationKind kind, const RelationParams& params,
                                               const RingElement& q, Int start, const Int& max_bound) {
    const Ring ring = q.ring();
    if (ring.kind() == Ring::Kind::PrimeField) {
        WindowPtr w = std::make_shared<Window>(Window::prime_field_full(ring.modulus()));
        RelationSides sides = build_sides(kind, params, w);
        auto pos = w->index_of(q);
        if (pos && classify_point(kind, params, sides, *w, *pos) == Report::PointClass::Verified)
            return Int(ring.modulus());
        return std::nullopt;
    }
    if (ring.kind() != Ring::Kind::Integers && ring.kind() != Ring::Kind::GaussianIntegers)
        throw UnsupportedError("truncation_conclusive_bound: Z, Z[i] and F_p only");
    if (start < 1) start = 1;
    for (Int bound = start; bound <= max_bound; bound *= 2) {
        WindowPtr w = std::make_shared<Window>(ring.kind() == Ring::Kind::Integers
                                                   ? Window::integer_interval(bound)
                                                   : Window::gaussian_box(bound));
        auto pos = w->index_of(q);
        if (!pos) continue;
        RelationSides sides = build_sides(kind, params, w);
        if (classify_point(kind, params, sides, *w, *pos) == Report::PointClass::Verified)
            return bound;
    }
    return std::nullopt;
}

} // namespace ringrep
