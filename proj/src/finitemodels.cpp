#include "ringrep/finitemodels.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "ringrep/parse.hpp"

namespace ringrep {

namespace {

std::uint32_t mod_residue(const Int& v, std::uint32_t m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

std::string fraction_label(const Fraction& f) {
    return format_element(RingElement::fraction(f));
}

} // namespace

PermMatrix::PermMatrix(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (std::uint32_t img : images_) {
        if (img >= images_.size() || hit[img]) throw ArgumentError("permutation: not a bijection");
        hit[img] = true;
    }
}

PermMatrix PermMatrix::identity(std::uint32_t dim) {
    std::vector<std::uint32_t> images(dim);
    for (std::uint32_t j = 0; j < dim; ++j) images[j] = j;
    return PermMatrix(std::move(images));
}

PermMatrix PermMatrix::compose_after(const PermMatrix& inner) const {
    if (dim() != inner.dim()) throw ArgumentError("permutation composition: dimension mismatch");
    std::vector<std::uint32_t> images(dim());
    for (std::uint32_t j = 0; j < dim(); ++j) images[j] = images_[inner.images_[j]];
    return PermMatrix(std::move(images));
}

PermMatrix PermMatrix::inverse() const {
    std::vector<std::uint32_t> images(dim());
    for (std::uint32_t j = 0; j < dim(); ++j) images[images_[j]] = j;
    return PermMatrix(std::move(images));
}

PermMatrix PermMatrix::power(long long k) const {
    PermMatrix base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    PermMatrix acc = identity(dim());
    while (e > 0) {
        if (e & 1) acc = acc.compose_after(base);
        base = base.compose_after(base);
        e >>= 1;
    }
    return acc;
}

std::string PermMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::uint32_t j = 0; j < dim(); ++j) {
        if (j) out << " ";
        out << images_[j];
    }
    out << "]";
    return out.str();
}

bool as_affine_map(const PermMatrix& perm, std::uint32_t m, std::uint32_t* a_out,
                   std::uint32_t* b_out) {
    if (perm.dim() != m || m == 0) return false;
    std::uint32_t b = perm(0);
    std::uint32_t a = m == 1 ? 0 : (perm(1) + m - b) % m;
    if (m > 1 && gcd_u32(a, m) != 1) return false;
    for (std::uint32_t j = 0; j < m; ++j) {
        if (perm(j) != (static_cast<std::uint64_t>(a) * j + b) % m) return false;
    }
    if (a_out) *a_out = a;
    if (b_out) *b_out = b;
    return true;
}

FiniteModel FiniteModel::cyclic(std::uint32_t m) {
    if (m < 1) throw ArgumentError("cyclic model: m must be >= 1");
    std::vector<std::uint32_t> vimg(m);
    for (std::uint32_t j = 0; j < m; ++j) vimg[j] = (j + 1) % m;
    PermMatrix shift(std::move(vimg));

    std::map<std::uint32_t, PermMatrix> mult;
    std::vector<std::uint32_t> residues;
    for (std::uint32_t r = 0; r < m; ++r) {
        if (gcd_u32(r, m) != 1 && m > 1) continue;
        std::vector<std::uint32_t> img(m);
        for (std::uint32_t j = 0; j < m; ++j)
            img[j] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * j) % m);
        mult.emplace(r, PermMatrix(std::move(img)));
        residues.push_back(r);
    }

    // exhaustive relation check: T_r V = V^r T_r and T_r T_t = T_{rt}
    for (std::uint32_t r : residues) {
        const PermMatrix& tr = mult.at(r);
        if (tr.compose_after(shift) != shift.power(r).compose_after(tr))
            throw Error("cyclic model: covariance failed");
        for (std::uint32_t t : residues) {
            std::uint32_t rt = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * t) % m);
            if (tr.compose_after(mult.at(t)) != mult.at(rt))
                throw Error("cyclic model: multiplier semigroup failed");
        }
    }
    return FiniteModel(m, std::move(shift), std::move(mult), std::move(residues));
}

const PermMatrix& FiniteModel::multiplier(std::uint32_t r) const {
    auto it = mult_.find(m_ == 1 ? 0 : r % m_);
    if (it == mult_.end())
        throw ArgumentError("multiplier " + std::to_string(r) + " shares a factor with " +
                            std::to_string(m_));
    return it->second;
}

PermMatrix extend_raw(const FiniteModel& model, const Int& num, const Int& den,
                      Generator::Kind kind) {
    std::uint32_t m = model.modulus();
    if (den == 0) throw ArgumentError("extend: zero denominator");
    std::uint32_t q = mod_residue(den, m);
    if (m > 1 && gcd_u32(q, m) != 1)
        throw ArgumentError("extend: denominator " + den.str() + " shares a factor with modulus " +
                            std::to_string(m));
    std::uint32_t p = mod_residue(num, m);
    if (kind == Generator::Kind::S) {
        if (num == 0) throw ArgumentError("extend: s requires a nonzero numerator");
        if (m > 1 && gcd_u32(p, m) != 1)
            throw ArgumentError("extend: numerator " + num.str() +
                                " shares a factor with modulus " + std::to_string(m));
        // T_p T_q^{-1}
        return model.multiplier(p).compose_after(model.multiplier(q).inverse());
    }
    // T_q^{-1} V^p T_q: translation by p*q^{-1}
    const PermMatrix& tq = model.multiplier(q);
    return tq.inverse().compose_after(model.shift().power(p).compose_after(tq));
}

PermMatrix extend_to_fractions(const FiniteModel& model, const Fraction& f, Generator::Kind kind) {
    if (f.base_ring().kind() != Ring::Kind::Integers)
        throw UnsupportedError("extend: fractions over Z only");
    return extend_raw(model, f.num().as_integer(), f.den().as_integer(), kind);
}

Report verify_model(const FiniteModel& model) {
    std::uint32_t m = model.modulus();
    Report rep("model");
    rep.set("m", static_cast<long long>(m));
    {
        std::ostringstream rs;
        bool first = true;
        for (std::uint32_t r : model.multiplier_residues()) {
            if (!first) rs << " ";
            first = false;
            rs << r;
        }
        rep.set("multipliers", rs.str());
    }

    for (std::uint32_t r : model.multiplier_residues()) {
        const PermMatrix& tr = model.multiplier(r);
        bool cov = tr.compose_after(model.shift()) ==
                   model.shift().power(r).compose_after(tr);
        rep.add_point(cov ? Report::PointClass::Verified : Report::PointClass::Violated,
                      "cov(r=" + std::to_string(r) + ")");
        for (std::uint32_t t : model.multiplier_residues()) {
            std::uint32_t rt = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * t) % m);
            bool ok = tr.compose_after(model.multiplier(t)) == model.multiplier(rt);
            rep.add_point(ok ? Report::PointClass::Verified : Report::PointClass::Violated,
                          "mul(r=" + std::to_string(r) + ",t=" + std::to_string(t) + ")");
        }
    }
    rep.add_point(model.shift().power(m) == PermMatrix::identity(m)
                      ? Report::PointClass::Verified
                      : Report::PointClass::Violated,
                  "shift-order");

    // the two u-extension conventions, logged side by side on a sample fraction
    std::uint32_t q_sample = 0;
    for (std::uint32_t r : model.multiplier_residues()) {
        if (r > 1) {
            q_sample = r;
            break;
        }
    }
    if (q_sample != 0) {
        const PermMatrix& tq = model.multiplier(q_sample);
        PermMatrix corrected = tq.inverse().compose_after(model.shift().compose_after(tq));
        PermMatrix paper = tq.compose_after(model.shift().compose_after(tq.inverse()));
        std::uint32_t a = 0, b_corr = 0, b_paper = 0;
        as_affine_map(corrected, m, &a, &b_corr);
        as_affine_map(paper, m, &a, &b_paper);
        std::string f = "1/" + std::to_string(q_sample);
        rep.set("convention.u[" + f + "].corrected", "translation " + std::to_string(b_corr));
        rep.set("convention.u[" + f + "].paper-order", "translation " + std::to_string(b_paper));
    }
    return rep;
}

Report verify_quotient_relations(const FiniteModel& model,
                                 const std::vector<std::pair<Fraction, Fraction>>& sample) {
    std::uint32_t m = model.modulus();
    Report rep("quotient-relations");
    rep.set("m", static_cast<long long>(m));
    rep.set("pairs", static_cast<long long>(sample.size()));

    auto point = [&](bool ok, const std::string& label) {
        rep.add_point(ok ? Report::PointClass::Verified : Report::PointClass::Violated, label);
    };

    auto s_admissible = [&](const Fraction& f) {
        if (f.is_zero()) return false;
        return m == 1 || gcd_u32(mod_residue(f.num().as_integer(), m), m) == 1;
    };

    for (const auto& [a, b] : sample) {
        std::string la = fraction_label(a), lb = fraction_label(b);
        PermMatrix ua = extend_to_fractions(model, a, Generator::Kind::U);
        PermMatrix ub = extend_to_fractions(model, b, Generator::Kind::U);
        point(ua.compose_after(ub) == extend_to_fractions(model, a.add(b), Generator::Kind::U),
              "u" + la + ".u" + lb);
        if (s_admissible(a) && s_admissible(b)) {
            PermMatrix sa = extend_to_fractions(model, a, Generator::Kind::S);
            PermMatrix sb = extend_to_fractions(model, b, Generator::Kind::S);
            point(sa.compose_after(sb) == extend_to_fractions(model, a.mul(b), Generator::Kind::S),
                  "s" + la + ".s" + lb);
            point(sa.compose_after(ub) ==
                      extend_to_fractions(model, a.mul(b), Generator::Kind::U).compose_after(sa),
                  "s" + la + ".u" + lb + ".covariance");
            // every extended operator stays inside the affine group <V, T_r>
            point(as_affine_map(sa, m, nullptr, nullptr), "affine.s" + la);
            point(as_affine_map(ua, m, nullptr, nullptr), "affine.u" + la);
        }
    }

    // T_p T_q^{-1} = T_q^{-1} T_p over all residue pairs
    for (std::uint32_t p : model.multiplier_residues()) {
        for (std::uint32_t q : model.multiplier_residues()) {
            const PermMatrix& tp = model.multiplier(p);
            PermMatrix tq_inv = model.multiplier(q).inverse();
            point(tp.compose_after(tq_inv) == tq_inv.compose_after(tp),
                  "commute(T_" + std::to_string(p) + ",T_" + std::to_string(q) + "*)");
        }
    }
    return rep;
}

Report check_factorization(const FiniteModel& model, std::uint64_t seed) {
    std::uint32_t m = model.modulus();
    Report rep("factorization");
    rep.set("m", static_cast<long long>(m));
    rep.set("seed", static_cast<long long>(seed));

    auto point = [&](bool ok, const std::string& label) {
        rep.add_point(ok ? Report::PointClass::Verified : Report::PointClass::Violated, label);
    };

    for (long long n = -static_cast<long long>(m); n <= static_cast<long long>(m); ++n) {
        PermMatrix lhs = extend_raw(model, Int(n), Int(1), Generator::Kind::U);
        point(lhs == model.shift().power(n), "u[" + std::to_string(n) + "/1]");
    }
    for (std::uint32_t p : model.multiplier_residues()) {
        if (p == 0 && m > 1) continue;
        PermMatrix lhs = extend_raw(model, Int(p == 0 ? 1 : p), Int(1), Generator::Kind::S);
        point(lhs == model.multiplier(p == 0 ? 1 : p), "s[" + std::to_string(p == 0 ? 1 : p) + "/1]");
    }

    // two evaluation paths on random normal forms u^N s_R with R coprime to m
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> entry(-50, 50);
    int built = 0;
    while (built < 100) {
        long long rv = entry(rng);
        long long nv = entry(rng);
        if (rv == 0) continue;
        std::uint32_t rres = mod_residue(Int(rv), m);
        if (m > 1 && gcd_u32(rres, m) != 1) continue;
        ++built;
        PermMatrix direct = model.shift().power(nv).compose_after(
            model.multiplier(m == 1 ? 0 : rres));
        PermMatrix through = extend_raw(model, Int(nv), Int(1), Generator::Kind::U)
                                 .compose_after(extend_raw(model, Int(rv), Int(1), Generator::Kind::S));
        point(direct == through,
              "nf(" + std::to_string(rv) + "," + std::to_string(nv) + ")");
    }
    return rep;
}

} // namespace ringrep
