#include "ringrep/words.hpp"

namespace ringrep {

Word::Word(Ring ring, std::vector<Generator> letters) : ring_(std::move(ring)) {
    letters_.reserve(letters.size());
    for (Generator& g : letters) append(std::move(g));
}

void Word::append(Generator g) {
    if (g.ring() != ring_)
        throw RingMismatchError("word letter from " + g.ring().name() + " in a word over " +
                                ring_.name());
    letters_.push_back(std::move(g));
}

Word concat(const Word& a, const Word& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("concat: words over different rings");
    Word out = a;
    for (const Generator& g : b.letters()) out.append(g);
    return out;
}

NormalForm::NormalForm(RingElement mult, RingElement trans)
    : mult_(std::move(mult)), trans_(std::move(trans)) {
    if (mult_.ring() != trans_.ring())
        throw RingMismatchError("normal form: multiplier and translation rings differ");
    if (mult_.is_zero()) throw ArgumentError("normal form: zero multiplier");
}

NormalForm NormalForm::identity(const Ring& ring) {
    return NormalForm(RingElement::one(ring), RingElement::zero(ring));
}

int compare(const NormalForm& a, const NormalForm& b) {
    int c = compare(a.mult(), b.mult());
    if (c != 0) return c;
    return compare(a.trans(), b.trans());
}

NormalForm normalize(const Word& w) {
    RingElement mult = RingElement::one(w.ring());
    RingElement trans = RingElement::zero(w.ring());
    const auto& letters = w.letters();
    for (std::size_t i = letters.size(); i-- > 0;) {
        const Generator& g = letters[i];
        if (g.is_u()) {
            trans = trans + g.elem();
        } else {
            mult = g.elem() * mult;
            trans = g.elem() * trans;
        }
    }
    return NormalForm(std::move(mult), std::move(trans));
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("nf_multiply: different rings");
    return NormalForm(a.mult() * b.mult(), a.trans() + a.mult() * b.trans());
}

RingElement act_affine(const NormalForm& nf, const RingElement& q) {
    if (q.ring() == nf.ring()) return nf.mult() * q + nf.trans();
    if (q.ring().is_fraction_field() && q.ring().base() == nf.ring()) {
        NormalForm lifted = embed_in_quotient_field(nf);
        return lifted.mult() * q + lifted.trans();
    }
    throw RingMismatchError("act_affine: point from " + q.ring().name() +
                            " under a normal form over " + nf.ring().name());
}

NormalForm embed_in_quotient_field(const NormalForm& nf) {
    return NormalForm(embed_in_fraction_field(nf.mult()), embed_in_fraction_field(nf.trans()));
}

AlgebraElement AlgebraElement::monomial(const NormalForm& nf, ComplexRational coef) {
    AlgebraElement out(nf.ring());
    out.add_term(nf, coef);
    return out;
}

ComplexRational AlgebraElement::coefficient(const NormalForm& nf) const {
    auto it = terms_.find(nf);
    if (it == terms_.end()) return {0, 0};
    return it->second;
}

AlgebraElement& AlgebraElement::add_term(const NormalForm& nf, const ComplexRational& coef) {
    if (nf.ring() != ring_) throw RingMismatchError("algebra term over a different ring");
    if (coef.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(nf, coef);
    if (!inserted) {
        it->second = it->second + coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("algebra add: different rings");
    AlgebraElement out = a;
    for (const auto& [nf, c] : b.terms()) out.add_term(nf, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("algebra sub: different rings");
    AlgebraElement out = a;
    for (const auto& [nf, c] : b.terms()) out.add_term(nf, ComplexRational{-c.re, -c.im});
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.ring() != b.ring()) return false;
    if (a.term_count() != b.term_count()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (compare(ia->first, ib->first) != 0 || !(ia->second == ib->second)) return false;
    }
    return true;
}

AlgebraElement algebra_multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.ring() != y.ring()) throw RingMismatchError("algebra_multiply: different rings");
    AlgebraElement out(x.ring());
    for (const auto& [na, ca] : x.terms()) {
        for (const auto& [nb, cb] : y.terms()) {
            out.add_term(nf_multiply(na, nb), ca * cb);
        }
    }
    return out;
}

Ring embedding_source(RingEmbedding e, std::uint32_t p) {
    switch (e) {
    case RingEmbedding::IntegersToGaussian: return Ring::integers();
    case RingEmbedding::IntegersToRationals: return Ring::integers();
    case RingEmbedding::ConstantsToPoly: return Ring::prime_field(p);
    }
    throw Error("embedding_source: bad embedding");
}

Ring embedding_target(RingEmbedding e, std::uint32_t p) {
    switch (e) {
    case RingEmbedding::IntegersToGaussian: return Ring::gaussian_integers();
    case RingEmbedding::IntegersToRationals: return Ring::fraction_field(Ring::integers());
    case RingEmbedding::ConstantsToPoly: return Ring::poly_over_prime_field(p);
    }
    throw Error("embedding_target: bad embedding");
}

RingElement apply_embedding(RingEmbedding e, const RingElement& x) {
    switch (e) {
    case RingEmbedding::IntegersToGaussian:
        if (x.ring().kind() != Ring::Kind::Integers)
            throw RingMismatchError("embedding expects an integer");
        return RingElement::gaussian(x.as_integer(), 0);
    case RingEmbedding::IntegersToRationals:
        if (x.ring().kind() != Ring::Kind::Integers)
            throw RingMismatchError("embedding expects an integer");
        return embed_in_fraction_field(x);
    case RingEmbedding::ConstantsToPoly:
        if (x.ring().kind() != Ring::Kind::PrimeField)
            throw RingMismatchError("embedding expects a prime-field element");
        return RingElement::poly(x.ring().modulus(), {Int(x.as_residue())});
    }
    throw Error("apply_embedding: bad embedding");
}

namespace {

void require_embedding_source(RingEmbedding e, const Ring& ring) {
    Ring::Kind want = e == RingEmbedding::ConstantsToPoly ? Ring::Kind::PrimeField
                                                          : Ring::Kind::Integers;
    if (ring.kind() != want)
        throw RingMismatchError("embedding does not apply to " + ring.name());
}

} // namespace

Word induced_map(RingEmbedding e, const Word& w) {
    require_embedding_source(e, w.ring());
    std::uint32_t p = w.ring().modulus();
    Word out(embedding_target(e, p));
    for (const Generator& g : w.letters()) {
        RingElement img = apply_embedding(e, g.elem());
        out.append(g.is_u() ? Generator::u(std::move(img)) : Generator::s(std::move(img)));
    }
    return out;
}

NormalForm induced_map(RingEmbedding e, const NormalForm& nf) {
    require_embedding_source(e, nf.ring());
    return NormalForm(apply_embedding(e, nf.mult()), apply_embedding(e, nf.trans()));
}

} // namespace ringrep
