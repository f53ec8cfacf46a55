#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

#include "ringrep/ring.hpp"

namespace ringrep {

using Rational = boost::multiprecision::cpp_rational;

// One letter of a formal word: a unitary u^n or an isometry s_r (r != 0).
class Generator {
public:
    enum class Kind : std::uint8_t { U, S };

    static Generator u(RingElement n) { return Generator(Kind::U, std::move(n)); }
    static Generator s(RingElement r) {
        if (r.is_zero()) throw ArgumentError("s-generator requires a nonzero element");
        return Generator(Kind::S, std::move(r));
    }

    Kind kind() const { return kind_; }
    bool is_u() const { return kind_ == Kind::U; }
    const RingElement& elem() const { return elem_; }
    const Ring& ring() const { return elem_.ring(); }

private:
    Generator(Kind kind, RingElement elem) : kind_(kind), elem_(std::move(elem)) {}
    Kind kind_;
    RingElement elem_;
};

// A formal product of generators; the leftmost letter is applied last.
class Word {
public:
    explicit Word(Ring ring) : ring_(std::move(ring)) {}
    Word(Ring ring, std::vector<Generator> letters);

    const Ring& ring() const { return ring_; }
    const std::vector<Generator>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void append(Generator g); // rejects ring mismatch
    friend Word concat(const Word& a, const Word& b);

private:
    Ring ring_;
    std::vector<Generator> letters_;
};

// The unique reduced shape u^N s_R of an adjoint-free word. Acts on basis
// labels as the affine map q -> mult*q + trans; identity is (1, 0).
class NormalForm {
public:
    NormalForm(RingElement mult, RingElement trans);
    static NormalForm identity(const Ring& ring);

    const RingElement& mult() const { return mult_; }
    const RingElement& trans() const { return trans_; }
    const Ring& ring() const { return mult_.ring(); }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.mult_ == b.mult_ && a.trans_ == b.trans_;
    }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

private:
    RingElement mult_; // nonzero
    RingElement trans_;
};

int compare(const NormalForm& a, const NormalForm& b);

// Folds the relations s_r s_t = s_{rt}, u^n u^m = u^{m+n}, s_r u^n = u^{rn} s_r
// scanning right to left; total on well-formed words and idempotent.
NormalForm normalize(const Word& w);

// Composition of the affine actions: (a.mult*b.mult, a.trans + a.mult*b.trans).
NormalForm nf_multiply(const NormalForm& a, const NormalForm& b);

// mult*q + trans. q may live in the normal form's ring or its fraction field
// (the normal form is embedded first in that case).
RingElement act_affine(const NormalForm& nf, const RingElement& q);

// (R, N) -> (R/1, N/1) over Q(R).
NormalForm embed_in_quotient_field(const NormalForm& nf);

struct ComplexRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// A finite exact linear combination of normal forms; no zero coefficients stored.
class AlgebraElement {
public:
    explicit AlgebraElement(Ring ring) : ring_(std::move(ring)) {}
    static AlgebraElement monomial(const NormalForm& nf, ComplexRational coef);

    const Ring& ring() const { return ring_; }
    std::size_t term_count() const { return terms_.size(); }
    ComplexRational coefficient(const NormalForm& nf) const;
    const std::map<NormalForm, ComplexRational,
                   bool (*)(const NormalForm&, const NormalForm&)>&
    terms() const {
        return terms_;
    }

    AlgebraElement& add_term(const NormalForm& nf, const ComplexRational& coef);

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    static bool nf_less(const NormalForm& a, const NormalForm& b) { return compare(a, b) < 0; }

    Ring ring_;
    std::map<NormalForm, ComplexRational, bool (*)(const NormalForm&, const NormalForm&)> terms_{
        &AlgebraElement::nf_less};
};

// Bilinear extension of nf_multiply; zero coefficients pruned.
AlgebraElement algebra_multiply(const AlgebraElement& x, const AlgebraElement& y);

// Supported unital ring monomorphisms.
enum class RingEmbedding : std::uint8_t {
    IntegersToGaussian,  // Z -> Z[i]
    IntegersToRationals, // Z -> Q(Z)
    ConstantsToPoly,     // F_p -> F_p[x]
};

Ring embedding_source(RingEmbedding e, std::uint32_t p = 0);
Ring embedding_target(RingEmbedding e, std::uint32_t p = 0);
RingElement apply_embedding(RingEmbedding e, const RingElement& x);
Word induced_map(RingEmbedding e, const Word& w);
NormalForm induced_map(RingEmbedding e, const NormalForm& nf);

} // namespace ringrep
