#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ringrep/error.hpp"

namespace ringrep {

using Int = boost::multiprecision::cpp_int;

class Fraction;
class RingElement;

// Descriptor of one of the supported Euclidean domains, or of the fraction
// field of one of them. Values are small and copyable; equality is structural.
class Ring {
public:
    enum class Kind : std::uint8_t {
        Integers,
        GaussianIntegers,
        PrimeField,
        PolyOverPrimeField,
        FractionField,
    };

    static Ring integers();
    static Ring gaussian_integers();
    static Ring prime_field(std::uint32_t p);           // p prime, checked
    static Ring poly_over_prime_field(std::uint32_t p); // p prime, checked
    static Ring fraction_field(const Ring& base);       // base must not itself be a fraction field

    Kind kind() const { return kind_; }
    bool is_fraction_field() const { return kind_ == Kind::FractionField; }
    // The underlying domain for a fraction field; *this otherwise.
    Ring base() const;
    // p for F_p, F_p[x] and their fraction fields; 0 otherwise.
    std::uint32_t modulus() const { return p_; }
    bool is_field() const;
    // Euclidean norms and gcd exist for every supported ring.
    std::string name() const; // "Z", "Z[i]", "F_5", "F_5[x]", "Q(Z)", ...

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind_ == b.kind_ && a.base_kind_ == b.base_kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    Ring(Kind kind, Kind base_kind, std::uint32_t p) : kind_(kind), base_kind_(base_kind), p_(p) {}

    Kind kind_;
    Kind base_kind_; // == kind_ unless FractionField
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

struct GaussianValue {
    Int re;
    Int im;
};

// Coefficients ascending by degree, reduced mod p, no trailing zeros; empty == 0.
struct PolyValue {
    std::vector<std::uint32_t> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// An exact element of a supported ring, always in canonical internal form.
// Immutable after construction; cheap to copy (fractions are shared).
class RingElement {
public:
    static RingElement integer(Int v);
    static RingElement gaussian(Int re, Int im);
    static RingElement residue(std::uint32_t p, const Int& v); // reduced mod p
    static RingElement poly(std::uint32_t p, std::vector<Int> coeffs); // ascending degree
    static RingElement fraction(Fraction f);

    static RingElement zero(const Ring& ring);
    static RingElement one(const Ring& ring);
    // Image of an integer under the unital embedding Z -> R.
    static RingElement from_int(const Ring& ring, const Int& v);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    const Int& as_integer() const;            // Integers only
    const GaussianValue& as_gaussian() const; // GaussianIntegers only
    std::uint32_t as_residue() const;         // PrimeField only
    const PolyValue& as_poly() const;         // PolyOverPrimeField only
    const Fraction& as_fraction() const;      // FractionField only

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b); // same ring required
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

private:
    RingElement(Ring ring, std::variant<Int, GaussianValue, std::uint32_t, PolyValue,
                                        std::shared_ptr<const Fraction>>
                               value)
        : ring_(ring), value_(std::move(value)) {}

    Ring ring_;
    std::variant<Int, GaussianValue, std::uint32_t, PolyValue, std::shared_ptr<const Fraction>>
        value_;
};

// Total deterministic order within one ring (used for windows and term maps).
int compare(const RingElement& a, const RingElement& b);
// Order key by "distance from zero": |n|, Gaussian norm, residue value,
// degree, rational magnitude. Used to scan windows zero-outward.
int compare_by_magnitude(const RingElement& a, const RingElement& b);

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
bool eq(const RingElement& a, const RingElement& b);

bool is_unit(const RingElement& r); // r != 0 required
// Multiplicative inverse of a unit.
RingElement unit_inverse(const RingElement& u);

struct AssociateDecomposition {
    RingElement unit;
    RingElement assoc; // canonical: positive / monic / first-quadrant Gaussian
};
AssociateDecomposition canonical_associate(const RingElement& r); // r != 0 required

// Euclidean quotient and remainder, b != 0.
std::pair<RingElement, RingElement> divmod(const RingElement& a, const RingElement& b);
// Exact quotient if b divides a, nullopt otherwise (b != 0).
std::optional<RingElement> divide_exact(const RingElement& a, const RingElement& b);
// Canonical-associate gcd; not both zero.
RingElement gcd(const RingElement& a, const RingElement& b);

// A reduced fraction num/den over a (non-fraction) supported ring.
// gcd(num, den) is a unit and den is the canonical associate; zero is 0/1.
class Fraction {
public:
    Fraction(RingElement num, RingElement den); // reduces; den != 0
    static Fraction whole(RingElement value);   // value/1

    const RingElement& num() const { return num_; }
    const RingElement& den() const { return den_; }
    const Ring& base_ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }

    Fraction add(const Fraction& other) const;
    Fraction mul(const Fraction& other) const;
    Fraction negate() const;
    Fraction inverse() const; // nonzero required

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

private:
    RingElement num_;
    RingElement den_;
};

// Builds p/q in Q(R) as a ring element of the fraction field.
RingElement fraction_make(const RingElement& p, const RingElement& q);
// x -> x/1 into Q(R). Identity on elements already in a fraction field.
RingElement embed_in_fraction_field(const RingElement& x);

// A finite ordered basis window: a truncation of the canonical basis of
// l^2(R) or l^2(Q(R)). Contains 0 and 1; enumeration order is deterministic.
class Window {
public:
    // Z: [-bound .. bound], ascending. bound >= 1.
    static Window integer_interval(const Int& bound);
    // Z[i]: { a+bi : |a|,|b| <= bound }, ordered by (a, b). bound >= 1.
    static Window gaussian_box(const Int& bound);
    // All of F_p, ordered 0..p-1.
    static Window prime_field_full(std::uint32_t p);
    // All polynomials over F_p of degree <= maxdeg; p^(maxdeg+1) labels (guarded).
    static Window poly_degree(std::uint32_t p, unsigned maxdeg);
    // Q(Z): { n/d reduced : 1 <= d <= den_bound, |n/d| <= magnitude }, ascending by value.
    static Window integer_fractions(const Int& magnitude, const Int& den_bound);
    // Q(F_p[x]): reduced fractions, deg num <= num_deg, den monic with deg den <= den_deg.
    static Window poly_fractions(std::uint32_t p, unsigned num_deg, unsigned den_deg);

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return labels_.size(); }
    const RingElement& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> index_of(const RingElement& e) const;
    bool contains(const RingElement& e) const { return index_of(e).has_value(); }
    const std::string& descriptor() const { return descriptor_; }
    // Window positions ordered by magnitude of their label (zero first).
    const std::vector<std::size_t>& magnitude_order() const { return magnitude_order_; }

private:
    Window(Ring ring, std::vector<RingElement> labels, std::string descriptor);

    Ring ring_;
    std::vector<RingElement> labels_;
    std::vector<std::pair<RingElement, std::size_t>> index_; // sorted by compare()
    std::vector<std::size_t> magnitude_order_;
    std::string descriptor_;
};

using WindowPtr = std::shared_ptr<const Window>;

// Canonical-associate irreducibles of Z (primes) or F_p[x], by trial division.
// bound: magnitude cap for Z, degree cap for F_p[x].
std::vector<RingElement> irreducibles(const Ring& ring, const Int& bound);

} // namespace ringrep
