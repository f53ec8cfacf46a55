#include "ringrep/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ringrep {

namespace {

void require_same_ring(const RingElement& a, const RingElement& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw RingMismatchError(std::string(op) + ": elements of " + a.ring().name() + " and " +
                                b.ring().name());
    }
}

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t negm(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
    // extended Euclid; a != 0 mod p, p prime
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw ArgumentError("invm: not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void poly_trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<std::uint32_t> poly_add(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = addm(x, y, p);
    }
    poly_trim(out);
    return out;
}

std::vector<std::uint32_t> poly_neg(const std::vector<std::uint32_t>& a, std::uint32_t p) {
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = negm(a[i], p);
    return out;
}

std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = addm(out[i + j], mulm(a[i], b[j], p), p);
        }
    }
    poly_trim(out);
    return out;
}

// quotient, remainder of a by b (b nonzero) over F_p
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
poly_divmod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
    if (b.empty()) throw ArgumentError("polynomial division by zero");
    std::vector<std::uint32_t> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    std::uint32_t lead_inv = invm(b.back(), p);
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        std::uint32_t coef = mulm(a.back(), lead_inv, p);
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = addm(a[shift + i], negm(mulm(coef, b[i], p), p), p);
        }
        poly_trim(a); // top term cancels, so the degree strictly drops
    }
    poly_trim(q);
    return {q, a};
}

Int floor_div(const Int& a, const Int& b) {
    // b > 0
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int round_div(const Int& x, const Int& n) {
    // nearest integer to x/n for n > 0, ties toward +infinity
    return floor_div(2 * x + n, 2 * n);
}

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Ring

Ring Ring::integers() { return Ring(Kind::Integers, Kind::Integers, 0); }
Ring Ring::gaussian_integers() { return Ring(Kind::GaussianIntegers, Kind::GaussianIntegers, 0); }

Ring Ring::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw ArgumentError("prime_field: p must be prime (< 2^31)");
    return Ring(Kind::PrimeField, Kind::PrimeField, p);
}

Ring Ring::poly_over_prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw ArgumentError("poly_over_prime_field: p must be prime (< 2^31)");
    return Ring(Kind::PolyOverPrimeField, Kind::PolyOverPrimeField, p);
}

Ring Ring::fraction_field(const Ring& base) {
    if (base.kind_ == Kind::FractionField)
        throw ArgumentError("fraction_field: base is already a fraction field");
    return Ring(Kind::FractionField, base.kind_, base.p_);
}

Ring Ring::base() const {
    if (kind_ != Kind::FractionField) return *this;
    return Ring(base_kind_, base_kind_, p_);
}

bool Ring::is_field() const { return kind_ == Kind::PrimeField || kind_ == Kind::FractionField; }

std::string Ring::name() const {
    switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::GaussianIntegers: return "Z[i]";
    case Kind::PrimeField: return "F_" + std::to_string(p_);
    case Kind::PolyOverPrimeField: return "F_" + std::to_string(p_) + "[x]";
    case Kind::FractionField: return "Q(" + base().name() + ")";
    }
    return "?";
}

// ---------------------------------------------------------- RingElement

RingElement RingElement::integer(Int v) { return RingElement(Ring::integers(), std::move(v)); }

RingElement RingElement::gaussian(Int re, Int im) {
    return RingElement(Ring::gaussian_integers(), GaussianValue{std::move(re), std::move(im)});
}

RingElement RingElement::residue(std::uint32_t p, const Int& v) {
    Ring ring = Ring::prime_field(p);
    Int m = v % p;
    if (m < 0) m += p;
    return RingElement(ring, static_cast<std::uint32_t>(m));
}

RingElement RingElement::poly(std::uint32_t p, std::vector<Int> coeffs) {
    Ring ring = Ring::poly_over_prime_field(p);
    std::vector<std::uint32_t> c;
    c.reserve(coeffs.size());
    for (const Int& x : coeffs) {
        Int m = x % p;
        if (m < 0) m += p;
        c.push_back(static_cast<std::uint32_t>(m));
    }
    poly_trim(c);
    return RingElement(ring, PolyValue{std::move(c)});
}

RingElement RingElement::fraction(Fraction f) {
    Ring ring = Ring::fraction_field(f.base_ring());
    return RingElement(ring, std::make_shared<const Fraction>(std::move(f)));
}

RingElement RingElement::zero(const Ring& ring) { return from_int(ring, 0); }
RingElement RingElement::one(const Ring& ring) { return from_int(ring, 1); }

RingElement RingElement::from_int(const Ring& ring, const Int& v) {
    switch (ring.kind()) {
    case Ring::Kind::Integers: return integer(v);
    case Ring::Kind::GaussianIntegers: return gaussian(v, 0);
    case Ring::Kind::PrimeField: return residue(ring.modulus(), v);
    case Ring::Kind::PolyOverPrimeField: return poly(ring.modulus(), {v});
    case Ring::Kind::FractionField:
        return fraction(Fraction::whole(from_int(ring.base(), v)));
    }
    throw Error("from_int: bad ring");
}

bool RingElement::is_zero() const {
    switch (ring_.kind()) {
    case Ring::Kind::Integers: return as_integer() == 0;
    case Ring::Kind::GaussianIntegers: {
        const auto& g = as_gaussian();
        return g.re == 0 && g.im == 0;
    }
    case Ring::Kind::PrimeField: return as_residue() == 0;
    case Ring::Kind::PolyOverPrimeField: return as_poly().coeffs.empty();
    case Ring::Kind::FractionField: return as_fraction().is_zero();
    }
    return false;
}

bool RingElement::is_one() const {
    switch (ring_.kind()) {
    case Ring::Kind::Integers: return as_integer() == 1;
    case Ring::Kind::GaussianIntegers: {
        const auto& g = as_gaussian();
        return g.re == 1 && g.im == 0;
    }
    case Ring::Kind::PrimeField: return as_residue() == 1;
    case Ring::Kind::PolyOverPrimeField: {
        const auto& c = as_poly().coeffs;
        return c.size() == 1 && c[0] == 1;
    }
    case Ring::Kind::FractionField: return as_fraction().is_one();
    }
    return false;
}

const Int& RingElement::as_integer() const {
    if (auto* v = std::get_if<Int>(&value_)) return *v;
    throw Error("element is not an integer");
}

const GaussianValue& RingElement::as_gaussian() const {
    if (auto* v = std::get_if<GaussianValue>(&value_)) return *v;
    throw Error("element is not a Gaussian integer");
}

std::uint32_t RingElement::as_residue() const {
    if (auto* v = std::get_if<std::uint32_t>(&value_)) return *v;
    throw Error("element is not a residue");
}

const PolyValue& RingElement::as_poly() const {
    if (auto* v = std::get_if<PolyValue>(&value_)) return *v;
    throw Error("element is not a polynomial");
}

const Fraction& RingElement::as_fraction() const {
    if (auto* v = std::get_if<std::shared_ptr<const Fraction>>(&value_)) return **v;
    throw Error("element is not a fraction");
}

RingElement add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "add");
    const Ring& ring = a.ring();
    switch (ring.kind()) {
    case Ring::Kind::Integers: return RingElement::integer(a.as_integer() + b.as_integer());
    case Ring::Kind::GaussianIntegers: {
        const auto& x = a.as_gaussian();
        const auto& y = b.as_gaussian();
        return RingElement::gaussian(x.re + y.re, x.im + y.im);
    }
    case Ring::Kind::PrimeField:
        return RingElement::residue(ring.modulus(), addm(a.as_residue(), b.as_residue(), ring.modulus()));
    case Ring::Kind::PolyOverPrimeField: {
        auto c = poly_add(a.as_poly().coeffs, b.as_poly().coeffs, ring.modulus());
        std::vector<Int> big(c.begin(), c.end());
        return RingElement::poly(ring.modulus(), big);
    }
    case Ring::Kind::FractionField:
        return RingElement::fraction(a.as_fraction().add(b.as_fraction()));
    }
    throw Error("add: bad ring");
}

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "mul");
    const Ring& ring = a.ring();
    switch (ring.kind()) {
    case Ring::Kind::Integers: return RingElement::integer(a.as_integer() * b.as_integer());
    case Ring::Kind::GaussianIntegers: {
        const auto& x = a.as_gaussian();
        const auto& y = b.as_gaussian();
        return RingElement::gaussian(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    case Ring::Kind::PrimeField:
        return RingElement::residue(ring.modulus(), mulm(a.as_residue(), b.as_residue(), ring.modulus()));
    case Ring::Kind::PolyOverPrimeField: {
        auto c = poly_mul(a.as_poly().coeffs, b.as_poly().coeffs, ring.modulus());
        std::vector<Int> big(c.begin(), c.end());
        return RingElement::poly(ring.modulus(), big);
    }
    case Ring::Kind::FractionField:
        return RingElement::fraction(a.as_fraction().mul(b.as_fraction()));
    }
    throw Error("mul: bad ring");
}

RingElement neg(const RingElement& a) {
    const Ring& ring = a.ring();
    switch (ring.kind()) {
    case Ring::Kind::Integers: return RingElement::integer(-a.as_integer());
    case Ring::Kind::GaussianIntegers: {
        const auto& g = a.as_gaussian();
        return RingElement::gaussian(-g.re, -g.im);
    }
    case Ring::Kind::PrimeField:
        return RingElement::residue(ring.modulus(), negm(a.as_residue(), ring.modulus()));
    case Ring::Kind::PolyOverPrimeField: {
        auto c = poly_neg(a.as_poly().coeffs, ring.modulus());
        std::vector<Int> big(c.begin(), c.end());
        return RingElement::poly(ring.modulus(), big);
    }
    case Ring::Kind::FractionField: return RingElement::fraction(a.as_fraction().negate());
    }
    throw Error("neg: bad ring");
}

bool eq(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "eq");
    return compare(a, b) == 0;
}

RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
RingElement operator-(const RingElement& a) { return neg(a); }
RingElement operator-(const RingElement& a, const RingElement& b) { return add(a, neg(b)); }
bool operator==(const RingElement& a, const RingElement& b) { return eq(a, b); }

int compare(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "compare");
    switch (a.ring().kind()) {
    case Ring::Kind::Integers: {
        const Int& x = a.as_integer();
        const Int& y = b.as_integer();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Ring::Kind::GaussianIntegers: {
        const auto& x = a.as_gaussian();
        const auto& y = b.as_gaussian();
        if (x.re != y.re) return x.re < y.re ? -1 : 1;
        if (x.im != y.im) return x.im < y.im ? -1 : 1;
        return 0;
    }
    case Ring::Kind::PrimeField: {
        std::uint32_t x = a.as_residue(), y = b.as_residue();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Ring::Kind::PolyOverPrimeField: {
        const auto& x = a.as_poly().coeffs;
        const auto& y = b.as_poly().coeffs;
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        }
        return 0;
    }
    case Ring::Kind::FractionField: {
        int c = compare(a.as_fraction().num(), b.as_fraction().num());
        if (c != 0) return c;
        return compare(a.as_fraction().den(), b.as_fraction().den());
    }
    }
    throw Error("compare: bad ring");
}

namespace {

Int magnitude_key(const RingElement& a) {
    switch (a.ring().kind()) {
    case Ring::Kind::Integers: return int_abs(a.as_integer());
    case Ring::Kind::GaussianIntegers: {
        const auto& g = a.as_gaussian();
        return g.re * g.re + g.im * g.im;
    }
    case Ring::Kind::PrimeField: return Int(a.as_residue());
    case Ring::Kind::PolyOverPrimeField: return Int(a.as_poly().coeffs.size());
    case Ring::Kind::FractionField: return Int(0); // handled separately
    }
    return Int(0);
}

} // namespace

int compare_by_magnitude(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "compare_by_magnitude");
    if (a.ring().kind() == Ring::Kind::FractionField &&
        a.ring().base().kind() == Ring::Kind::Integers) {
        // |n1/d1| vs |n2/d2| by cross multiplication; dens are positive
        const Fraction& fa = a.as_fraction();
        const Fraction& fb = b.as_fraction();
        Int lhs = int_abs(fa.num().as_integer()) * fb.den().as_integer();
        Int rhs = int_abs(fb.num().as_integer()) * fa.den().as_integer();
        if (lhs != rhs) return lhs < rhs ? -1 : 1;
        return compare(a, b);
    }
    if (a.ring().kind() == Ring::Kind::FractionField) {
        Int ka = magnitude_key(a.as_fraction().num()) + magnitude_key(a.as_fraction().den());
        Int kb = magnitude_key(b.as_fraction().num()) + magnitude_key(b.as_fraction().den());
        if (ka != kb) return ka < kb ? -1 : 1;
        return compare(a, b);
    }
    Int ka = magnitude_key(a);
    Int kb = magnitude_key(b);
    if (ka != kb) return ka < kb ? -1 : 1;
    return compare(a, b);
}

bool is_unit(const RingElement& r) {
    if (r.is_zero()) throw ArgumentError("is_unit: zero input");
    switch (r.ring().kind()) {
    case Ring::Kind::Integers: {
        const Int& v = r.as_integer();
        return v == 1 || v == -1;
    }
    case Ring::Kind::GaussianIntegers: {
        const auto& g = r.as_gaussian();
        return g.re * g.re + g.im * g.im == 1;
    }
    case Ring::Kind::PrimeField: return true;
    case Ring::Kind::PolyOverPrimeField: return r.as_poly().coeffs.size() == 1;
    case Ring::Kind::FractionField: return true;
    }
    throw Error("is_unit: bad ring");
}

RingElement unit_inverse(const RingElement& u) {
    if (!is_unit(u)) throw ArgumentError("unit_inverse: not a unit");
    switch (u.ring().kind()) {
    case Ring::Kind::Integers: return u; // +-1 are self-inverse
    case Ring::Kind::GaussianIntegers: {
        const auto& g = u.as_gaussian();
        return RingElement::gaussian(g.re, -g.im); // conjugate inverts norm-1 elements
    }
    case Ring::Kind::PrimeField:
        return RingElement::residue(u.ring().modulus(), invm(u.as_residue(), u.ring().modulus()));
    case Ring::Kind::PolyOverPrimeField: {
        std::uint32_t c = invm(u.as_poly().coeffs[0], u.ring().modulus());
        return RingElement::poly(u.ring().modulus(), {Int(c)});
    }
    case Ring::Kind::FractionField: return RingElement::fraction(u.as_fraction().inverse());
    }
    throw Error("unit_inverse: bad ring");
}

AssociateDecomposition canonical_associate(const RingElement& r) {
    if (r.is_zero()) throw ArgumentError("canonical_associate: zero input");
    const Ring& ring = r.ring();
    switch (ring.kind()) {
    case Ring::Kind::Integers: {
        const Int& v = r.as_integer();
        if (v < 0) return {RingElement::integer(-1), RingElement::integer(-v)};
        return {RingElement::integer(1), r};
    }
    case Ring::Kind::GaussianIntegers: {
        // rotate by i until the argument lies in [0, pi/2): re > 0, im >= 0
        GaussianValue g = r.as_gaussian();
        int k = 0;
        while (!(g.re > 0 && g.im >= 0)) {
            Int re = -g.im, im = g.re; // multiply by i
            g.re = re;
            g.im = im;
            ++k;
            if (k > 4) throw Error("canonical_associate: rotation failed");
        }
        // r = unit * assoc with assoc = i^k * r, so unit = i^(-k)
        static const int ure[4] = {1, 0, -1, 0};
        static const int uim[4] = {0, -1, 0, 1};
        int m = k % 4;
        return {RingElement::gaussian(ure[m], uim[m]), RingElement::gaussian(g.re, g.im)};
    }
    case Ring::Kind::PrimeField: return {r, RingElement::one(ring)};
    case Ring::Kind::PolyOverPrimeField: {
        std::uint32_t p = ring.modulus();
        const auto& c = r.as_poly().coeffs;
        std::uint32_t lead = c.back();
        if (lead == 1) return {RingElement::one(ring), r};
        std::uint32_t lead_inv = invm(lead, p);
        std::vector<Int> monic;
        monic.reserve(c.size());
        for (std::uint32_t x : c) monic.push_back(Int(mulm(x, lead_inv, p)));
        return {RingElement::poly(p, {Int(lead)}), RingElement::poly(p, monic)};
    }
    case Ring::Kind::FractionField: return {r, RingElement::one(ring)};
    }
    throw Error("canonical_associate: bad ring");
}

std::pair<RingElement, RingElement> divmod(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "divmod");
    if (b.is_zero()) throw ArgumentError("divmod: division by zero");
    const Ring& ring = a.ring();
    switch (ring.kind()) {
    case Ring::Kind::Integers: {
        Int q = a.as_integer() / b.as_integer();
        Int r = a.as_integer() - q * b.as_integer();
        return {RingElement::integer(q), RingElement::integer(r)};
    }
    case Ring::Kind::GaussianIntegers: {
        const auto& x = a.as_gaussian();
        const auto& y = b.as_gaussian();
        Int n = y.re * y.re + y.im * y.im;
        Int num_re = x.re * y.re + x.im * y.im;  // x * conj(y)
        Int num_im = x.im * y.re - x.re * y.im;
        Int qre = round_div(num_re, n);
        Int qim = round_div(num_im, n);
        RingElement q = RingElement::gaussian(qre, qim);
        RingElement r = a - q * b;
        return {q, r};
    }
    case Ring::Kind::PrimeField: {
        std::uint32_t p = ring.modulus();
        std::uint32_t q = mulm(a.as_residue(), invm(b.as_residue(), p), p);
        return {RingElement::residue(p, q), RingElement::zero(ring)};
    }
    case Ring::Kind::PolyOverPrimeField: {
        std::uint32_t p = ring.modulus();
        auto [q, r] = poly_divmod(a.as_poly().coeffs, b.as_poly().coeffs, p);
        std::vector<Int> qb(q.begin(), q.end()), rb(r.begin(), r.end());
        return {RingElement::poly(p, qb), RingElement::poly(p, rb)};
    }
    case Ring::Kind::FractionField: {
        RingElement q = mul(a, unit_inverse(b));
        return {q, RingElement::zero(ring)};
    }
    }
    throw Error("divmod: bad ring");
}

std::optional<RingElement> divide_exact(const RingElement& a, const RingElement& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

RingElement gcd(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "gcd");
    if (a.is_zero() && b.is_zero()) throw ArgumentError("gcd: both inputs zero");
    RingElement x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return canonical_associate(x).assoc;
}

// ------------------------------------------------------------- Fraction

Fraction::Fraction(RingElement num, RingElement den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_, den_, "fraction");
    if (num_.ring().is_fraction_field())
        throw ArgumentError("fraction: base ring is already a fraction field");
    if (den_.is_zero()) throw ArgumentError("fraction: zero denominator");
    if (num_.is_zero()) {
        den_ = RingElement::one(den_.ring());
        return;
    }
    RingElement g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    auto [u, assoc] = canonical_associate(den_);
    if (!u.is_one()) {
        num_ = num_ * unit_inverse(u);
        den_ = assoc;
    }
}

Fraction Fraction::whole(RingElement value) {
    Ring ring = value.ring();
    return Fraction(std::move(value), RingElement::one(ring));
}

Fraction Fraction::add(const Fraction& other) const {
    return Fraction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Fraction Fraction::mul(const Fraction& other) const {
    return Fraction(num_ * other.num_, den_ * other.den_);
}

Fraction Fraction::negate() const { return Fraction(neg(num_), den_); }

Fraction Fraction::inverse() const {
    if (is_zero()) throw ArgumentError("fraction inverse: zero");
    return Fraction(den_, num_);
}

RingElement fraction_make(const RingElement& p, const RingElement& q) {
    return RingElement::fraction(Fraction(p, q));
}

RingElement embed_in_fraction_field(const RingElement& x) {
    if (x.ring().is_fraction_field()) return x;
    return RingElement::fraction(Fraction::whole(x));
}

// --------------------------------------------------------------- Window

Window::Window(Ring ring, std::vector<RingElement> labels, std::string descriptor)
    : ring_(std::move(ring)), labels_(std::move(labels)), descriptor_(std::move(descriptor)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace_back(labels_[i], i);
    std::sort(index_.begin(), index_.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    for (std::size_t i = 1; i < index_.size(); ++i) {
        if (compare(index_[i - 1].first, index_[i].first) == 0)
            throw ArgumentError("window: duplicate label");
    }
    magnitude_order_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) magnitude_order_[i] = i;
    std::sort(magnitude_order_.begin(), magnitude_order_.end(), [this](std::size_t a, std::size_t b) {
        int c = compare_by_magnitude(labels_[a], labels_[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    if (!contains(RingElement::zero(ring_)) || !contains(RingElement::one(ring_)))
        throw ArgumentError("window: must contain 0 and 1");
}

std::optional<std::size_t> Window::index_of(const RingElement& e) const {
    if (e.ring() != ring_) return std::nullopt;
    auto it = std::lower_bound(index_.begin(), index_.end(), e, [](const auto& entry, const RingElement& key) {
        return compare(entry.first, key) < 0;
    });
    if (it == index_.end() || compare(it->first, e) != 0) return std::nullopt;
    return it->second;
}

Window Window::integer_interval(const Int& bound) {
    if (bound < 1) throw ArgumentError("integer window: bound must be >= 1");
    if (bound > 4'000'000) throw ArgumentError("integer window: bound too large to materialize");
    std::vector<RingElement> labels;
    labels.reserve(static_cast<std::size_t>(2 * bound.convert_to<long long>() + 1));
    for (Int q = -bound; q <= bound; ++q) labels.push_back(RingElement::integer(q));
    return Window(Ring::integers(), std::move(labels), "Z[-" + bound.str() + ".." + bound.str() + "]");
}

Window Window::gaussian_box(const Int& bound) {
    if (bound < 1) throw ArgumentError("gaussian window: bound must be >= 1");
    if (bound > 1500) throw ArgumentError("gaussian window: bound too large to materialize");
    std::vector<RingElement> labels;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b) labels.push_back(RingElement::gaussian(a, b));
    return Window(Ring::gaussian_integers(), std::move(labels), "Z[i]{|a|,|b|<=" + bound.str() + "}");
}

Window Window::prime_field_full(std::uint32_t p) {
    Ring ring = Ring::prime_field(p);
    std::vector<RingElement> labels;
    labels.reserve(p);
    for (std::uint32_t v = 0; v < p; ++v) labels.push_back(RingElement::residue(p, Int(v)));
    return Window(ring, std::move(labels), "F_" + std::to_string(p));
}

Window Window::poly_degree(std::uint32_t p, unsigned maxdeg) {
    Ring ring = Ring::poly_over_prime_field(p);
    double count = 1;
    for (unsigned i = 0; i <= maxdeg; ++i) count *= p;
    if (count > (1 << 21)) throw ArgumentError("poly window: too many labels to materialize");
    std::size_t total = static_cast<std::size_t>(count);
    std::vector<RingElement> labels;
    labels.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t rest = k;
        std::vector<Int> coeffs(maxdeg + 1);
        for (unsigned i = 0; i <= maxdeg; ++i) {
            coeffs[i] = Int(rest % p);
            rest /= p;
        }
        labels.push_back(RingElement::poly(p, coeffs));
    }
    return Window(ring, std::move(labels),
                  "F_" + std::to_string(p) + "[x]{deg<=" + std::to_string(maxdeg) + "}");
}

Window Window::integer_fractions(const Int& magnitude, const Int& den_bound) {
    if (magnitude < 1 || den_bound < 1)
        throw ArgumentError("fraction window: bounds must be >= 1");
    if (magnitude * den_bound * den_bound > 8'000'000)
        throw ArgumentError("fraction window: too many labels to materialize");
    Ring ring = Ring::fraction_field(Ring::integers());
    std::vector<RingElement> labels;
    for (Int d = 1; d <= den_bound; ++d) {
        for (Int n = -magnitude * d; n <= magnitude * d; ++n) {
            labels.push_back(fraction_make(RingElement::integer(n), RingElement::integer(d)));
        }
    }
    std::sort(labels.begin(), labels.end(), [](const RingElement& a, const RingElement& b) {
        const Fraction& fa = a.as_fraction();
        const Fraction& fb = b.as_fraction();
        Int lhs = fa.num().as_integer() * fb.den().as_integer();
        Int rhs = fb.num().as_integer() * fa.den().as_integer();
        if (lhs != rhs) return lhs < rhs;
        return false;
    });
    labels.erase(std::unique(labels.begin(), labels.end(),
                             [](const RingElement& a, const RingElement& b) { return compare(a, b) == 0; }),
                 labels.end());
    return Window(ring, std::move(labels),
                  "Q(Z){|q|<=" + magnitude.str() + ",den<=" + den_bound.str() + "}");
}

Window Window::poly_fractions(std::uint32_t p, unsigned num_deg, unsigned den_deg) {
    Ring base = Ring::poly_over_prime_field(p);
    Ring ring = Ring::fraction_field(base);
    double nums = 1;
    for (unsigned i = 0; i <= num_deg; ++i) nums *= p;
    double dens = 0;
    double block = 1;
    for (unsigned i = 0; i <= den_deg; ++i) {
        dens += block; // monic polynomials of degree exactly i
        block *= p;
    }
    if (nums * dens > (1 << 21)) throw ArgumentError("poly fraction window: too many labels");

    std::vector<RingElement> dens_list;
    for (unsigned deg = 0; deg <= den_deg; ++deg) {
        std::size_t lower = 1;
        for (unsigned i = 0; i < deg; ++i) lower *= p;
        for (std::size_t k = 0; k < lower; ++k) {
            std::size_t rest = k;
            std::vector<Int> coeffs(deg + 1);
            for (unsigned i = 0; i < deg; ++i) {
                coeffs[i] = Int(rest % p);
                rest /= p;
            }
            coeffs[deg] = 1;
            dens_list.push_back(RingElement::poly(p, coeffs));
        }
    }
    std::size_t num_total = static_cast<std::size_t>(nums);
    std::vector<RingElement> labels;
    for (const RingElement& den : dens_list) {
        for (std::size_t k = 0; k < num_total; ++k) {
            std::size_t rest = k;
            std::vector<Int> coeffs(num_deg + 1);
            for (unsigned i = 0; i <= num_deg; ++i) {
                coeffs[i] = Int(rest % p);
                rest /= p;
            }
            labels.push_back(fraction_make(RingElement::poly(p, coeffs), den));
        }
    }
    std::sort(labels.begin(), labels.end(),
              [](const RingElement& a, const RingElement& b) { return compare(a, b) < 0; });
    labels.erase(std::unique(labels.begin(), labels.end(),
                             [](const RingElement& a, const RingElement& b) { return compare(a, b) == 0; }),
                 labels.end());
    return Window(ring, std::move(labels),
                  "Q(F_" + std::to_string(p) + "[x]){deg num<=" + std::to_string(num_deg) +
                      ",deg den<=" + std::to_string(den_deg) + "}");
}

// --------------------------------------------------------- irreducibles

std::vector<RingElement> irreducibles(const Ring& ring, const Int& bound) {
    switch (ring.kind()) {
    case Ring::Kind::Integers: {
        std::vector<RingElement> out;
        for (Int n = 2; n <= bound; ++n) {
            bool prime = true;
            for (Int d = 2; d * d <= n; ++d) {
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            }
            if (prime) out.push_back(RingElement::integer(n));
        }
        return out;
    }
    case Ring::Kind::PolyOverPrimeField: {
        std::uint32_t p = ring.modulus();
        unsigned maxdeg = bound.convert_to<unsigned>();
        std::vector<RingElement> out;
        for (unsigned deg = 1; deg <= maxdeg; ++deg) {
            std::size_t lower = 1;
            for (unsigned i = 0; i < deg; ++i) lower *= p;
            for (std::size_t k = 0; k < lower; ++k) {
                std::size_t rest = k;
                std::vector<Int> coeffs(deg + 1);
                for (unsigned i = 0; i < deg; ++i) {
                    coeffs[i] = Int(rest % p);
                    rest /= p;
                }
                coeffs[deg] = 1;
                RingElement cand = RingElement::poly(p, coeffs);
                bool irr = true;
                for (const RingElement& d : out) {
                    if (2 * static_cast<unsigned>(d.as_poly().degree()) > deg) break;
                    if (divide_exact(cand, d)) {
                        irr = false;
                        break;
                    }
                }
                if (irr) out.push_back(cand);
            }
        }
        return out;
    }
    default:
        throw UnsupportedError("irreducibles: supported for Z and F_p[x] only");
    }
}

} // namespace ringrep
