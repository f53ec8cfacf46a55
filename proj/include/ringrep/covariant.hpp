#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringrep/report.hpp"
#include "ringrep/ring.hpp"
#include "ringrep/words.hpp"

namespace ringrep {

// A finite set acted on by finitely many commuting self-maps. The free
// commutative monoid on the generators acts through multidegrees.
class FiniteDynSys {
public:
    FiniteDynSys(std::uint32_t n, std::vector<std::string> names,
                 std::vector<std::vector<std::uint32_t>> maps);

    // One line per generator: "name: x->y x->y ...". An optional leading
    // "X: n" line fixes the point count; '#' starts a comment line.
    static FiniteDynSys parse(const std::string& text);

    std::uint32_t size() const { return n_; }
    std::size_t generator_count() const { return maps_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::uint32_t apply(std::size_t gen, std::uint32_t x) const { return maps_[gen][x]; }
    std::uint32_t apply_multidegree(const std::vector<std::uint32_t>& deg, std::uint32_t x) const;
    std::string describe() const;

private:
    std::uint32_t n_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> maps_;
};

// A concrete covariant pair on a truncated basis: diagonal operators
// pi(f) e_l = f(eval(l)) e_l and one shift partial map per generator.
struct CovariantRep {
    std::shared_ptr<const FiniteDynSys> sys;
    unsigned truncation = 0; // max monoid word length; 0 for single-layer reps
    struct Label {
        std::uint32_t x;
        std::vector<std::uint32_t> deg; // empty for single-layer reps
    };
    std::vector<Label> basis;
    std::vector<std::uint32_t> eval;                          // evaluation point per label
    std::vector<std::vector<std::optional<std::size_t>>> shifts; // per generator

    std::string describe_label(std::size_t i) const;
};

// The l^2(X,S) construction: basis (x, s) over monoid words of length <= L,
// pi(f) e_{(x,s)} = f(tau_s(x)) e_{(x,s)}, S_t e_{(x,s)} = e_{(x,ts)}.
CovariantRep build_orbit_rep(std::shared_ptr<const FiniteDynSys> sys, unsigned L);

// The ring regular representation on dual indices: X = Z/p, tau_r(k) = r*k,
// diagonal evaluation at k, shift e_k -> e_{r^{-1}k} (gcd(r, p) = 1).
CovariantRep build_ring_model_rep(std::uint32_t p, std::uint32_t r);

enum class Orientation { Forward, Backward, Both, Neither };
const char* orientation_name(Orientation o);

struct OrientationResult {
    Orientation verdict;
    Report report;
};

// Which of S_t pi(f) = pi(f . tau_t) S_t (forward) and
// pi(f) S_t = S_t pi(f . tau_t) (backward) holds exactly on the conclusive
// sub-basis, over the given sample of functions on X.
OrientationResult check_covariance_orientation(const CovariantRep& rep,
                                               const std::vector<std::vector<int>>& f_sample,
                                               std::size_t gen_index);

// All indicator functions of points of X; a spanning sample.
std::vector<std::vector<int>> indicator_sample(std::uint32_t n);

// 2x2 complex matrix, row major.
struct Mat2 {
    std::complex<double> a, b, c, d;

    static Mat2 zero() { return {0, 0, 0, 0}; }
    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(std::complex<double> x, std::complex<double> y) { return {x, 0, 0, y}; }
    static Mat2 upper_unit() { return {0, 1, 0, 0}; } // E_12

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
                l.c * r.b + l.d * r.d};
    }
    friend Mat2 operator-(const Mat2& l, const Mat2& r) {
        return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
    }
    double max_abs() const;
    bool exactly_zero() const { return a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0; }
};

// One of the two-dimensional nest representations attached to an irreducible
// x: u^n -> diag(chi(n), chi(xn)), s_x -> E_12, s_r -> 0 for other canonical
// multipliers. chi is chi(n) = exp(2*pi*i*theta*n) over Z and
// chi(f) = exp(2*pi*i*f(theta_hat)/p) over F_p[x].
class NestRep {
public:
    // theta as an exact rational; over F_p[x] its value mod p is the
    // evaluation point theta_hat.
    static NestRep build(const Ring& ring, RingElement x, const Rational& theta,
                         std::vector<RingElement> u_sample, std::vector<RingElement> s_sample);

    const Ring& ring() const { return x_.ring(); }
    const RingElement& irreducible() const { return x_; }
    bool degenerate_character() const { return degenerate_; }
    const std::vector<RingElement>& u_sample() const { return u_sample_; }
    const std::vector<RingElement>& s_sample() const { return s_sample_; }

    std::complex<double> character(const RingElement& n) const;
    Mat2 image_u(const RingElement& n) const;
    Mat2 image_s(const RingElement& r) const; // r must be a canonical associate
    Mat2 image_nf(const NormalForm& nf) const;
    Mat2 image_word(const Word& w) const;

private:
    NestRep(RingElement x, Rational theta, std::vector<RingElement> u_sample,
            std::vector<RingElement> s_sample, bool degenerate)
        : x_(std::move(x)), theta_(std::move(theta)), u_sample_(std::move(u_sample)),
          s_sample_(std::move(s_sample)), degenerate_(degenerate) {}

    RingElement x_;
    Rational theta_;
    std::vector<RingElement> u_sample_;
    std::vector<RingElement> s_sample_;
    bool degenerate_;
};

// Max deviation of pi(w1)pi(w2) from pi(normalize(w1*w2)) over the sample.
double check_nest_multiplicativity(const NestRep& rep,
                                   const std::vector<std::pair<Word, Word>>& pairs);

// Unitarity, covariance and multiplicativity deviations over seeded random
// word pairs; pass iff everything stays within 1e-12.
Report check_nest(const NestRep& rep, unsigned pair_count, std::uint64_t seed);

} // namespace ringrep
