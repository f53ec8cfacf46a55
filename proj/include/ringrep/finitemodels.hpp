#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ringrep/report.hpp"
#include "ringrep/ring.hpp"
#include "ringrep/words.hpp"

namespace ringrep {

// A permutation of {0..dim-1} in one-line image notation. Products compose,
// the adjoint of the induced 0/1 matrix is the inverse permutation.
class PermMatrix {
public:
    explicit PermMatrix(std::vector<std::uint32_t> images); // validates bijection
    static PermMatrix identity(std::uint32_t dim);

    std::uint32_t dim() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t j) const { return images_[j]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    PermMatrix compose_after(const PermMatrix& inner) const; // this(inner(j))
    PermMatrix inverse() const;
    PermMatrix power(long long k) const; // negative exponents allowed

    friend bool operator==(const PermMatrix& a, const PermMatrix& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const PermMatrix& a, const PermMatrix& b) { return !(a == b); }

    std::string to_string() const; // "[1 2 0]"

private:
    std::vector<std::uint32_t> images_;
};

// Writes perm as j -> a*j + b mod m if it is affine with invertible a.
bool as_affine_map(const PermMatrix& perm, std::uint32_t m, std::uint32_t* a_out,
                   std::uint32_t* b_out);

// The cyclic unitary model on Z/m: shift V: j -> j+1 and multipliers
// T_r: j -> r*j for every residue r coprime to m. All relations hold exactly
// (verified exhaustively at construction).
class FiniteModel {
public:
    static FiniteModel cyclic(std::uint32_t m); // m >= 1

    std::uint32_t modulus() const { return m_; }
    const PermMatrix& shift() const { return shift_; }
    // throws ArgumentError unless gcd(r, m) = 1
    const PermMatrix& multiplier(std::uint32_t r) const;
    const std::vector<std::uint32_t>& multiplier_residues() const { return residues_; }

private:
    FiniteModel(std::uint32_t m, PermMatrix shift, std::map<std::uint32_t, PermMatrix> mult,
                std::vector<std::uint32_t> residues)
        : m_(m), shift_(std::move(shift)), mult_(std::move(mult)), residues_(std::move(residues)) {}

    std::uint32_t m_;
    PermMatrix shift_;
    std::map<std::uint32_t, PermMatrix> mult_;
    std::vector<std::uint32_t> residues_;
};

// Images of the fraction generators:
//   s_{p/q} = T_p T_q^{-1}            (multiplication by p*q^{-1} mod m)
//   u_{p/q} = T_q^{-1} V^p T_q        (translation by p*q^{-1} mod m)
// den (and num for kind S) must be coprime to m. The pair is not reduced
// first, so well-definedness under (p,q) ~ (pc,qc) is observable.
PermMatrix extend_raw(const FiniteModel& model, const Int& num, const Int& den,
                      Generator::Kind kind);
PermMatrix extend_to_fractions(const FiniteModel& model, const Fraction& f, Generator::Kind kind);

// Exhaustive relation check of the model itself; also logs the translation
// amounts of the two u-extension conventions on a sample fraction.
Report verify_model(const FiniteModel& model);

// Exact permutation identities over a sample of fraction pairs:
// s_a s_b = s_{ab}, u_a u_b = u_{a+b}, s_a u_b = u_{ab} s_a, and the
// commutation T_p T_q^{-1} = T_q^{-1} T_p over all residue pairs.
Report verify_quotient_relations(const FiniteModel& model,
                                 const std::vector<std::pair<Fraction, Fraction>>& sample);

// tau_pi . i = pi on generators: extend(n/1, u) = V^n and extend(p/1, s) = T_p,
// plus two-path agreement on random normal forms (seed echoed in the report).
Report check_factorization(const FiniteModel& model, std::uint64_t seed = 1);

} // namespace ringrep
