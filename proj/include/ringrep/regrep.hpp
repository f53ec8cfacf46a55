#pragma once

#include <optional>

#include "ringrep/report.hpp"
#include "ringrep/ring.hpp"
#include "ringrep/words.hpp"

namespace ringrep {

// An injective partial self-map of a window's basis positions: the exact
// carrier of a truncated shift operator. Composable only over the same window.
class PartialInjection {
public:
    static PartialInjection identity(WindowPtr w);
    // map[i] = image position of i, or nullopt where undefined. Must be injective.
    PartialInjection(WindowPtr w, std::vector<std::optional<std::size_t>> map);

    const Window& window() const { return *window_; }
    const WindowPtr& window_ptr() const { return window_; }

    std::optional<std::size_t> apply(std::size_t pos) const { return map_[pos]; }
    std::optional<RingElement> apply_label(const RingElement& q) const;

    std::size_t domain_size() const;
    bool is_total() const { return domain_size() == map_.size(); }
    bool is_bijection() const;

    // this(inner(q)); defined where both stages are.
    PartialInjection compose_after(const PartialInjection& inner) const;
    // The inverse partial map (operator adjoint on the permutation part).
    PartialInjection adjoint() const;

    friend bool operator==(const PartialInjection& a, const PartialInjection& b);

private:
    WindowPtr window_;
    std::vector<std::optional<std::size_t>> map_;
};

// U^n: q -> q+n, S_r: q -> r*q, restricted to the window.
PartialInjection rep_generator(const Generator& g, WindowPtr w);
// Composition of letter actions, rightmost letter applied first; defined at q
// iff every intermediate image stays inside the window.
PartialInjection rep_word(const Word& wd, WindowPtr w);
// Example-2 operators on a fraction window: the generator is embedded in Q(R).
PartialInjection unitary_regular_rep(const Generator& g, WindowPtr fraction_window);

enum class RelationKind { MulS, AddU, Covariance, Isometry, UnitUnitarity };

struct RelationParams {
    std::optional<RingElement> r;
    std::optional<RingElement> t;
    std::optional<RingElement> n;
    std::optional<RingElement> m;
};

// Point-by-point check of one relation instance on a window. Points where an
// intermediate image leaves the window are inconclusive, never violations.
Report check_relation(RelationKind kind, const RelationParams& params, WindowPtr w);

const char* relation_name(RelationKind kind);

// A basis point where the two normal forms' realized actions are defined and
// differ; nullopt if a == b or the window is too small. Scans zero-outward.
std::optional<RingElement> separation_test(const NormalForm& a, const NormalForm& b,
                                           const Window& w);

// Example-2 compression: checks that the generator's unitary action on the
// fraction window (i) keeps integral labels integral and (ii) compresses to
// the plain regular representation on the inner window.
Report check_compression(const Generator& g, WindowPtr inner, WindowPtr outer);

// Smallest window bound (doubling from `start`) at which the relation
// instance becomes conclusive and verified at the point q; nullopt if
// max_bound is passed. Rings: Z (interval) and Z[i] (box); fields are always
// conclusive at any window.
std::optional<Int> truncation_conclusive_bound(RelationKind kind, const RelationParams& params,
                                               const RingElement& q, Int start, const Int& max_bound);

} // namespace ringrep
