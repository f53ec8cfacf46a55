#include "ringrep/covariant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "ringrep/parse.hpp"

namespace ringrep {

FiniteDynSys::FiniteDynSys(std::uint32_t n, std::vector<std::string> names,
                           std::vector<std::vector<std::uint32_t>> maps)
    : n_(n), names_(std::move(names)), maps_(std::move(maps)) {
    if (n_ == 0) throw ArgumentError("dynamical system: empty point set");
    if (names_.size() != maps_.size()) throw ArgumentError("dynamical system: names/maps mismatch");
    for (const auto& map : maps_) {
        if (map.size() != n_) throw ArgumentError("dynamical system: generator map is not total");
        for (std::uint32_t img : map) {
            if (img >= n_) throw ArgumentError("dynamical system: image out of range");
        }
    }
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        for (std::size_t j = i + 1; j < maps_.size(); ++j) {
            for (std::uint32_t x = 0; x < n_; ++x) {
                if (maps_[i][maps_[j][x]] != maps_[j][maps_[i][x]])
                    throw ArgumentError("dynamical system: generators " + names_[i] + " and " +
                                        names_[j] + " do not commute (at x=" + std::to_string(x) +
                                        ")");
            }
        }
    }
}

FiniteDynSys FiniteDynSys::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::uint32_t> declared_n;
    std::vector<std::string> names;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> raw;
    std::uint32_t max_index = 0;

    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("dynamical system line needs 'name: x->y ...'", b);
        std::string name = line.substr(b, colon - b);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        std::istringstream rest(line.substr(colon + 1));
        if (name == "X") {
            unsigned long n = 0;
            if (!(rest >> n) || n == 0) throw ParseError("bad point count after 'X:'", colon + 1);
            declared_n = static_cast<std::uint32_t>(n);
            continue;
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        std::string tok;
        while (rest >> tok) {
            std::size_t arrow = tok.find("->");
            if (arrow == std::string::npos)
                throw ParseError("expected 'x->y' pairs in generator " + name, colon + 1);
            unsigned long x = std::stoul(tok.substr(0, arrow));
            unsigned long y = std::stoul(tok.substr(arrow + 2));
            pairs.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
            max_index = std::max({max_index, static_cast<std::uint32_t>(x),
                                  static_cast<std::uint32_t>(y)});
        }
        if (pairs.empty()) throw ParseError("generator " + name + " has no pairs", colon + 1);
        names.push_back(name);
        raw.push_back(std::move(pairs));
    }
    if (names.empty()) throw ParseError("dynamical system: no generators", 0);
    std::uint32_t n = declared_n.value_or(max_index + 1);

    std::vector<std::vector<std::uint32_t>> maps;
    for (std::size_t g = 0; g < raw.size(); ++g) {
        std::vector<std::optional<std::uint32_t>> partial(n);
        for (auto [x, y] : raw[g]) {
            if (x >= n || y >= n) throw ParseError("index out of range in generator " + names[g], 0);
            if (partial[x]) throw ParseError("duplicate image for x=" + std::to_string(x), 0);
            partial[x] = y;
        }
        std::vector<std::uint32_t> map(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            if (!partial[x])
                throw ParseError("generator " + names[g] + " is missing x=" + std::to_string(x), 0);
            map[x] = *partial[x];
        }
        maps.push_back(std::move(map));
    }
    return FiniteDynSys(n, std::move(names), std::move(maps));
}

std::uint32_t FiniteDynSys::apply_multidegree(const std::vector<std::uint32_t>& deg,
                                              std::uint32_t x) const {
    for (std::size_t g = 0; g < deg.size(); ++g) {
        for (std::uint32_t k = 0; k < deg[g]; ++k) x = maps_[g][x];
    }
    return x;
}

std::string FiniteDynSys::describe() const {
    std::ostringstream out;
    out << "X=" << n_ << " generators=";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out << ",";
        out << names_[i];
    }
    return out.str();
}

std::string CovariantRep::describe_label(std::size_t i) const {
    const Label& l = basis[i];
    std::ostringstream out;
    out << "(" << l.x;
    for (std::uint32_t d : l.deg) out << "," << d;
    out << ")";
    return out.str();
}

namespace {

void enumerate_multidegrees(std::size_t gens, unsigned total, std::vector<std::uint32_t>& cur,
                            std::size_t at, std::vector<std::vector<std::uint32_t>>& out) {
    if (at + 1 == gens) {
        cur[at] = total;
        out.push_back(cur);
        return;
    }
    for (unsigned d = 0; d <= total; ++d) {
        cur[at] = d;
        enumerate_multidegrees(gens, total - d, cur, at + 1, out);
    }
}

} // namespace

CovariantRep build_orbit_rep(std::shared_ptr<const FiniteDynSys> sys, unsigned L) {
    if (!sys) throw ArgumentError("build_orbit_rep: null system");
    if (L < 1) throw ArgumentError("build_orbit_rep: truncation length must be >= 1");
    std::size_t k = sys->generator_count();
    if (k == 0) throw ArgumentError("build_orbit_rep: system has no generators");

    std::vector<std::vector<std::uint32_t>> degs; // graded order
    for (unsigned total = 0; total <= L; ++total) {
        std::vector<std::uint32_t> cur(k);
        enumerate_multidegrees(k, total, cur, 0, degs);
    }
    std::map<std::vector<std::uint32_t>, std::size_t> deg_index;
    for (std::size_t i = 0; i < degs.size(); ++i) deg_index[degs[i]] = i;

    CovariantRep rep;
    rep.sys = sys;
    rep.truncation = L;
    std::uint32_t n = sys->size();
    rep.basis.reserve(degs.size() * n);
    for (const auto& deg : degs) {
        for (std::uint32_t x = 0; x < n; ++x) {
            rep.basis.push_back({x, deg});
            rep.eval.push_back(sys->apply_multidegree(deg, x));
        }
    }
    rep.shifts.assign(k, std::vector<std::optional<std::size_t>>(rep.basis.size()));
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
        const auto& label = rep.basis[i];
        unsigned total = std::accumulate(label.deg.begin(), label.deg.end(), 0u);
        for (std::size_t g = 0; g < k; ++g) {
            if (total + 1 > L) continue;
            std::vector<std::uint32_t> next = label.deg;
            ++next[g];
            rep.shifts[g][i] = deg_index.at(next) * n + label.x;
        }
    }
    return rep;
}

CovariantRep build_ring_model_rep(std::uint32_t p, std::uint32_t r) {
    if (p < 2) throw ArgumentError("ring model: modulus must be >= 2");
    std::uint32_t rr = r % p;
    if (std::gcd(rr, p) != 1)
        throw ArgumentError("ring model: r must be invertible mod the modulus");
    std::vector<std::uint32_t> tau(p);
    for (std::uint32_t x = 0; x < p; ++x)
        tau[x] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(rr) * x) % p);
    auto sys = std::make_shared<FiniteDynSys>(p, std::vector<std::string>{"mult"},
                                              std::vector<std::vector<std::uint32_t>>{tau});

    // r^{-1} mod p by exhaustion; p is desk scale here
    std::uint32_t rinv = 0;
    for (std::uint32_t c = 0; c < p; ++c) {
        if ((static_cast<std::uint64_t>(rr) * c) % p == 1) {
            rinv = c;
            break;
        }
    }

    CovariantRep rep;
    rep.sys = sys;
    rep.truncation = 0;
    rep.basis.resize(p);
    rep.eval.resize(p);
    rep.shifts.assign(1, std::vector<std::optional<std::size_t>>(p));
    for (std::uint32_t kx = 0; kx < p; ++kx) {
        rep.basis[kx] = {kx, {}};
        rep.eval[kx] = kx;
        rep.shifts[0][kx] = (static_cast<std::uint64_t>(rinv) * kx) % p;
    }
    return rep;
}

const char* orientation_name(Orientation o) {
    switch (o) {
    case Orientation::Forward: return "forward";
    case Orientation::Backward: return "backward";
    case Orientation::Both: return "both";
    case Orientation::Neither: return "neither";
    }
    return "?";
}

std::vector<std::vector<int>> indicator_sample(std::uint32_t n) {
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (std::uint32_t y = 0; y < n; ++y) out[y][y] = 1;
    return out;
}

OrientationResult check_covariance_orientation(const CovariantRep& rep,
                                               const std::vector<std::vector<int>>& f_sample,
                                               std::size_t gen_index) {
    if (gen_index >= rep.shifts.size())
        throw ArgumentError("orientation check: no such generator");
    const auto& shift = rep.shifts[gen_index];
    const FiniteDynSys& sys = *rep.sys;

    Report report("covariance-orientation");
    report.set("system", sys.describe());
    report.set("generator", sys.name(gen_index));
    report.set("truncation", static_cast<long long>(rep.truncation));
    report.set("functions", static_cast<long long>(f_sample.size()));

    std::size_t conclusive = 0;
    std::size_t fwd_ok = 0, fwd_fail = 0, bwd_ok = 0, bwd_fail = 0;
    std::string fwd_witness, bwd_witness;

    for (const auto& f : f_sample) {
        if (f.size() != sys.size())
            throw ArgumentError("orientation check: function sample has wrong domain");
        for (std::size_t i = 0; i < rep.basis.size(); ++i) {
            if (!shift[i]) continue; // shifted index leaves the truncation
            ++conclusive;
            std::size_t j = *shift[i];
            // forward:  S_t pi(f) e_i = f(eval(i)) e_j  vs  pi(f.tau) S_t e_i = f(tau(eval(j))) e_j
            bool fwd = f[rep.eval[i]] == f[sys.apply(gen_index, rep.eval[j])];
            // backward: pi(f) S_t e_i = f(eval(j)) e_j  vs  S_t pi(f.tau) e_i = f(tau(eval(i))) e_j
            bool bwd = f[rep.eval[j]] == f[sys.apply(gen_index, rep.eval[i])];
            if (fwd) ++fwd_ok; else ++fwd_fail;
            if (bwd) ++bwd_ok; else ++bwd_fail;
            if (!fwd && fwd_witness.empty())
                fwd_witness = "f=" + std::to_string(&f - f_sample.data()) + " at " +
                              rep.describe_label(i);
            if (!bwd && bwd_witness.empty())
                bwd_witness = "f=" + std::to_string(&f - f_sample.data()) + " at " +
                              rep.describe_label(i);
        }
    }
    if (conclusive == 0) throw ArgumentError("orientation check: empty conclusive set");

    report.set("conclusive", static_cast<long long>(conclusive));
    report.set("forward.holds", static_cast<long long>(fwd_ok));
    report.set("forward.fails", static_cast<long long>(fwd_fail));
    if (!fwd_witness.empty()) report.set("forward.witness", fwd_witness);
    report.set("backward.holds", static_cast<long long>(bwd_ok));
    report.set("backward.fails", static_cast<long long>(bwd_fail));
    if (!bwd_witness.empty()) report.set("backward.witness", bwd_witness);

    Orientation verdict;
    if (fwd_fail == 0 && bwd_fail == 0) verdict = Orientation::Both;
    else if (fwd_fail == 0) verdict = Orientation::Forward;
    else if (bwd_fail == 0) verdict = Orientation::Backward;
    else verdict = Orientation::Neither;
    report.set("orientation", orientation_name(verdict));
    return {verdict, std::move(report)};
}

double Mat2::max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

namespace {

bool is_irreducible_associate(const RingElement& x) {
    const Ring& ring = x.ring();
    if (x.is_zero()) return false;
    auto [unit, assoc] = canonical_associate(x);
    if (!unit.is_one()) return false;
    if (is_unit(x)) return false;
    Int bound = ring.kind() == Ring::Kind::Integers ? x.as_integer() : Int(x.as_poly().degree());
    for (const RingElement& d : irreducibles(ring, bound)) {
        if (d == x) return true;
        if (ring.kind() == Ring::Kind::Integers && d.as_integer() * d.as_integer() > x.as_integer())
            break;
        if (divide_exact(x, d)) return false;
    }
    // integers: no prime divisor up to sqrt means x itself is prime
    return ring.kind() == Ring::Kind::Integers;
}

} // namespace

NestRep NestRep::build(const Ring& ring, RingElement x, const Rational& theta,
                       std::vector<RingElement> u_sample, std::vector<RingElement> s_sample) {
    if (ring.kind() != Ring::Kind::Integers && ring.kind() != Ring::Kind::PolyOverPrimeField)
        throw UnsupportedError("nest representation: Z and F_p[x] only");
    if (x.ring() != ring) throw RingMismatchError("nest representation: x ring mismatch");
    if (!is_irreducible_associate(x))
        throw ArgumentError("nest representation: x must be a canonical irreducible");
    for (const RingElement& r : s_sample) {
        if (r.ring() != ring) throw RingMismatchError("nest representation: s-sample ring mismatch");
        if (r.is_zero() || !canonical_associate(r).unit.is_one())
            throw ArgumentError("nest representation: s-sample must be canonical associates");
    }
    for (const RingElement& n : u_sample) {
        if (n.ring() != ring) throw RingMismatchError("nest representation: u-sample ring mismatch");
    }
    bool degenerate = false;
    if (ring.kind() == Ring::Kind::Integers) {
        degenerate = boost::multiprecision::denominator(theta) == 1;
    }
    return NestRep(std::move(x), theta, std::move(u_sample), std::move(s_sample), degenerate);
}

std::complex<double> NestRep::character(const RingElement& n) const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    if (ring().kind() == Ring::Kind::Integers) {
        Int a = boost::multiprecision::numerator(theta_);
        Int b = boost::multiprecision::denominator(theta_); // > 0
        Int num = a * n.as_integer();
        Int rem = num % b;
        if (rem < 0) rem += b;
        double frac = rem.convert_to<double>() / b.convert_to<double>();
        return std::polar(1.0, two_pi * frac);
    }
    // chi(f) = exp(2 pi i f(theta_hat) / p) with theta_hat = theta mod p
    std::uint32_t p = ring().modulus();
    Int a = boost::multiprecision::numerator(theta_);
    Int b = boost::multiprecision::denominator(theta_);
    Int am = a % p;
    if (am < 0) am += p;
    Int bm = b % p;
    std::uint32_t bi = bm.convert_to<std::uint32_t>();
    std::uint32_t binv = 0;
    for (std::uint32_t c = 1; c < p; ++c) {
        if ((static_cast<std::uint64_t>(bi) * c) % p == 1) {
            binv = c;
            break;
        }
    }
    if (binv == 0) throw ArgumentError("nest character: theta denominator not invertible mod p");
    std::uint64_t theta_hat = (am.convert_to<std::uint64_t>() * binv) % p;
    // Horner evaluation of n at theta_hat mod p
    const auto& coeffs = n.as_poly().coeffs;
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = (v * theta_hat + coeffs[i]) % p;
    return std::polar(1.0, two_pi * static_cast<double>(v) / static_cast<double>(p));
}

Mat2 NestRep::image_u(const RingElement& n) const {
    return Mat2::diag(character(n), character(x_ * n));
}

Mat2 NestRep::image_s(const RingElement& r) const {
    if (r.ring() != ring()) throw RingMismatchError("nest image: ring mismatch");
    if (r.is_zero() || !canonical_associate(r).unit.is_one())
        throw ArgumentError("nest image: multiplier must be a canonical associate");
    if (r.is_one()) return Mat2::identity();
    if (r == x_) return Mat2::upper_unit();
    return Mat2::zero();
}

Mat2 NestRep::image_nf(const NormalForm& nf) const {
    return image_u(nf.trans()) * image_s(nf.mult());
}

Mat2 NestRep::image_word(const Word& w) const {
    Mat2 acc = Mat2::identity();
    for (const Generator& g : w.letters()) {
        acc = acc * (g.is_u() ? image_u(g.elem()) : image_s(g.elem()));
    }
    return acc;
}

double check_nest_multiplicativity(const NestRep& rep,
                                   const std::vector<std::pair<Word, Word>>& pairs) {
    double worst = 0;
    for (const auto& [w1, w2] : pairs) {
        Mat2 lhs = rep.image_word(w1) * rep.image_word(w2);
        Mat2 rhs = rep.image_nf(normalize(concat(w1, w2)));
        worst = std::max(worst, (lhs - rhs).max_abs());
    }
    return worst;
}

Report check_nest(const NestRep& rep, unsigned pair_count, std::uint64_t seed) {
    Report report("nest");
    report.set("ring", rep.ring().name());
    report.set("x", format_element(rep.irreducible()));
    // the transposed slot order fails covariance against E_12
    report.set("slot-order", "diag(chi(n), chi(x*n))");
    report.set("pairs", static_cast<long long>(pair_count));
    report.set("seed", static_cast<long long>(seed));
    if (rep.degenerate_character()) report.set("warning", "degenerate character (chi trivial)");

    double unit_dev = 0;
    for (const RingElement& n : rep.u_sample()) {
        unit_dev = std::max(unit_dev, std::abs(std::abs(rep.character(n)) - 1.0));
        unit_dev = std::max(unit_dev, std::abs(std::abs(rep.character(rep.irreducible() * n)) - 1.0));
    }

    double cov_dev = 0;
    for (const RingElement& n : rep.u_sample()) {
        Mat2 lhs = rep.image_s(rep.irreducible()) * rep.image_u(n);
        Mat2 rhs = rep.image_u(rep.irreducible() * n) * rep.image_s(rep.irreducible());
        cov_dev = std::max(cov_dev, (lhs - rhs).max_abs());
    }

    std::mt19937_64 rng(seed);
    std::vector<std::pair<Word, Word>> pairs;
    auto random_word = [&]() {
        Word w(rep.ring());
        unsigned len = rng() % 6;
        for (unsigned i = 0; i < len; ++i) {
            if (!rep.s_sample().empty() && rng() % 2 == 0) {
                w.append(Generator::s(rep.s_sample()[rng() % rep.s_sample().size()]));
            } else if (!rep.u_sample().empty()) {
                w.append(Generator::u(rep.u_sample()[rng() % rep.u_sample().size()]));
            }
        }
        return w;
    };
    for (unsigned k = 0; k < pair_count; ++k) pairs.emplace_back(random_word(), random_word());
    double mult_dev = check_nest_multiplicativity(rep, pairs);

    auto fmt = [](double v) {
        std::ostringstream s;
        s.setf(std::ios::scientific);
        s.precision(3);
        s << v;
        return s.str();
    };
    report.set("unitarity-deviation", fmt(unit_dev));
    report.set("covariance-deviation", fmt(cov_dev));
    report.set("multiplicativity-deviation", fmt(mult_dev));
    report.set("tolerance", "1e-12");
    bool ok = unit_dev <= 1e-12 && cov_dev <= 1e-12 && mult_dev <= 1e-12;
    report.force_verdict(ok ? Report::Verdict::Pass : Report::Verdict::Fail);
    return report;
}

} // namespace ringrep
