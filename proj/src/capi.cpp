#include "ringrep.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>

#include "ringrep/covariant.hpp"
#include "ringrep/duals.hpp"
#include "ringrep/finitemodels.hpp"
#include "ringrep/parse.hpp"
#include "ringrep/regrep.hpp"

using namespace ringrep;

extern "C" {
struct ringrep_ring {
    Ring v;
};
struct ringrep_word {
    Word v;
};
struct ringrep_normal_form {
    NormalForm v;
};
struct ringrep_report {
    Report v;
};
struct ringrep_model {
    FiniteModel v;
};
}

namespace {

thread_local std::string g_last_error;

template <typename Fn> ringrep_status wrap(Fn&& fn) {
    try {
        fn();
        return RINGREP_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return RINGREP_ERR_PARSE;
    } catch (const RingMismatchError& e) {
        g_last_error = e.what();
        return RINGREP_ERR_RING_MISMATCH;
    } catch (const UnsupportedError& e) {
        g_last_error = e.what();
        return RINGREP_ERR_UNSUPPORTED;
    } catch (const SearchExhaustedError& e) {
        g_last_error = e.what();
        return RINGREP_ERR_SEARCH_EXHAUSTED;
    } catch (const ArgumentError& e) {
        g_last_error = e.what();
        return RINGREP_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RINGREP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RINGREP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ringrep_status require(bool cond, const char* message) {
    if (cond) return RINGREP_OK;
    g_last_error = message;
    return RINGREP_ERR_ARGUMENT;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        std::size_t b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ArgumentError("params: expected k=v, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

long long kv_int(const std::map<std::string, std::string>& kv, const std::string& key,
                 long long fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    return std::stoll(it->second);
}

WindowPtr window_for(const Ring& ring, long long bound) {
    switch (ring.kind()) {
    case Ring::Kind::Integers: return std::make_shared<Window>(Window::integer_interval(Int(bound)));
    case Ring::Kind::GaussianIntegers:
        return std::make_shared<Window>(Window::gaussian_box(Int(bound)));
    case Ring::Kind::PrimeField:
        return std::make_shared<Window>(Window::prime_field_full(ring.modulus()));
    case Ring::Kind::PolyOverPrimeField:
        return std::make_shared<Window>(
            Window::poly_degree(ring.modulus(), static_cast<unsigned>(bound)));
    default: throw UnsupportedError("relation checks run over z, zi, fp, fpx");
    }
}

Rational parse_theta(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ArgumentError("theta: zero denominator");
        return Rational(num, den);
    }
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Rational(Int(text));
    // exact decimal: digits.digits -> digits / 10^k
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Int den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(Int(digits), den);
}

} // namespace

extern "C" {

const char* ringrep_version(void) { return "0.1.0"; }

const char* ringrep_status_name(ringrep_status status) {
    switch (status) {
    case RINGREP_OK: return "ok";
    case RINGREP_ERR_ARGUMENT: return "argument";
    case RINGREP_ERR_PARSE: return "parse";
    case RINGREP_ERR_RING_MISMATCH: return "ring-mismatch";
    case RINGREP_ERR_UNSUPPORTED: return "unsupported";
    case RINGREP_ERR_SEARCH_EXHAUSTED: return "search-exhausted";
    case RINGREP_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* ringrep_last_error(void) { return g_last_error.c_str(); }

void ringrep_string_free(char* s) { std::free(s); }

ringrep_status ringrep_ring_create(const char* selector, ringrep_ring** out) {
    if (auto st = require(selector && out, "ring_create: null argument")) return st;
    return wrap([&] { *out = new ringrep_ring{parse_ring_selector(selector)}; });
}

void ringrep_ring_destroy(ringrep_ring* ring) { delete ring; }

ringrep_status ringrep_ring_name(const ringrep_ring* ring, char** out) {
    if (auto st = require(ring && out, "ring_name: null argument")) return st;
    return wrap([&] { *out = dup_string(ring->v.name()); });
}

ringrep_status ringrep_word_parse(const ringrep_ring* ring, const char* text, ringrep_word** out) {
    if (auto st = require(ring && text && out, "word_parse: null argument")) return st;
    return wrap([&] { *out = new ringrep_word{parse_word(ring->v, text)}; });
}

void ringrep_word_destroy(ringrep_word* word) { delete word; }

ringrep_status ringrep_word_format(const ringrep_word* word, char** out) {
    if (auto st = require(word && out, "word_format: null argument")) return st;
    return wrap([&] { *out = dup_string(format_word(word->v)); });
}

ringrep_status ringrep_word_normalize(const ringrep_word* word, ringrep_normal_form** out) {
    if (auto st = require(word && out, "word_normalize: null argument")) return st;
    return wrap([&] { *out = new ringrep_normal_form{normalize(word->v)}; });
}

void ringrep_normal_form_destroy(ringrep_normal_form* nf) { delete nf; }

ringrep_status ringrep_normal_form_mult(const ringrep_normal_form* nf, char** out) {
    if (auto st = require(nf && out, "normal_form_mult: null argument")) return st;
    return wrap([&] { *out = dup_string(format_element(nf->v.mult())); });
}

ringrep_status ringrep_normal_form_trans(const ringrep_normal_form* nf, char** out) {
    if (auto st = require(nf && out, "normal_form_trans: null argument")) return st;
    return wrap([&] { *out = dup_string(format_element(nf->v.trans())); });
}

ringrep_status ringrep_normal_form_format(const ringrep_normal_form* nf, char** out) {
    if (auto st = require(nf && out, "normal_form_format: null argument")) return st;
    return wrap([&] { *out = dup_string(format_normal_form(nf->v)); });
}

ringrep_status ringrep_normal_form_act(const ringrep_normal_form* nf, const char* point,
                                       char** out) {
    if (auto st = require(nf && point && out, "normal_form_act: null argument")) return st;
    return wrap([&] {
        const Ring& ring = nf->v.ring();
        bool fractional = std::string(point).find('/') != std::string::npos;
        Ring point_ring = fractional && !ring.is_fraction_field() ? Ring::fraction_field(ring) : ring;
        RingElement q = parse_element(point_ring, point);
        *out = dup_string(format_element(act_affine(nf->v, q)));
    });
}

void ringrep_report_destroy(ringrep_report* report) { delete report; }

ringrep_verdict ringrep_report_verdict(const ringrep_report* report) {
    if (!report) return RINGREP_VERDICT_INCONCLUSIVE;
    switch (report->v.verdict()) {
    case Report::Verdict::Pass: return RINGREP_VERDICT_PASS;
    case Report::Verdict::Fail: return RINGREP_VERDICT_FAIL;
    case Report::Verdict::InconclusiveOnly: return RINGREP_VERDICT_INCONCLUSIVE;
    }
    return RINGREP_VERDICT_INCONCLUSIVE;
}

ringrep_status ringrep_report_render(const ringrep_report* report, char** out) {
    if (auto st = require(report && out, "report_render: null argument")) return st;
    return wrap([&] { *out = dup_string(report->v.render()); });
}

unsigned long ringrep_report_count(const ringrep_report* report, const char* cls) {
    if (!report || !cls) return 0;
    std::string c(cls);
    if (c == "verified") return report->v.count(Report::PointClass::Verified);
    if (c == "violated") return report->v.count(Report::PointClass::Violated);
    if (c == "inconclusive") return report->v.count(Report::PointClass::Inconclusive);
    return 0;
}

ringrep_status ringrep_report_value(const ringrep_report* report, const char* key, char** out) {
    if (auto st = require(report && key && out, "report_value: null argument")) return st;
    return wrap([&] { *out = dup_string(report->v.value_of(key)); });
}

ringrep_status ringrep_check(const ringrep_ring* ring, const char* relation, const char* params,
                             ringrep_report** out) {
    if (auto st = require(ring && relation && out, "check: null argument")) return st;
    return wrap([&] {
        auto kv = parse_kv(params ? params : "");
        std::string rel(relation);
        long long bound = kv_int(kv, "window", 10);

        if (rel == "compression") {
            if (ring->v.kind() != Ring::Kind::Integers)
                throw UnsupportedError("compression check: ring z only");
            long long inner = kv_int(kv, "inner", 4);
            long long magnitude = kv_int(kv, "magnitude", 6 * inner);
            long long den = kv_int(kv, "den", 6);
            if (!kv.count("r") && !kv.count("n"))
                throw ArgumentError("compression check needs r= or n=");
            WindowPtr wr = std::make_shared<Window>(Window::integer_interval(Int(inner)));
            WindowPtr wq =
                std::make_shared<Window>(Window::integer_fractions(Int(magnitude), Int(den)));
            Generator g = kv.count("r") ? Generator::s(parse_element(ring->v, kv.at("r")))
                                        : Generator::u(parse_element(ring->v, kv.at("n")));
            *out = new ringrep_report{check_compression(g, wr, wq)};
            return;
        }

        RelationKind kind;
        if (rel == "mul-s") kind = RelationKind::MulS;
        else if (rel == "add-u") kind = RelationKind::AddU;
        else if (rel == "covariance") kind = RelationKind::Covariance;
        else if (rel == "isometry") kind = RelationKind::Isometry;
        else if (rel == "unit-unitarity") kind = RelationKind::UnitUnitarity;
        else throw ArgumentError("unknown relation '" + rel + "'");

        RelationParams rp;
        if (kv.count("r")) rp.r = parse_element(ring->v, kv.at("r"));
        if (kv.count("t")) rp.t = parse_element(ring->v, kv.at("t"));
        if (kv.count("n")) rp.n = parse_element(ring->v, kv.at("n"));
        if (kv.count("m")) rp.m = parse_element(ring->v, kv.at("m"));
        *out = new ringrep_report{check_relation(kind, rp, window_for(ring->v, bound))};
    });
}

ringrep_status ringrep_orbits(unsigned long modulus, ringrep_report** out) {
    if (auto st = require(out != nullptr, "orbits: null argument")) return st;
    return wrap([&] {
        *out = new ringrep_report{
            multiplicative_orbits(static_cast<std::uint32_t>(modulus)).to_report()};
    });
}

ringrep_status ringrep_decompose(unsigned long p, unsigned long seed, ringrep_report** out) {
    if (auto st = require(out != nullptr, "decompose: null argument")) return st;
    return wrap([&] {
        *out = new ringrep_report{
            affine_group_algebra_decomposition(static_cast<std::uint32_t>(p), seed).to_report()};
    });
}

ringrep_status ringrep_witness(const ringrep_ring* ring, const char* gens_csv, unsigned long bound,
                               ringrep_report** out) {
    if (auto st = require(ring && out, "witness: null argument")) return st;
    return wrap([&] {
        std::vector<RingElement> gens;
        std::string csv = gens_csv ? gens_csv : "";
        std::size_t pos = 0;
        while (pos < csv.size()) {
            std::size_t comma = csv.find(',', pos);
            if (comma == std::string::npos) comma = csv.size();
            std::string item = csv.substr(pos, comma - pos);
            pos = comma + 1;
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            gens.push_back(parse_element(ring->v, item));
        }
        *out = new ringrep_report{
            monoid_generation_witness(ring->v, std::move(gens), Int(bound)).to_report()};
    });
}

ringrep_status ringrep_model_create(unsigned long m, ringrep_model** out) {
    if (auto st = require(out != nullptr, "model_create: null argument")) return st;
    return wrap(
        [&] { *out = new ringrep_model{FiniteModel::cyclic(static_cast<std::uint32_t>(m))}; });
}

void ringrep_model_destroy(ringrep_model* model) { delete model; }

ringrep_status ringrep_model_verify(const ringrep_model* model, ringrep_report** out) {
    if (auto st = require(model && out, "model_verify: null argument")) return st;
    return wrap([&] { *out = new ringrep_report{verify_model(model->v)}; });
}

ringrep_status ringrep_model_extend(const ringrep_model* model, const char* fraction, char kind,
                                    char** out) {
    if (auto st = require(model && fraction && out, "model_extend: null argument")) return st;
    if (auto st = require(kind == 's' || kind == 'u', "model_extend: kind must be 's' or 'u'"))
        return st;
    return wrap([&] {
        Fraction f = parse_integer_fraction(fraction);
        PermMatrix p = extend_to_fractions(model->v, f,
                                           kind == 's' ? Generator::Kind::S : Generator::Kind::U);
        *out = dup_string(p.to_string());
    });
}

ringrep_status ringrep_model_quotient_check(const ringrep_model* model, unsigned long bound,
                                            unsigned long seed, ringrep_report** out) {
    if (auto st = require(model && out, "model_quotient_check: null argument")) return st;
    return wrap([&] {
        std::uint32_t m = model->v.modulus();
        std::vector<Fraction> fractions;
        for (long long q = 1; q <= static_cast<long long>(bound); ++q) {
            for (long long p = -static_cast<long long>(bound); p <= static_cast<long long>(bound);
                 ++p) {
                Fraction f(RingElement::integer(Int(p)), RingElement::integer(Int(q)));
                long long den = f.den().as_integer().convert_to<long long>();
                if (m > 1 && std::gcd(den % m, static_cast<long long>(m)) != 1) continue;
                bool seen = false;
                for (const Fraction& g : fractions) {
                    if (g == f) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) fractions.push_back(f);
            }
        }
        std::vector<std::pair<Fraction, Fraction>> pairs;
        for (const Fraction& a : fractions)
            for (const Fraction& b : fractions) pairs.emplace_back(a, b);
        Report quotient = verify_quotient_relations(model->v, pairs);
        Report fact = check_factorization(model->v, seed);
        // merge the factorization outcome into one report
        quotient.set("factorization-checks",
                     static_cast<long long>(fact.count(Report::PointClass::Verified) +
                                            fact.count(Report::PointClass::Violated)));
        quotient.set("factorization-verdict", Report::verdict_name(fact.verdict()));
        quotient.set("seed", static_cast<long long>(seed));
        if (fact.verdict() != Report::Verdict::Pass)
            quotient.force_verdict(Report::Verdict::Fail);
        *out = new ringrep_report{std::move(quotient)};
    });
}

ringrep_status ringrep_nest_check(const ringrep_ring* ring, const char* x, const char* theta,
                                  unsigned long pairs, unsigned long seed, ringrep_report** out) {
    if (auto st = require(ring && x && theta && out, "nest_check: null argument")) return st;
    return wrap([&] {
        RingElement xe = parse_element(ring->v, x);
        Rational th = parse_theta(theta);

        std::vector<RingElement> u_sample;
        for (long long n = -3; n <= 3; ++n)
            u_sample.push_back(RingElement::from_int(ring->v, Int(n)));
        std::vector<RingElement> s_sample =
            irreducibles(ring->v, ring->v.kind() == Ring::Kind::Integers ? Int(7) : Int(2));
        bool have_x = false;
        for (const RingElement& r : s_sample) {
            if (r == xe) have_x = true;
        }
        if (!have_x) s_sample.push_back(xe);

        NestRep rep = NestRep::build(ring->v, xe, th, std::move(u_sample), std::move(s_sample));
        Report report = check_nest(rep, static_cast<unsigned>(pairs), seed);
        report.set("theta", theta);
        *out = new ringrep_report{std::move(report)};
    });
}

ringrep_status ringrep_cov_orientation(const char* system_text, unsigned long truncation,
                                       ringrep_report** out) {
    if (auto st = require(system_text && out, "cov_orientation: null argument")) return st;
    return wrap([&] {
        auto sys = std::make_shared<FiniteDynSys>(FiniteDynSys::parse(system_text));
        CovariantRep rep = build_orbit_rep(sys, static_cast<unsigned>(truncation));
        auto sample = indicator_sample(sys->size());

        Report merged("covariance-orientation");
        merged.set("construction", "l2(X,S)");
        merged.set("system", sys->describe());
        merged.set("truncation", static_cast<long long>(truncation));
        std::string common;
        bool mixed = false;
        for (std::size_t g = 0; g < sys->generator_count(); ++g) {
            OrientationResult res = check_covariance_orientation(rep, sample, g);
            std::string name = orientation_name(res.verdict);
            merged.set("orientation." + sys->name(g), name);
            merged.set("forward.fails." + sys->name(g), res.report.value_of("forward.fails"));
            merged.set("backward.fails." + sys->name(g), res.report.value_of("backward.fails"));
            std::string witness = res.report.value_of("forward.witness");
            if (!witness.empty()) merged.set("forward.witness." + sys->name(g), witness);
            if (common.empty()) common = name;
            else if (common != name) mixed = true;
        }
        merged.set("orientation", mixed ? "mixed" : common);
        merged.force_verdict(Report::Verdict::Pass);
        *out = new ringrep_report{std::move(merged)};
    });
}

ringrep_status ringrep_cov_ring_model(unsigned long modulus, unsigned long r,
                                      ringrep_report** out) {
    if (auto st = require(out != nullptr, "cov_ring_model: null argument")) return st;
    return wrap([&] {
        CovariantRep rep = build_ring_model_rep(static_cast<std::uint32_t>(modulus),
                                                static_cast<std::uint32_t>(r));
        OrientationResult res = check_covariance_orientation(
            rep, indicator_sample(static_cast<std::uint32_t>(modulus)), 0);
        res.report.set("construction", "ring-regular-representation");
        *out = new ringrep_report{std::move(res.report)};
    });
}

} // extern "C"
