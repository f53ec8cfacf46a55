// ringrep command line tool. Talks to the core exclusively through the
// C API in ringrep.h; exit codes: 0 pass/success, 1 violated check or
// exhausted search, 2 usage or parse error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ringrep.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

std::string take(char* s) {
    std::string out = s ? s : "";
    ringrep_string_free(s);
    return out;
}

struct RingPtr {
    ringrep_ring* ring = nullptr;
    ~RingPtr() { ringrep_ring_destroy(ring); }
};

struct ReportPtr {
    ringrep_report* report = nullptr;
    ~ReportPtr() { ringrep_report_destroy(report); }
};

[[noreturn]] void die(ringrep_status status) {
    std::cerr << "error (" << ringrep_status_name(status) << "): " << ringrep_last_error() << "\n";
    std::exit(status == RINGREP_ERR_SEARCH_EXHAUSTED ? kExitViolated : kExitUsage);
}

void check_ok(ringrep_status status) {
    if (status != RINGREP_OK) die(status);
}

ringrep_ring* make_ring(RingPtr& holder, const std::string& selector) {
    check_ok(ringrep_ring_create(selector.c_str(), &holder.ring));
    return holder.ring;
}

int print_report(ringrep_report* report, const std::string& format) {
    if (format == "text") {
        char* check = nullptr;
        check_ok(ringrep_report_value(report, "check", &check));
        std::ostringstream line;
        line << take(check);
        ringrep_verdict v = ringrep_report_verdict(report);
        line << ": " << (v == RINGREP_VERDICT_PASS ? "pass"
                         : v == RINGREP_VERDICT_FAIL ? "fail" : "inconclusive-only");
        unsigned long ver = ringrep_report_count(report, "verified");
        unsigned long vio = ringrep_report_count(report, "violated");
        unsigned long inc = ringrep_report_count(report, "inconclusive");
        if (ver + vio + inc > 0)
            line << " (verified=" << ver << " violated=" << vio << " inconclusive=" << inc << ")";
        std::cout << line.str() << "\n";
    } else {
        char* text = nullptr;
        check_ok(ringrep_report_render(report, &text));
        std::cout << take(text);
    }
    return ringrep_report_verdict(report) == RINGREP_VERDICT_FAIL ? kExitViolated : kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringrep: exact workbench for representations of integral domains"};
    app.require_subcommand(1);
    std::string format = "structured";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));

    // normalize
    auto* cmd_normalize = app.add_subcommand("normalize", "reduce a word to its normal form");
    std::string n_ring = "z", n_word;
    cmd_normalize->add_option("--ring", n_ring, "ring selector (z, zi, fp:<p>, fpx:<p>)");
    cmd_normalize->add_option("word", n_word, "word such as u[1]*s[2]*u[3]*s[5]");

    // act
    auto* cmd_act = app.add_subcommand("act", "apply a word's affine action to a basis point");
    std::string a_ring = "z", a_word, a_at = "0";
    cmd_act->add_option("--ring", a_ring, "ring selector");
    cmd_act->add_option("--word", a_word, "word to normalize and apply");
    cmd_act->add_option("--at", a_at, "basis point (p/q acts through Q(R))");

    // check
    auto* cmd_check = app.add_subcommand("check", "verify a relation on a finite window");
    std::string c_ring = "z", c_relation = "covariance";
    std::string c_r, c_t, c_n, c_m;
    long long c_window = 10, c_inner = 4, c_magnitude = 24, c_den = 6;
    cmd_check->add_option("--ring", c_ring, "ring selector");
    cmd_check->add_option("--relation", c_relation,
                          "mul-s | add-u | covariance | isometry | unit-unitarity | compression");
    cmd_check->add_option("--r", c_r, "multiplier parameter");
    cmd_check->add_option("--t", c_t, "second multiplier (mul-s)");
    cmd_check->add_option("--n", c_n, "translation parameter");
    cmd_check->add_option("--m", c_m, "second translation (add-u)");
    cmd_check->add_option("--window", c_window, "window bound (interval/box/degree)");
    cmd_check->add_option("--inner", c_inner, "compression: inner integer window bound");
    cmd_check->add_option("--magnitude", c_magnitude, "compression: fraction window magnitude");
    cmd_check->add_option("--den", c_den, "compression: fraction window denominator bound");

    // orbits
    auto* cmd_orbits = app.add_subcommand("orbits", "dual-action orbits of units on Z/m");
    long long o_p = 5;
    cmd_orbits->add_option("--p", o_p, "modulus (prime for the dual action, composite for contrast)")
        ->required();

    // decompose
    auto* cmd_decompose =
        app.add_subcommand("decompose", "block structure of the affine group algebra of F_p");
    long long d_p = 5, d_seed = 42;
    cmd_decompose->add_option("--p", d_p, "prime, at most 31")->required();
    cmd_decompose->add_option("--seed", d_seed, "seed for the random commutant element");

    // model
    auto* cmd_model = app.add_subcommand("model", "cyclic unitary model on Z/m");
    long long mo_m = 5, mo_bound = 6, mo_seed = 42;
    bool mo_verify = false;
    std::string mo_extend, mo_kind = "u";
    cmd_model->add_option("--m", mo_m, "modulus")->required();
    cmd_model->add_flag("--verify", mo_verify, "verify model and quotient relations");
    cmd_model->add_option("--extend", mo_extend, "fraction p/q to extend");
    cmd_model->add_option("--kind", mo_kind, "s or u")->check(CLI::IsMember({"s", "u"}));
    cmd_model->add_option("--bound", mo_bound, "fraction bound for --verify");
    cmd_model->add_option("--seed", mo_seed, "seed for --verify");

    // extend (standalone)
    auto* cmd_extend = app.add_subcommand("extend", "extend a cyclic model to a fraction generator");
    long long e_m = 5;
    std::string e_frac = "1/1", e_kind = "u";
    cmd_extend->add_option("--m", e_m, "modulus")->required();
    cmd_extend->add_option("--frac", e_frac, "fraction p/q")->required();
    cmd_extend->add_option("--kind", e_kind, "s or u")->check(CLI::IsMember({"s", "u"}));

    // witness
    auto* cmd_witness = app.add_subcommand("witness", "monoid non-generation witness");
    std::string w_ring = "fpx:2", w_gens;
    long long w_bound = 3;
    cmd_witness->add_option("--ring", w_ring, "z or fpx:<p>");
    cmd_witness->add_option("--gens", w_gens, "comma separated candidate generators");
    cmd_witness->add_option("--bound", w_bound, "search bound (magnitude/degree)");

    // nest
    auto* cmd_nest = app.add_subcommand("nest", "two-dimensional nest representation checks");
    std::string ne_ring = "z", ne_x = "2", ne_theta = "1/3";
    long long ne_pairs = 200, ne_seed = 42;
    bool ne_check = false;
    cmd_nest->add_option("--ring", ne_ring, "z or fpx:<p>");
    cmd_nest->add_option("--x", ne_x, "irreducible multiplier");
    cmd_nest->add_option("--theta", ne_theta, "character parameter (1/3 or 0.3)");
    cmd_nest->add_flag("--check", ne_check, "run the deviation checks (default behavior)");
    cmd_nest->add_option("--pairs", ne_pairs, "random word pairs for multiplicativity");
    cmd_nest->add_option("--seed", ne_seed, "sampling seed");

    // cov
    auto* cmd_cov = app.add_subcommand("cov", "covariance orientation of a dynamical system");
    std::string cv_system;
    long long cv_L = 3, cv_p = 5, cv_r = 2;
    bool cv_ring_model = false;
    cmd_cov->add_option("--system", cv_system, "dynamical system file (name: x->y ... lines)");
    cmd_cov->add_option("--L", cv_L, "monoid word truncation length");
    cmd_cov->add_flag("--ring-model", cv_ring_model, "use the ring regular representation");
    cmd_cov->add_option("--p", cv_p, "ring model: modulus");
    cmd_cov->add_option("--r", cv_r, "ring model: multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (cmd_normalize->parsed()) {
        RingPtr ring;
        make_ring(ring, n_ring);
        ringrep_word* word = nullptr;
        check_ok(ringrep_word_parse(ring.ring, n_word.c_str(), &word));
        ringrep_normal_form* nf = nullptr;
        check_ok(ringrep_word_normalize(word, &nf));
        if (format == "text") {
            char* s = nullptr;
            check_ok(ringrep_normal_form_format(nf, &s));
            std::cout << take(s) << "\n";
        } else {
            char* name = nullptr;
            check_ok(ringrep_ring_name(ring.ring, &name));
            char* printed = nullptr;
            check_ok(ringrep_word_format(word, &printed));
            char* mult = nullptr;
            char* trans = nullptr;
            check_ok(ringrep_normal_form_mult(nf, &mult));
            check_ok(ringrep_normal_form_trans(nf, &trans));
            std::cout << "check: normalize\n"
                      << "ring: " << take(name) << "\n"
                      << "word: " << take(printed) << "\n"
                      << "mult: " << take(mult) << "\n"
                      << "trans: " << take(trans) << "\n";
        }
        ringrep_normal_form_destroy(nf);
        ringrep_word_destroy(word);
        return kExitPass;
    }

    if (cmd_act->parsed()) {
        RingPtr ring;
        make_ring(ring, a_ring);
        ringrep_word* word = nullptr;
        check_ok(ringrep_word_parse(ring.ring, a_word.c_str(), &word));
        ringrep_normal_form* nf = nullptr;
        check_ok(ringrep_word_normalize(word, &nf));
        char* value = nullptr;
        check_ok(ringrep_normal_form_act(nf, a_at.c_str(), &value));
        if (format == "text") {
            std::cout << take(value) << "\n";
        } else {
            char* nfs = nullptr;
            check_ok(ringrep_normal_form_format(nf, &nfs));
            std::cout << "check: act\n"
                      << "normal-form: " << take(nfs) << "\n"
                      << "at: " << a_at << "\n"
                      << "value: " << take(value) << "\n";
        }
        ringrep_normal_form_destroy(nf);
        ringrep_word_destroy(word);
        return kExitPass;
    }

    if (cmd_check->parsed()) {
        RingPtr ring;
        make_ring(ring, c_ring);
        std::ostringstream params;
        if (!c_r.empty()) params << "r=" << c_r << ",";
        if (!c_t.empty()) params << "t=" << c_t << ",";
        if (!c_n.empty()) params << "n=" << c_n << ",";
        if (!c_m.empty()) params << "m=" << c_m << ",";
        params << "window=" << c_window;
        if (c_relation == "compression")
            params << ",inner=" << c_inner << ",magnitude=" << c_magnitude << ",den=" << c_den;
        ReportPtr report;
        check_ok(ringrep_check(ring.ring, c_relation.c_str(), params.str().c_str(), &report.report));
        return print_report(report.report, format);
    }

    if (cmd_orbits->parsed()) {
        ReportPtr report;
        check_ok(ringrep_orbits(static_cast<unsigned long>(o_p), &report.report));
        return print_report(report.report, format);
    }

    if (cmd_decompose->parsed()) {
        ReportPtr report;
        check_ok(ringrep_decompose(static_cast<unsigned long>(d_p),
                                   static_cast<unsigned long>(d_seed), &report.report));
        return print_report(report.report, format);
    }

    if (cmd_model->parsed()) {
        ringrep_model* model = nullptr;
        check_ok(ringrep_model_create(static_cast<unsigned long>(mo_m), &model));
        std::unique_ptr<ringrep_model, void (*)(ringrep_model*)> guard(model,
                                                                       &ringrep_model_destroy);
        if (!mo_extend.empty()) {
            char* perm = nullptr;
            check_ok(ringrep_model_extend(model, mo_extend.c_str(), mo_kind[0], &perm));
            if (format == "text") {
                std::cout << take(perm) << "\n";
            } else {
                std::cout << "check: extend\nm: " << mo_m << "\nfraction: " << mo_extend
                          << "\nkind: " << mo_kind << "\npermutation: " << take(perm) << "\n";
            }
            return kExitPass;
        }
        // default and --verify: model relations + quotient relation suite
        ReportPtr verify;
        check_ok(ringrep_model_verify(model, &verify.report));
        int rc1 = print_report(verify.report, format);
        std::cout << "\n";
        ReportPtr quotient;
        check_ok(ringrep_model_quotient_check(model, static_cast<unsigned long>(mo_bound),
                                              static_cast<unsigned long>(mo_seed),
                                              &quotient.report));
        int rc2 = print_report(quotient.report, format);
        return rc1 != kExitPass ? rc1 : rc2;
    }

    if (cmd_extend->parsed()) {
        ringrep_model* model = nullptr;
        check_ok(ringrep_model_create(static_cast<unsigned long>(e_m), &model));
        char* perm = nullptr;
        ringrep_status st = ringrep_model_extend(model, e_frac.c_str(), e_kind[0], &perm);
        if (st != RINGREP_OK) {
            ringrep_model_destroy(model);
            die(st);
        }
        if (format == "text") {
            std::cout << take(perm) << "\n";
        } else {
            std::cout << "check: extend\nm: " << e_m << "\nfraction: " << e_frac
                      << "\nkind: " << e_kind << "\npermutation: " << take(perm) << "\n";
        }
        ringrep_model_destroy(model);
        return kExitPass;
    }

    if (cmd_witness->parsed()) {
        RingPtr ring;
        make_ring(ring, w_ring);
        ReportPtr report;
        check_ok(ringrep_witness(ring.ring, w_gens.c_str(), static_cast<unsigned long>(w_bound),
                                 &report.report));
        return print_report(report.report, format);
    }

    if (cmd_nest->parsed()) {
        (void)ne_check; // deviation checks always run
        RingPtr ring;
        make_ring(ring, ne_ring);
        ReportPtr report;
        check_ok(ringrep_nest_check(ring.ring, ne_x.c_str(), ne_theta.c_str(),
                                    static_cast<unsigned long>(ne_pairs),
                                    static_cast<unsigned long>(ne_seed), &report.report));
        return print_report(report.report, format);
    }

    if (cmd_cov->parsed()) {
        ReportPtr report;
        if (cv_ring_model) {
            check_ok(ringrep_cov_ring_model(static_cast<unsigned long>(cv_p),
                                            static_cast<unsigned long>(cv_r), &report.report));
        } else {
            if (cv_system.empty()) {
                std::cerr << "error: cov needs --system <file> or --ring-model\n";
                return kExitUsage;
            }
            std::ifstream in(cv_system);
            if (!in) {
                std::cerr << "error: cannot open " << cv_system << "\n";
                return kExitUsage;
            }
            std::ostringstream text;
            text << in.rdbuf();
            check_ok(ringrep_cov_orientation(text.str().c_str(),
                                             static_cast<unsigned long>(cv_L), &report.report));
        }
        return print_report(report.report, format);
    }

    return kExitUsage;
}
