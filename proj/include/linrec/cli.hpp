#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linrec/filtration.hpp"
#include "linrec/genfun.hpp"
#include "linrec/hopf_checks.hpp"
#include "linrec/json_io.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/random_elements.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

struct usage_error : error {
    using error::error;
};

struct CommandResult {
    std::string text;
    json payload;
    int exit_code = 0;
};

namespace cli_detail {

inline json read_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

inline ElementSpec load_element(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return parse_element(read_json_text(arg));
    std::ifstream in(arg);
    if (!in) throw usage_error("cannot open element file: " + arg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_element(read_json_text(text));
}

inline ElementSpec load_from(const std::string& spec, const std::string& inline_json) {
    if (spec.empty() == inline_json.empty())
        throw usage_error("provide exactly one of --spec or --inline");
    if (!inline_json.empty()) return parse_element(read_json_text(inline_json));
    return load_element(spec);
}

inline RecurrenceSequence as_recurrence(const ElementSpec& e) {
    if (const auto* s = std::get_if<RecurrenceSequence>(&e)) return *s;
    if (const auto* f = std::get_if<NormalForm>(&e)) return f->to_recurrence();
    if (const auto* g = std::get_if<RationalOGF>(&e)) return recurrence_from_ogf(*g);
    throw usage_error("this command needs a recurrence, normal_form or ogf element");
}

inline NormalForm as_normal_form(const ElementSpec& e) {
    if (const auto* f = std::get_if<NormalForm>(&e)) return *f;
    if (const auto* s = std::get_if<RecurrenceSequence>(&e)) return NormalForm::from_recurrence(*s);
    if (const auto* g = std::get_if<RationalOGF>(&e))
        return NormalForm::from_recurrence(recurrence_from_ogf(*g));
    throw usage_error("this command needs a normal_form, recurrence or ogf element");
}

inline TermVector as_terms(const ElementSpec& e, std::size_t count) {
    if (count == 0) throw usage_error("--count must be at least 1");
    if (const auto* t = std::get_if<TermVector>(&e)) {
        if (t->size() < count)
            throw usage_error("terms element has only " + std::to_string(t->size()) +
                              " terms, need " + std::to_string(count));
        return TermVector(t->begin(), t->begin() + static_cast<std::ptrdiff_t>(count));
    }
    return gen_terms(as_recurrence(e), count - 1);
}

inline std::string join_scalars(const std::vector<GaussianRational>& xs,
                                const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += sep;
        out += xs[i].str();
    }
    return out;
}

inline std::string recurrence_text(const RecurrenceSequence& s) {
    if (s.order() == 0) return "zero sequence (order 0)";
    return "order " + std::to_string(s.order()) + "; coeffs " + join_scalars(s.coeffs) +
           "; initial " + join_scalars(s.initial);
}

inline std::string key_text(const NormalForm::Key& key) {
    return "[k=" + std::to_string(key.k) + ", lambda=" + key.lambda.str() + "]";
}

// Appends "<sep> <coeff>*<tail>" with the sign folded into the separator and
// unit coefficients suppressed.
inline void append_term(std::string& out, GaussianRational coeff, const std::string& tail) {
    bool negative = coeff.str().front() == '-';
    if (negative) coeff = -coeff;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    std::string cs = coeff.str();
    bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
    if (tail.empty()) {
        out += composite ? "(" + cs + ")" : cs;
        return;
    }
    if (cs != "1") out += (composite ? "(" + cs + ")" : cs) + "*";
    out += tail;
}

inline std::string nf_text(const NormalForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [key, coeff] : f.support()) append_term(out, coeff, key_text(key));
    return out;
}

inline std::string tensor_text(const TensorSum& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [pair, coeff] : t.support())
        append_term(out, coeff, key_text(pair.first) + "(x)" + key_text(pair.second));
    return out;
}

inline std::string series_text(const PowerSeriesTrunc& s) {
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        std::string tail;
        if (k >= 1) tail = k == 1 ? "Z" : "Z^" + std::to_string(k);
        append_term(out, s.coeff(k), tail);
    }
    if (out.empty()) out = "0";
    return out + " + O(Z^" + std::to_string(s.order() + 1) + ")";
}

inline std::string ogf_text(const RationalOGF& g) {
    return "(" + g.num.str() + ") / (" + g.den.str() + ")";
}

inline std::string degree_text(const std::optional<std::size_t>& d) {
    return d ? std::to_string(*d) : "inf";
}

struct ElementArgs {
    std::string spec;
    std::string inline_json;
    ElementSpec load() const { return load_from(spec, inline_json); }
};

inline void add_element_options(CLI::App* sub, ElementArgs& args) {
    sub->add_option("--spec", args.spec, "element file, or inline JSON starting with '{'");
    sub->add_option("--inline", args.inline_json, "inline element JSON");
}

} // namespace cli_detail

/// Parse and execute one command line (without the program name). Collects
/// the human-readable text, the machine payload and the exit code; never
/// prints. Exit codes: 0 ok, 2 usage, 3 parse error, 4 domain error.
inline CommandResult run(std::vector<std::string> args) {
    using namespace cli_detail;

    CommandResult result;
    CLI::App app{"exact arithmetic for linearly recursive sequences: recurrences, "
                 "normal forms, generating functions and filtration degrees"};
    app.require_subcommand(1);

    struct State {
        ElementArgs element;
        std::string a, b;
        std::size_t count = 10;
        std::size_t order = 20;
        std::size_t cut = 0;
        std::size_t max_n = 0;
        std::size_t max_terms = 16;
        std::size_t checks = 50;
        std::size_t max_degree = 12;
        std::uint64_t seed = 1;
        bool inverse = false;
        bool json_out = false;
    };
    auto st = std::make_shared<State>();

    auto finish = [&result, st](std::string text, json payload) {
        result.text = std::move(text);
        result.payload = std::move(payload);
    };

    // terms: generate a prefix of the sequence
    {
        auto* sub = app.add_subcommand("terms", "first terms of a sequence");
        add_element_options(sub, st->element);
        sub->add_option("--count", st->count, "number of terms (default 10)");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            TermVector t = as_terms(st->element.load(), st->count);
            finish(join_scalars(t), terms_to_json(t));
        });
    }

    // hurwitz / cauchy: product of two sequences
    for (auto kind : {product_kind::hurwitz, product_kind::cauchy}) {
        const char* name = kind == product_kind::hurwitz ? "hurwitz" : "cauchy";
        const char* desc = kind == product_kind::hurwitz
                               ? "binomial-convolution product of two sequences"
                               : "ordinary-convolution product of two sequences";
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--a", st->a, "first element (file or inline JSON)")->required();
        sub->add_option("--b", st->b, "second element (file or inline JSON)")->required();
        sub->add_option("--count", st->count, "terms to emit when not both recurrences");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish, kind] {
            ElementSpec ea = load_element(st->a);
            ElementSpec eb = load_element(st->b);
            const auto* ra = std::get_if<RecurrenceSequence>(&ea);
            const auto* rb = std::get_if<RecurrenceSequence>(&eb);
            if (ra && rb) {
                RecurrenceSequence prod = product_recurrence(*ra, *rb, kind);
                std::size_t preview = prod.order() == 0 ? st->count : 2 * prod.order() + 2;
                TermVector t = gen_terms(prod, preview - 1);
                finish(recurrence_text(prod) + "\nterms: " + join_scalars(t), to_json(prod));
                return;
            }
            TermVector ta = as_terms(ea, st->count);
            TermVector tb = as_terms(eb, st->count);
            TermVector t =
                kind == product_kind::hurwitz ? hurwitz_product(ta, tb) : cauchy_product(ta, tb);
            finish(join_scalars(t), terms_to_json(t));
        });
    }

    // zeta: termwise division (or multiplication) by n!
    {
        auto* sub = app.add_subcommand("zeta", "divide term n by n! (or multiply with --inverse)");
        add_element_options(sub, st->element);
        sub->add_option("--count", st->count, "number of terms (default 10)");
        sub->add_flag("--inverse", st->inverse, "multiply by n! instead");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            TermVector t = as_terms(st->element.load(), st->count);
            TermVector z =
                zeta(t, st->inverse ? zeta_direction::inverse : zeta_direction::forward);
            finish(join_scalars(z), terms_to_json(z));
        });
    }

    // bm: minimal recurrence from a prefix
    {
        auto* sub = app.add_subcommand("bm", "minimal recurrence regenerating a term prefix");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            ElementSpec e = st->element.load();
            const auto* t = std::get_if<TermVector>(&e);
            if (!t) throw usage_error("bm needs a terms element");
            RecurrenceSequence rec = berlekamp_massey(*t);
            finish(recurrence_text(rec), to_json(rec));
        });
    }

    // nf: recurrence -> normal form
    {
        auto* sub = app.add_subcommand("nf", "normal form of a recurrent sequence");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            ElementSpec e = st->element.load();
            NormalForm f = as_normal_form(e);
            finish(nf_text(f), to_json(f));
        });
    }

    // rec: normal form or ogf -> recurrence
    {
        auto* sub = app.add_subcommand("rec", "recurrence form of a normal_form or ogf element");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            RecurrenceSequence s = as_recurrence(st->element.load());
            finish(recurrence_text(s), to_json(s));
        });
    }

    // ogf: rational ordinary generating function
    {
        auto* sub = app.add_subcommand("ogf", "rational generating function of a sequence");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            ElementSpec e = st->element.load();
            if (const auto* g = std::get_if<RationalOGF>(&e)) {
                finish(ogf_text(*g), to_json(*g));
                return;
            }
            RationalOGF g = ogf_from_recurrence(as_recurrence(e));
            finish(ogf_text(g), to_json(g));
        });
    }

    // egf: truncated exponential generating series
    {
        auto* sub = app.add_subcommand("egf", "truncated exponential generating series");
        add_element_options(sub, st->element);
        sub->add_option("--order", st->order, "truncation order (default 20)");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            ElementSpec e = st->element.load();
            PowerSeriesTrunc s(st->order);
            if (const auto* f = std::get_if<NormalForm>(&e)) {
                s = egf_trunc(*f, st->order);
            } else {
                // same series through the sequence route: coefficient n is z_n/n!
                TermVector t = zeta(as_terms(e, st->order + 1));
                s = PowerSeriesTrunc(std::move(t), st->order);
            }
            finish(series_text(s), to_json(s));
        });
    }

    // mul: convolution product of normal forms
    {
        auto* sub = app.add_subcommand("mul", "product of two normal forms");
        sub->add_option("--a", st->a, "first element")->required();
        sub->add_option("--b", st->b, "second element")->required();
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            NormalForm f = as_normal_form(load_element(st->a));
            NormalForm g = as_normal_form(load_element(st->b));
            NormalForm prod = f * g;
            finish(nf_text(prod), to_json(prod));
        });
    }

    // delta: comultiplication
    {
        auto* sub = app.add_subcommand("delta", "comultiplication of a normal form");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            TensorSum t = as_normal_form(st->element.load()).comultiply();
            finish(tensor_text(t), to_json(t));
        });
    }

    // antipode
    {
        auto* sub = app.add_subcommand("antipode", "antipode of a normal form");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            NormalForm f = as_normal_form(st->element.load()).antipode();
            finish(nf_text(f), to_json(f));
        });
    }

    // counit
    {
        auto* sub = app.add_subcommand("counit", "counit (augmentation) of a normal form");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            GaussianRational c = as_normal_form(st->element.load()).counit();
            finish(c.str(), json{{"counit", c.str()}});
        });
    }

    // truncate
    {
        auto* sub = app.add_subcommand("truncate", "head of the primitive-power expansion");
        add_element_options(sub, st->element);
        sub->add_option("--n", st->cut, "expansion length")->required();
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            NormalForm f = as_normal_form(st->element.load()).truncate(st->cut);
            finish(nf_text(f), to_json(f));
        });
    }

    // degree queries
    {
        auto* sub = app.add_subcommand("ideg", "degree in the filtration induced from the full dual");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            ElementSpec e = st->element.load();
            if (const auto* s = std::get_if<PowerSeriesTrunc>(&e)) {
                // on truncated data the degree is the valuation, and past the
                // truncation order it is indeterminate rather than infinite
                auto v = valuation(*s);
                finish(v ? std::to_string(*v) : "indeterminate",
                       json{{"ideg", v ? json(*v) : json("indeterminate")}});
                return;
            }
            std::optional<std::size_t> d;
            if (std::holds_alternative<NormalForm>(e)) {
                d = ideg(std::get<NormalForm>(e));
            } else {
                // same count of leading zero values, through the sequence form
                d = cauchy_jdeg(as_recurrence(e));
            }
            finish(degree_text(d), json{{"ideg", degree_to_json(d)}});
        });
    }
    {
        auto* sub = app.add_subcommand("jdeg", "degree in the augmentation-adic filtration");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            std::optional<std::size_t> d = jdeg(as_normal_form(st->element.load()));
            finish(degree_text(d), json{{"jdeg", degree_to_json(d)}});
        });
    }
    {
        auto* sub = app.add_subcommand("cjdeg", "adic degree on the ordinary-convolution side");
        add_element_options(sub, st->element);
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            std::optional<std::size_t> d = cauchy_jdeg(as_recurrence(st->element.load()));
            finish(degree_text(d), json{{"cjdeg", degree_to_json(d)}});
        });
    }

    // witness: the separation table
    {
        auto* sub = app.add_subcommand(
            "witness", "degree table of the witness family separating the two filtrations");
        sub->add_option("--max-n", st->max_n, "last row")->required();
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            if (st->max_n < 1) throw usage_error("--max-n must be at least 1");
            std::vector<DegreeReport> rows = witness_table(st->max_n);
            std::ostringstream text;
            text << std::setw(3) << "n" << std::setw(6) << "ideg" << std::setw(6) << "jdeg";
            json payload = json::array();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                text << "\n"
                     << std::setw(3) << i + 1 << std::setw(6) << degree_text(rows[i].ideg)
                     << std::setw(6) << degree_text(rows[i].jdeg);
                payload.push_back(json{{"n", i + 1},
                                       {"ideg", degree_to_json(rows[i].ideg)},
                                       {"jdeg", degree_to_json(rows[i].jdeg)}});
            }
            finish(text.str(), std::move(payload));
        });
    }

    // demo-zeta: minimal orders of factorial-reciprocal prefixes
    {
        auto* sub = app.add_subcommand(
            "demo-zeta", "minimal recurrence order of (1/n!) prefixes of growing length");
        sub->add_option("--max-terms", st->max_terms, "last prefix length (default 16)");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            if (st->max_terms < 8) throw usage_error("--max-terms must be at least 8");
            TermVector ones(st->max_terms, GaussianRational(1));
            TermVector scaled = zeta(ones);
            std::ostringstream text;
            text << std::setw(6) << "length" << std::setw(7) << "order";
            json payload = json::array();
            for (std::size_t len = 4; len <= st->max_terms; len += 4) {
                TermVector prefix(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(len));
                std::size_t order = berlekamp_massey(prefix).order();
                text << "\n" << std::setw(6) << len << std::setw(7) << order;
                payload.push_back(json{{"length", len}, {"order", order}});
            }
            finish(text.str(), std::move(payload));
        });
    }

    // hopf-check: axiom suite on random elements
    {
        auto* sub = app.add_subcommand("hopf-check", "verify the Hopf axioms on random elements");
        sub->add_option("--count", st->checks, "number of random elements (default 50)");
        sub->add_option("--seed", st->seed, "generator seed (default 1)");
        sub->add_option("--max-degree", st->max_degree,
                        "monomial bound for the duality check (default 12)");
        sub->add_flag("--json", st->json_out, "emit JSON");
        sub->callback([st, finish] {
            InstanceGen gen(st->seed);
            std::size_t failures = 0;
            for (std::size_t i = 0; i < st->checks; ++i) {
                NormalForm f = gen.normal_form(5, 4);
                if (!check_coassociativity(f) || !check_counit_law(f) ||
                    !check_antipode_law(f) || !check_eval_duality(f, st->max_degree))
                    ++failures;
            }
            std::string verdict = failures == 0 ? "ok" : "FAILED";
            finish("checked " + std::to_string(st->checks) + " elements (seed " +
                       std::to_string(st->seed) + "): coassociativity, counit law, antipode law, "
                       "evaluation duality up to total degree " +
                       std::to_string(st->max_degree) + ": " + verdict,
                   json{{"elements", st->checks},
                        {"seed", st->seed},
                        {"max_degree", st->max_degree},
                        {"failures", failures}});
            if (failures > 0) throw verification_failure("Hopf axiom check failed");
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.text = std::string("usage error: ") + e.what();
        result.exit_code = 2;
        return result;
    } catch (const usage_error& e) {
        result.text = std::string("usage error: ") + e.what();
        result.exit_code = 2;
        return result;
    } catch (const parse_error& e) {
        result.text = std::string("parse error: ") + e.what();
        result.exit_code = 3;
        return result;
    } catch (const error& e) {
        result.text = std::string("error: ") + e.what();
        result.exit_code = 4;
        return result;
    }

    if (st->json_out) result.text = result.payload.dump(2);
    return result;
}

/// Entry point used by the binary: prints the text (or JSON) and returns the
/// exit code. Errors go to stderr.
inline int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandResult result = run(std::move(args));
    if (result.exit_code == 0) {
        std::printf("%s\n", result.text.c_str());
    } else {
        std::fprintf(stderr, "%s\n", result.text.c_str());
    }
    return result.exit_code;
}

} // namespace linrec
