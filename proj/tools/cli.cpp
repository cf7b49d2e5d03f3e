#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "relcyc/cyclo.hpp"
#include "relcyc/errors.hpp"
#include "relcyc/format.hpp"
#include "relcyc/galois.hpp"
#include "relcyc/parse.hpp"
#include "relcyc/relative.hpp"

namespace relcyc::cli {

namespace {

using nlohmann::json;

json poly_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

json factorization_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [factor, multiplicity] : f.factors)
        factors.push_back(json{{"poly", poly_json(factor)}, {"multiplicity", multiplicity}});
    return json{{"unit", f.unit}, {"content", f.content.get_str()}, {"factors", factors}};
}

std::string error_type(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const NotDivisible*>(&e)) return "NotDivisible";
    if (dynamic_cast<const BadPrime*>(&e)) return "BadPrime";
    if (dynamic_cast<const LiftPreconditionViolated*>(&e)) return "LiftPreconditionViolated";
    if (dynamic_cast<const DefectivePower*>(&e)) return "DefectivePower";
    if (dynamic_cast<const InternalInconsistency*>(&e)) return "InternalInconsistency";
    if (dynamic_cast<const ZeroRoot*>(&e)) return "ZeroRoot";
    if (dynamic_cast<const NotMonic*>(&e)) return "NotMonic";
    if (dynamic_cast<const NotIrreducible*>(&e)) return "NotIrreducible";
    return "Error";
}

std::uint64_t seed_from_env() {
    const char* value = std::getenv("RELCYC_SEED");
    if (value == nullptr || *value == '\0') return 0;
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw CLI::ValidationError("RELCYC_SEED", "must be an unsigned integer");
    }
}

struct Options {
    std::string f_text;
    std::string p_text;
    unsigned long m = 0;
    unsigned long d = 0;
    bool has_d = false;
    unsigned long n = 0;
    unsigned long m_max = 0;
    unsigned long prime_bound = 200;
    bool as_json = false;
    std::uint64_t seed = 0;
};

json base_envelope(const std::string& command, const Options& opt) {
    json flags{{"json", opt.as_json}, {"seed", std::to_string(opt.seed)}};
    return json{{"command", command}, {"input", json::object()}, {"flags", flags}};
}

void emit(std::ostream& out, const json& doc) {
    out << doc.dump(2) << "\n";
}

void run_phi(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    if (opt.has_d && (opt.d == 0 || opt.m % opt.d != 0))
        throw Error("-d must be a divisor of m");
    RelCycSystem sys = relative_factorization(base, opt.m, opt.seed);

    if (opt.as_json) {
        json doc = base_envelope("phi", opt);
        doc["input"]["f"] = poly_json(sys.base);
        doc["input"]["m"] = opt.m;
        if (opt.has_d) doc["input"]["d"] = opt.d;
        json components = json::object();
        for (const auto& [d, component] : sys.components) {
            if (opt.has_d && d != opt.d) continue;
            components[std::to_string(d)] =
                json{{"psi", poly_json(component.psi)},
                     {"irreducible", component.irreducible},
                     {"factorization", factorization_json(component.factorization)}};
        }
        doc["result"] = json{{"F", poly_json(sys.F)},
                             {"pattern_holds", sys.pattern_holds},
                             {"components", components}};
        if (opt.m <= 2) doc["result"]["outside_theorem_hypotheses"] = true;
        emit(out, doc);
        return;
    }

    out << "F_" << opt.m << " = " << sys.F << "\n";
    for (const auto& [d, component] : sys.components) {
        if (opt.has_d && d != opt.d) continue;
        out << "Psi_" << d << " = " << component.psi
            << (component.irreducible ? "  [irreducible]" : "  [reducible]") << "\n";
        if (!component.irreducible)
            for (const auto& [factor, multiplicity] : component.factorization.factors)
                out << "    factor: " << factor << "\n";
    }
    out << "pattern holds: " << (sys.pattern_holds ? "yes" : "no") << "\n";
    if (opt.m <= 2) out << "note: m <= 2 is outside the theorem hypotheses\n";
}

void run_fm(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    IntPoly F = build_F(base, opt.m);
    if (opt.as_json) {
        json doc = base_envelope("fm", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["input"]["m"] = opt.m;
        doc["result"] = json{{"F_m", poly_json(F)}};
        emit(out, doc);
    } else {
        out << F << "\n";
    }
}

void run_minpow(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    IntPoly fm = power_min_poly(base, opt.m);
    if (opt.as_json) {
        json doc = base_envelope("minpow", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["input"]["m"] = opt.m;
        doc["result"] = json{{"f_m", poly_json(fm)}, {"squarefree", is_squarefree(fm)}};
        emit(out, doc);
    } else {
        out << fm << "\n";
        if (!is_squarefree(fm)) out << "note: not squarefree (alpha is defective at this m)\n";
    }
}

void run_factor(const Options& opt, std::ostream& out) {
    IntPoly p = parse_poly(opt.p_text);
    Factorization f = factor_over_Z(p, opt.seed);
    if (opt.as_json) {
        json doc = base_envelope("factor", opt);
        doc["input"]["p"] = poly_json(p);
        doc["result"] = factorization_json(f);
        emit(out, doc);
        return;
    }
    std::ostringstream line;
    bool printed = false;
    if (f.unit < 0) {
        line << "-1";
        printed = true;
    }
    if (f.content != 1) {
        if (printed) line << " * ";
        line << f.content.get_str();
        printed = true;
    }
    for (const auto& [factor, multiplicity] : f.factors) {
        if (printed) line << " * ";
        line << "(" << factor << ")";
        if (multiplicity > 1) line << "^" << multiplicity;
        printed = true;
    }
    if (!printed) line << "1";
    out << line.str() << "\n";
}

void run_uniform(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    UniformReport report = uniform_degree_report(base);
    if (opt.as_json) {
        json doc = base_envelope("uniform", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["result"] = json{{"bad_orders", report.bad_orders},
                             {"uniform_for_all_m", report.uniform_for_all_m}};
        emit(out, doc);
        return;
    }
    if (report.uniform_for_all_m) {
        out << "uniform degree for all m\n";
    } else {
        out << "bad orders:";
        for (unsigned long n : report.bad_orders) out << " " << n;
        out << "\n(alpha^m drops degree exactly when some bad order divides m)\n";
    }
}

void run_shift(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    Int t = find_uniform_shift(base);
    IntPoly shifted = shift(base.poly(), t);
    if (opt.as_json) {
        json doc = base_envelope("shift", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["result"] = json{{"t", t.get_str()}, {"shifted", poly_json(shifted)}};
        emit(out, doc);
    } else {
        out << "t = " << t.get_str() << "\n";
        out << "shifted base: " << shifted << "\n";
    }
}

void run_galois(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    GaloisVerdict verdict = is_galois_heuristic(base.poly(), opt.prime_bound, opt.seed);
    if (opt.as_json) {
        json doc = base_envelope("galois", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["input"]["prime_bound"] = opt.prime_bound;
        if (verdict.likely())
            doc["result"] = json{{"verdict", "LikelyGalois"},
                                 {"primes_tested", verdict.primes_tested}};
        else
            doc["result"] =
                json{{"verdict", "NotGalois"}, {"witness_prime", verdict.witness_prime}};
        emit(out, doc);
        return;
    }
    if (verdict.likely())
        out << "LikelyGalois (" << verdict.primes_tested << " unramified primes <= "
            << opt.prime_bound << " all split with equal degrees)\n";
    else
        out << "NotGalois (witness prime " << verdict.witness_prime << ")\n";
}

void run_survey(const Options& opt, std::ostream& out) {
    BasePoly base(parse_poly(opt.f_text), opt.seed);
    std::vector<SurveyRow> rows = survey(base, opt.m_max, opt.seed);
    if (opt.as_json) {
        json doc = base_envelope("survey", opt);
        doc["input"]["f"] = poly_json(base.poly());
        doc["input"]["m_max"] = opt.m_max;
        json out_rows = json::array();
        for (const SurveyRow& row : rows) {
            json r{{"m", row.m},
                   {"tau", row.tau},
                   {"defective", row.defective},
                   {"disjointness",
                    row.disjointness == Disjointness::Disjoint ? "Disjoint" : "Unknown"}};
            if (!row.defective) {
                r["factor_count"] = row.factor_count;
                r["pattern_holds"] = row.pattern_holds;
            }
            out_rows.push_back(std::move(r));
        }
        doc["result"] = json{{"rows", out_rows}};
        emit(out, doc);
        return;
    }
    out << "   m  tau  factors  pattern  disjointness\n";
    for (const SurveyRow& row : rows) {
        out << std::setw(4) << row.m << std::setw(5) << row.tau;
        if (row.defective) {
            out << "  defective";
        } else {
            out << std::setw(9) << row.factor_count << "  " << std::left << std::setw(7)
                << (row.pattern_holds ? "holds" : "FAILS") << std::right;
        }
        out << "  "
            << (row.disjointness == Disjointness::Disjoint ? "disjoint" : "unknown") << "\n";
    }
}

void run_cyclotomic(const Options& opt, std::ostream& out) {
    IntPoly phi = cyclotomic(opt.n);
    if (opt.as_json) {
        json doc = base_envelope("cyclotomic", opt);
        doc["input"]["n"] = opt.n;
        doc["result"] = json{{"phi_n", poly_json(phi)}};
        emit(out, doc);
    } else {
        out << phi << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"relative cyclotomic polynomial toolkit"};
    app.name("relcyc");
    app.require_subcommand(1);

    Options opt;

    auto add_f = [&](CLI::App* cmd) {
        cmd->add_option("-f,--base", opt.f_text, "base polynomial, e.g. \"x^2 - 2*x - 1\"")
            ->required();
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.as_json, "machine-readable JSON output");
    };

    CLI::App* phi = app.add_subcommand("phi", "relative cyclotomic factors Psi_d for d | m");
    add_f(phi);
    phi->add_option("-m", opt.m, "modulus m >= 1")->required();
    phi->add_option("-d", opt.d, "emit only this divisor of m");
    add_json(phi);

    CLI::App* fm = app.add_subcommand("fm", "F_m = f_m(x^m)");
    add_f(fm);
    fm->add_option("-m", opt.m, "modulus m >= 1")->required();
    add_json(fm);

    CLI::App* minpow = app.add_subcommand("minpow", "f_m, the power minimal polynomial");
    add_f(minpow);
    minpow->add_option("-m", opt.m, "exponent m >= 1")->required();
    add_json(minpow);

    CLI::App* factor = app.add_subcommand("factor", "irreducible factorization over Z");
    factor->add_option("-p,--poly", opt.p_text, "polynomial to factor")->required();
    add_json(factor);

    CLI::App* uniform = app.add_subcommand("uniform", "bad orders of the base polynomial");
    add_f(uniform);
    add_json(uniform);

    CLI::App* shift_cmd = app.add_subcommand("shift", "smallest t making alpha + t uniform");
    add_f(shift_cmd);
    add_json(shift_cmd);

    CLI::App* galois = app.add_subcommand("galois", "Frobenius splitting-pattern heuristic");
    add_f(galois);
    galois->add_option("--prime-bound", opt.prime_bound, "scan primes up to this bound")
        ->default_val(200);
    add_json(galois);

    CLI::App* survey_cmd =
        app.add_subcommand("survey", "factor counts of F_m for every m <= m-max");
    add_f(survey_cmd);
    survey_cmd->add_option("--m-max", opt.m_max, "largest m to survey")->required();
    add_json(survey_cmd);

    CLI::App* cyclo = app.add_subcommand("cyclotomic", "classical cyclotomic polynomial");
    cyclo->add_option("-n", opt.n, "index n >= 1")->required();
    add_json(cyclo);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        opt.seed = seed_from_env();
        opt.has_d = phi->count("-d") > 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string command;
    try {
        if (app.got_subcommand(phi)) command = "phi", run_phi(opt, out);
        else if (app.got_subcommand(fm)) command = "fm", run_fm(opt, out);
        else if (app.got_subcommand(minpow)) command = "minpow", run_minpow(opt, out);
        else if (app.got_subcommand(factor)) command = "factor", run_factor(opt, out);
        else if (app.got_subcommand(uniform)) command = "uniform", run_uniform(opt, out);
        else if (app.got_subcommand(shift_cmd)) command = "shift", run_shift(opt, out);
        else if (app.got_subcommand(galois)) command = "galois", run_galois(opt, out);
        else if (app.got_subcommand(survey_cmd)) command = "survey", run_survey(opt, out);
        else if (app.got_subcommand(cyclo)) command = "cyclotomic", run_cyclotomic(opt, out);
    } catch (const ParseError& e) {
        if (opt.as_json) {
            emit(out, json{{"command", command},
                           {"error", json{{"type", "ParseError"},
                                          {"message", e.what()},
                                          {"position", e.position},
                                          {"expected", e.expected}}}});
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (opt.as_json)
            emit(out, json{{"command", command},
                           {"error", json{{"type", error_type(e)}, {"message", e.what()}}}});
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace relcyc::cli
