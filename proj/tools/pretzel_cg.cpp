#include "pk/acceptance.hpp"
#include "pk/errors.hpp"
#include "pk/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace pk;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;
constexpr long kScanCap = 60;

std::vector<long> split_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(v);
    }
    return out;
}

// Reads the character given on the command line into the Montesinos model.
Character montesinos_character(const PretzelKnot& k, long d, const std::vector<long>& v, int& pivot) {
    const SurgeryPresentation pres = montesinos_presentation(k);
    pivot = -1;
    if (v.size() == 4) {
        Character c = make_character(d, v);
        if (!is_valid_character(pres, c)) throw InvalidCharacter("images do not define a character");
        return c;
    }
    if (v.size() == 3) {
        for (long e = 0; e < d; ++e) {
            Character c = make_character(d, {e, v[0], v[1], v[2]});
            if (is_valid_character(pres, c)) return c;
        }
        throw InvalidCharacter("no central image makes (a,b,c) a character");
    }
    if (v.size() == 2) {
        pivot = classify(k) == KnotClass::Odd ? 2 : 0;
        if (classify(k) == KnotClass::Even) {
            const auto p = k.params();
            for (int i = 0; i < 3; ++i)
                if (p[i] % 2 == 0) pivot = i;
        }
        return montesinos_from_reduced(k, pivot, make_character(d, v));
    }
    throw InvalidCharacter("--chi takes 2, 3 or 4 values");
}

int cmd_analyze(long p, long q, long r, bool json, const AnalyzeOptions& opt) {
    const AnalyzeReport rep = build_report({p, q, r}, opt);
    if (json)
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << format_text(rep);
    return kExitOk;
}

int cmd_sigma(long p, long q, long r, long d, const std::string& chi_text, long kk, const std::string& route) {
    const PretzelKnot k{p, q, r};
    if (classify(k) == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    if (d < 2) throw InvalidCharacter("--d must be at least 2");
    if (kk < 1 || kk >= d) throw InvalidCharacter("--k must lie in [1, d-1]");
    int pivot = -1;
    const Character chi = montesinos_character(k, d, split_longs(chi_text), pivot);
    SigmaValue v;
    if (route == "auto") {
        auto s = evaluate_sigma(k, chi, kk);
        if (!s) throw CaseMismatch("no route covers this character");
        v = *s;
    } else if (route == "satellite") {
        SigmaOptions so;
        if (pivot >= 0) so.pivot = pivot;
        v = sigma_satellite(k, chi, kk, so);
    } else if (route == "colored") {
        v = pivot >= 0 ? sigma_colored_reduced(k, pivot, chi, kk) : sigma_colored(k, chi, kk);
    } else if (route == "closed-form") {
        v = sigma_closed_form(k, chi, kk);
    } else {
        if (kk != 1) throw CaseMismatch("the f-form gives sigma_1 only");
        v = sigma_fchi(k, chi);
    }
    std::cout << format_rational(v.value) << "\nroute: " << to_string(v.route) << "\nchi: (" << to_string(chi)
              << ")\n";
    return kExitOk;
}

int cmd_scan(const std::string& parity, long max, const std::string& out, int jobs, const AnalyzeOptions& opt) {
    if (max < 1 || max > kScanCap) {
        std::cerr << "error: --max must lie in [1, " << kScanCap << "]\n";
        return kExitInput;
    }
    const KnotClass cls = parity == "odd" ? KnotClass::Odd : KnotClass::Even;
    const auto records = scan_parallel(enumerate_normal_forms(cls, max), opt, jobs);
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << out << "\n";
            return kExitIo;
        }
    }
    std::ostream& os = out.empty() ? std::cout : file;
    os << csv_header() << "\n";
    std::map<std::string, std::size_t> hist;
    for (const auto& rec : records) {
        os << format_csv(csv_row(rec)) << "\n";
        hist[to_string(rec.verdict.status)]++;
    }
    os.flush();
    if (!os) {
        std::cerr << "error: write failed\n";
        return kExitIo;
    }
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    summary << records.size() << " knots:";
    for (const auto& [s, n] : hist) summary << " " << s << "=" << n;
    summary << "\n";
    return kExitOk;
}

int cmd_fixtures(const FixtureOptions& opt, std::string scratch) {
    if (scratch.empty()) {
        const char* env = std::getenv("PK_SCRATCH_DIR");
        scratch = env ? env : std::filesystem::temp_directory_path().string();
    }
    const std::filesystem::path log_path = std::filesystem::path(scratch) / "pretzel_cg_fixtures.log";
    std::ofstream log(log_path);
    if (!log) {
        std::cerr << "error: cannot write to scratch directory " << scratch << "\n";
        return kExitIo;
    }
    std::optional<CriterionResult> first_fail;
    run_acceptance(opt, [&](const CriterionResult& r) {
        const std::string line = format_result(r);
        std::cout << line << std::endl;
        log << line << "\n";
        if (!r.pass && !first_fail) first_fail = r;
    });
    if (first_fail) {
        std::cout << "first failing fixture: criterion " << first_fail->id << " (" << first_fail->name << ")\n";
        return kExitFail;
    }
    std::cout << "all fixtures pass\n";
    return kExitOk;
}

int cmd_character_table(long p, long q, long r, long d) {
    const PretzelKnot k{p, q, r};
    if (classify(k) == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    if (d < 2) throw InvalidCharacter("--d must be at least 2");
    const SurgeryPresentation pres = montesinos_presentation(k);
    const FiniteAbelianGroup g = homology(pres);
    const LinkingForm lf = linking_form(pres);
    std::vector<Metabolizer> metas;
    if (is_prime(d) && g.order() % d == 0) metas = primary_metabolizers(g, lf, d);
    std::cout << "chi(eps,a,b,c)  order  dim  vanishes_on  sigma_k\n";
    for (const auto& chi : characters(pres, d)) {
        if (chi.trivial()) continue;
        std::cout << "(" << to_string(chi) << ")  " << order_of(chi) << "  ";
        try {
            std::cout << cover_h1_dim(k, chi);
        } catch (const CaseMismatch&) {
            std::cout << "?";
        }
        std::cout << "  ";
        std::string vanish;
        for (std::size_t i = 0; i < metas.size(); ++i)
            if (vanishes_on(g, chi, metas[i])) vanish += (vanish.empty() ? "" : ",") + std::to_string(i);
        std::cout << (vanish.empty() ? "-" : vanish) << "  ";
        for (long kk = 1; kk < chi.modulus; ++kk) {
            auto s = evaluate_sigma(k, chi, kk);
            std::cout << (kk > 1 ? " " : "") << (s ? format_rational(s->value) : "?");
        }
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casson-Gordon signature obstructions for 3-strand pretzel knots"};
    app.require_subcommand(1);
    long max_prime_power = 9;
    app.add_option("--max-prime-power", max_prime_power, "Largest character order attempted")->default_val(9);

    long p = 0, q = 0, r = 0;
    auto add_knot = [&](CLI::App* sub) {
        sub->add_option("p", p)->required()->allow_extra_args(false);
        sub->add_option("q", q)->required();
        sub->add_option("r", r)->required();
    };

    auto* analyze = app.add_subcommand("analyze", "Run the obstruction pipeline on P(p,q,r)");
    add_knot(analyze);
    bool json = false;
    analyze->add_flag("--json", json, "Print the JSON report");

    auto* sigma = app.add_subcommand("sigma", "Evaluate a Casson-Gordon signature");
    add_knot(sigma);
    long d = 0, kk = 1;
    std::string chi, route = "auto";
    sigma->add_option("--d", d, "Character order")->required();
    sigma->add_option("--chi", chi, "Images: 2 (two-component model), 3 (a,b,c) or 4 (eps,a,b,c)")->required();
    sigma->add_option("--k", kk, "Root index")->default_val(1);
    sigma->add_option("--route", route)
        ->check(CLI::IsMember({"auto", "satellite", "colored", "closed-form", "f-form"}))
        ->default_val("auto");

    auto* scan = app.add_subcommand("scan", "Analyze every normal form up to a parameter bound");
    std::string parity = "odd", out;
    long max = 15;
    int jobs = 0;
    scan->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even"}))->default_val("odd");
    scan->add_option("--max", max, "Bound on |p|, |q|, |r|")->default_val(15);
    scan->add_option("--out", out, "CSV output file (default stdout)");
    scan->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->default_val(0);

    auto* fixtures = app.add_subcommand("fixtures", "Run the acceptance criteria");
    FixtureOptions fopt;
    std::string scratch;
    fixtures->add_option("--litherland-offset", fopt.litherland_offset, "Mutation: perturb the torus-signature formula")
        ->default_val(0);
    fixtures->add_option("--scratch-dir", scratch, "Directory for the fixture log");
    fixtures->add_option("--jobs", fopt.jobs)->default_val(0);
    fixtures->add_option("--criteria", fopt.only, "Run only these criterion ids")->delimiter(',')->check(CLI::Range(1, 10));

    auto* table = app.add_subcommand("character-table", "List characters, bounds and signatures");
    add_knot(table);
    long table_d = 0;
    table->add_option("--d", table_d, "Character order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    AnalyzeOptions opt;
    opt.max_prime_power = max_prime_power;
    try {
        if (*analyze) return cmd_analyze(p, q, r, json, opt);
        if (*sigma) return cmd_sigma(p, q, r, d, chi, kk, route);
        if (*scan) return cmd_scan(parity, max, out, jobs, opt);
        if (*fixtures) return cmd_fixtures(fopt, scratch);
        if (*table) return cmd_character_table(p, q, r, table_d);
    } catch (const InvalidKnot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidCharacter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SignUndecidable& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const RouteDisagreement& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        // Route preconditions (unit images, case hypotheses, caps) are input problems.
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitFail;
}
