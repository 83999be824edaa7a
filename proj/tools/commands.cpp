#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncsurf/classify.hpp"
#include "ncsurf/eulerform.hpp"
#include "ncsurf/geometry.hpp"
#include "ncsurf/io.hpp"
#include "ncsurf/mutation.hpp"
#include "ncsurf/ncalgebra.hpp"
#include "ncsurf/rng.hpp"

#ifndef NCSURF_VERSION
#define NCSURF_VERSION "0.0.0"
#endif

namespace ncsurf::cli {

namespace {

struct MatrixSource {
    std::string file;
    std::string named;

    bool given() const { return !file.empty() || !named.empty(); }

    GramMatrix load() const
    {
        if (!named.empty() && !file.empty()) {
            throw io::InputError("give either a matrix file or --named, not both");
        }
        if (!named.empty()) {
            return io::named_matrix(named);
        }
        if (file.empty()) {
            throw io::InputError("no matrix given (file argument or --named)");
        }
        if (file == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return io::to_gram(io::parse_matrix_document(buf.str()));
        }
        return io::to_gram(io::read_matrix_file(file));
    }
};

void print_matrix(std::ostream& out, const IntMatrix& m, const std::string& format,
                  const std::optional<std::string>& name = std::nullopt)
{
    out << (format == "structured" ? io::format_structured(m, name) : io::format_text(m));
}

SearchParams search_params(long cap, std::size_t max_states, std::size_t max_word)
{
    SearchParams p;
    p.entry_cap_orbit = cap;
    p.max_orbit_size = max_states;
    p.max_word_length = max_word;
    p.validate();
    return p;
}

void add_search_options(CLI::App* cmd, long& cap, std::size_t& max_states, std::size_t& max_word)
{
    cmd->add_option("--cap", cap, "Largest |entry| allowed while exploring an orbit")->capture_default_str();
    cmd->add_option("--max-states", max_states, "Orbit state budget")->capture_default_str();
    cmd->add_option("--max-word", max_word, "Longest witness word")->capture_default_str();
}

const std::vector<std::string> format_choices{"text", "structured"};

// Golden values for `self-test`.
std::vector<std::pair<std::string, bool>> golden_suite()
{
    std::vector<std::pair<std::string, bool>> results;
    auto record = [&](std::string name, const std::function<bool()>& check) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception&) {
            ok = false;
        }
        results.emplace_back(std::move(name), ok);
    };

    record("coxeter matrix of P2", [] {
        return coxeter(gram_p2()) == IntMatrix{{-10, -6, -3}, {15, 8, 3}, {-6, -3, -1}};
    });
    record("surface-type axioms for (A), B_m, B'_m (m = 0..20)", [] {
        bool ok = check_surface_type(gram_quadric()).passes_surface_type;
        for (long m = 0; m <= 20; ++m) {
            ok = ok && check_surface_type(gram_family(m)).passes_surface_type &&
                 check_surface_type(gram_family_blowup(m)).passes_surface_type;
        }
        return ok && !check_surface_type(GramMatrix::identity(4)).passes_surface_type;
    });
    record("e1 e3 s3 s1 s2 s3 sends B'_m to B_m (m = 0..10)", [] {
        bool ok = true;
        for (long m = 0; m <= 10; ++m) {
            ok = ok && apply_word(gram_family_blowup(m), parse_word("e1 e3 s3 s1 s2 s3", 4)) == gram_family(m);
        }
        return ok;
    });
    record("fat point multiplicities n = 1..12", [] {
        const std::vector<std::uint64_t> expected{1, 2, 1, 4, 5, 2, 7, 8, 3, 10, 11, 4};
        for (std::uint64_t n = 1; n <= 12; ++n) {
            if (fat_point_multiplicity({n}) != expected[n - 1]) {
                return false;
            }
        }
        return true;
    });
    record("graded dimensions of k[x,y,z] and sklyanin(1,2,3)", [] {
        const std::vector<std::size_t> poly{1, 3, 6, 10, 15, 21};
        const std::vector<std::size_t> skl{1, 3, 6, 10, 15};
        return graded_dims(QuadraticPresentation::polynomial_ring(3), 5) == poly &&
               graded_dims(sklyanin(1, 2, 3), 4) == skl;
    });
    record("del Pezzo only for m = 2 among m >= 2; half-ruled m = 2, elliptic m = 3", [] {
        bool ok = true;
        for (std::uint64_t m = 2; m <= 50; ++m) {
            ok = ok && is_del_pezzo(OrderSpec::cubic_pullback(m)).del_pezzo == (m == 2);
        }
        return ok && generic_fiber_type(OrderSpec::cubic_pullback(2)).type == FiberType::half_ruled &&
               generic_fiber_type(OrderSpec::cubic_pullback(3)).type == FiberType::elliptic;
    });
    return results;
}

std::string join_dims(const std::vector<std::size_t>& dims)
{
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        s += (i > 0 ? "," : "") + std::to_string(dims[i]);
    }
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Euler-form computations for (noncommutative) surfaces", "ncsurf"};
    app.set_version_flag("--version", std::string(NCSURF_VERSION));
    app.require_subcommand(1);

    // check
    MatrixSource check_src;
    std::size_t check_rank = 2;
    auto* check = app.add_subcommand("check", "Check the surface-type axioms of a Gram matrix");
    check->add_option("file", check_src.file, "Matrix file (text or structured; - for stdin)");
    check->add_option("--named", check_src.named, "Named matrix: P2, A, B:m, Bp:m");
    check->add_option("--rank", check_rank, "Required rank of s - id")->capture_default_str();

    // mutate
    std::vector<std::string> mutate_args;
    std::string mutate_named;
    bool mutate_trace = false;
    std::string mutate_format = "text";
    auto* mutate = app.add_subcommand("mutate", "Apply a signed braid word (rightmost generator first)");
    mutate->add_option("args", mutate_args, "[matrix-file] word, e.g. \"e1 e3 s3 s1 s2 s3\"")->allow_extra_args();
    mutate->add_option("--named", mutate_named, "Named matrix instead of a file");
    mutate->add_flag("--trace", mutate_trace, "Print every intermediate matrix");
    mutate->add_option("--format", mutate_format)->check(CLI::IsMember(format_choices))->capture_default_str();

    // classify
    std::size_t classify_n = 4;
    long classify_bound = 8;
    long classify_cap = SearchParams{}.entry_cap_orbit;
    std::size_t classify_states = SearchParams{}.max_orbit_size;
    std::size_t classify_word = SearchParams{}.max_word_length;
    double classify_max_candidates = 1e9;
    std::string classify_format = "text";
    auto* classify = app.add_subcommand("classify", "Enumerate and classify surface-type Gram matrices");
    classify->add_option("--n", classify_n, "Rank")->capture_default_str();
    classify->add_option("--bound", classify_bound, "Max |entry| during enumeration")->capture_default_str();
    classify->add_option("--max-candidates", classify_max_candidates, "Enumeration budget")->capture_default_str();
    classify->add_option("--format", classify_format)->check(CLI::IsMember(format_choices))->capture_default_str();
    add_search_options(classify, classify_cap, classify_states, classify_word);

    // orbit
    MatrixSource orbit_src;
    MatrixSource orbit_to;
    long orbit_cap = SearchParams{}.entry_cap_orbit;
    std::size_t orbit_states = SearchParams{}.max_orbit_size;
    std::size_t orbit_word = SearchParams{}.max_word_length;
    std::string orbit_format = "text";
    auto* orbit = app.add_subcommand("orbit", "Canonical form of a Gram matrix, or an equivalence test");
    orbit->add_option("file", orbit_src.file, "Matrix file");
    orbit->add_option("--named", orbit_src.named, "Named matrix");
    orbit->add_option("--to", orbit_to.file, "Second matrix file: test equivalence");
    orbit->add_option("--to-named", orbit_to.named, "Second named matrix: test equivalence");
    orbit->add_option("--format", orbit_format)->check(CLI::IsMember(format_choices))->capture_default_str();
    add_search_options(orbit, orbit_cap, orbit_states, orbit_word);

    // relations
    std::size_t rel_n = 4;
    std::size_t rel_trials = 1000;
    long rel_bound = 9;
    std::uint64_t rel_seed = default_seed;
    auto* relations = app.add_subcommand("relations", "Verify the signed braid relations on random matrices");
    relations->add_option("--n", rel_n)->capture_default_str();
    relations->add_option("--trials", rel_trials)->capture_default_str();
    relations->add_option("--bound", rel_bound)->capture_default_str();
    relations->add_option("--seed", rel_seed)->capture_default_str();

    // geometry
    std::uint64_t geo_degree = 2;
    std::string geo_ram_h;
    std::string geo_ram_e;
    std::uint64_t geo_index = 0;
    auto* geometry = app.add_subcommand("geometry", "Canonical divisor, Kleiman check and fibre type of an order on F1");
    geometry->add_option("--degree", geo_degree, "Degree m of the order")->required();
    geometry->add_option("--ram-h", geo_ram_h, "H-coefficient of the ramification class (default 3)");
    geometry->add_option("--ram-e", geo_ram_e, "E-coefficient of the ramification class (default 0)");
    geometry->add_option("--index", geo_index, "Ramification index (default m)");

    // hilbert
    std::string hil_file;
    std::string hil_sklyanin;
    std::size_t hil_commutative = 0;
    std::size_t hil_degree = 4;
    std::string hil_mode = "rational";
    auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of a quadratic algebra");
    hilbert->add_option("file", hil_file, "Presentation document (JSON)");
    hilbert->add_option("--sklyanin", hil_sklyanin, "Sklyanin parameters a,b,c");
    hilbert->add_option("--commutative", hil_commutative, "Polynomial ring in this many variables");
    hilbert->add_option("--max-degree", hil_degree)->capture_default_str();
    hilbert->add_option("--mode", hil_mode)
        ->check(CLI::IsMember({"rational", "modular", "both"}))
        ->capture_default_str();

    // gram
    std::string gram_named;
    std::uint64_t gram_extended = 0;
    std::string gram_format = "text";
    auto* gram = app.add_subcommand("gram", "Print a named Gram matrix");
    gram->add_option("--named", gram_named, "P2, A, B:m, Bp:m");
    gram->add_option("--extended", gram_extended, "Build B'_s from dimension counts for multiplicity s");
    gram->add_option("--format", gram_format)->check(CLI::IsMember(format_choices))->capture_default_str();

    auto* self_test = app.add_subcommand("self-test", "Run the golden matrix suite");

    std::vector<std::string> argv_storage{"ncsurf"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*check) {
            const GramMatrix m = check_src.load();
            const SerreReport r = check_surface_type(m, check_rank);
            out << r;
            return r.passes_surface_type ? exit_ok : exit_failed;
        }

        if (*mutate) {
            MatrixSource src;
            std::string word_text;
            if (!mutate_named.empty()) {
                if (mutate_args.size() > 1) {
                    throw io::InputError("with --named, give only the word");
                }
                src.named = mutate_named;
                word_text = mutate_args.empty() ? "" : mutate_args[0];
            } else {
                if (mutate_args.empty() || mutate_args.size() > 2) {
                    throw io::InputError("usage: mutate <matrix-file> <word>  or  mutate --named N <word>");
                }
                src.file = mutate_args[0];
                word_text = mutate_args.size() == 2 ? mutate_args[1] : "";
            }
            const GramMatrix m = src.load();
            const BraidWord w = parse_word(word_text, m.rank());
            if (mutate_trace) {
                const auto steps = trace_word(m, w);
                nlohmann::json transcript = nlohmann::json::array();
                for (std::size_t k = 0; k < steps.size(); ++k) {
                    BraidWord suffix{w.rank, {w.generators.end() - static_cast<std::ptrdiff_t>(k + 1),
                                              w.generators.end()}};
                    if (mutate_format == "structured") {
                        transcript.push_back({{"word", suffix.str()}, {"matrix", io::to_json(steps[k].matrix())}});
                    } else {
                        out << "# " << suffix.str() << '\n' << io::format_text(steps[k].matrix());
                    }
                }
                if (mutate_format == "structured") {
                    out << transcript.dump() << '\n';
                    return exit_ok;
                }
                out << "# result\n";
            }
            print_matrix(out, apply_word(m, w).matrix(), mutate_format);
            return exit_ok;
        }

        if (*classify) {
            if (classify_bound < 0) {
                throw io::InputError("--bound must be nonnegative");
            }
            const double candidates =
                std::pow(2.0 * static_cast<double>(classify_bound) + 1.0,
                         static_cast<double>(classify_n * (classify_n - 1) / 2));
            if (candidates > classify_max_candidates) {
                err << "enumeration of " << candidates << " candidates exceeds --max-candidates\n";
                return exit_budget;
            }
            const auto report = classify_solutions(classify_n, classify_bound,
                                                   search_params(classify_cap, classify_states, classify_word));
            if (classify_format == "structured") {
                out << io::to_json(report).dump(1) << '\n';
            } else {
                out << report;
            }
            return exit_ok;
        }

        if (*orbit) {
            const SearchParams p = search_params(orbit_cap, orbit_states, orbit_word);
            const GramMatrix m = orbit_src.load();
            if (orbit_to.given()) {
                const GramMatrix target = orbit_to.load();
                const auto res = equivalent(m, target, p);
                out << "verdict: " << to_string(res.verdict) << '\n';
                if (res.witness) {
                    out << "witness: " << res.witness->str() << '\n';
                }
                out << "states explored: " << res.states_explored << '\n';
                switch (res.verdict) {
                case EquivalenceResult::Verdict::equivalent:
                    return exit_ok;
                case EquivalenceResult::Verdict::distinguished_by_invariant:
                    return exit_failed;
                case EquivalenceResult::Verdict::inconclusive:
                    break;
                }
                return exit_budget;
            }
            try {
                const auto cert = canonical_form(m, p);
                if (orbit_format == "structured") {
                    nlohmann::json doc{{"representative", io::to_json(cert.representative.matrix())},
                                       {"witness", cert.witness_word.str()},
                                       {"fingerprint", io::to_json(cert.invariants_fingerprint)},
                                       {"states_explored", cert.states_explored}};
                    out << doc.dump() << '\n';
                } else {
                    out << "representative:\n"
                        << io::format_text(cert.representative.matrix()) << "witness: " << cert.witness_word.str()
                        << '\n'
                        << "fingerprint: " << cert.invariants_fingerprint.str() << '\n'
                        << "states explored: " << cert.states_explored << '\n';
                }
                return exit_ok;
            } catch (const BudgetExhausted& e) {
                err << e.what() << "\nbest so far:\n" << io::format_text(e.best.representative.matrix())
                    << "witness: " << e.best.witness_word.str() << '\n';
                return exit_budget;
            }
        }

        if (*relations) {
            const auto r = verify_braid_relations(rel_n, rel_trials, rel_bound, rel_seed);
            out << "rank " << r.n << ", " << r.trials << " trials, " << r.checks << " relation checks: "
                << (r.passed ? "PASS" : "FAIL") << '\n';
            if (r.first_failure) {
                out << "first failure: trial " << r.first_failure->trial << ", relation "
                    << r.first_failure->relation << '\n'
                    << io::format_text(r.first_failure->input.matrix());
            }
            return r.passed ? exit_ok : exit_failed;
        }

        if (*geometry) {
            OrderSpec spec = OrderSpec::cubic_pullback(geo_degree);
            if (!geo_ram_h.empty() || !geo_ram_e.empty() || geo_index != 0) {
                DivisorF1 ram{geo_ram_h.empty() ? Rational(3) : io::parse_rational(geo_ram_h),
                              geo_ram_e.empty() ? Rational(0) : io::parse_rational(geo_ram_e)};
                spec = OrderSpec(geo_degree, ram, geo_index != 0 ? geo_index : geo_degree);
            }
            const auto k = is_del_pezzo(spec);
            const auto f = generic_fiber_type(spec);
            out << "order of degree " << spec.degree() << ", ramification " << spec.ramification_class()
                << " with index " << spec.ramification_index() << '\n'
                << "K_A = " << k.canonical << '\n'
                << "-K_A . f = " << k.minus_K_dot_fibre << '\n'
                << "-K_A . C0 = " << k.minus_K_dot_section << '\n'
                << "(ampleness needs both strictly positive)\n"
                << "generic fibre: " << f.points << " ramification points, index " << f.index << '\n';
            if (f.type == FiberType::ruled) {
                out << "(ruled is read as 2 points of equal index)\n";
            }
            out << "del Pezzo: " << (k.del_pezzo ? "yes" : "no") << "; type: " << to_string(f.type) << '\n';
            return exit_ok;
        }

        if (*hilbert) {
            const int sources = static_cast<int>(!hil_file.empty()) + static_cast<int>(!hil_sklyanin.empty()) +
                                static_cast<int>(hil_commutative > 0);
            if (sources != 1) {
                throw io::InputError("give exactly one of: presentation file, --sklyanin a,b,c, --commutative g");
            }
            std::optional<QuadraticPresentation> pres;
            if (!hil_sklyanin.empty()) {
                std::vector<Rational> abc;
                std::stringstream ss(hil_sklyanin);
                for (std::string tok; std::getline(ss, tok, ',');) {
                    abc.push_back(io::parse_rational(tok));
                }
                if (abc.size() != 3) {
                    throw io::InputError("--sklyanin expects three comma-separated values");
                }
                pres = sklyanin(abc[0], abc[1], abc[2]);
            } else if (hil_commutative > 0) {
                pres = QuadraticPresentation::polynomial_ring(hil_commutative);
            } else {
                std::ifstream in(hil_file);
                if (!in) {
                    throw io::InputError("cannot open presentation file '" + hil_file + "'");
                }
                std::ostringstream buf;
                buf << in.rdbuf();
                pres = io::parse_presentation(buf.str());
            }
            try {
                if (hil_mode == "both") {
                    const auto q = graded_dims(*pres, hil_degree, RankMode::rational);
                    const auto p = graded_dims(*pres, hil_degree, RankMode::modular);
                    out << join_dims(q) << '\n';
                    if (q != p) {
                        err << "modular screening disagrees: " << join_dims(p) << '\n';
                        return exit_failed;
                    }
                    return exit_ok;
                }
                out << join_dims(graded_dims(*pres, hil_degree,
                                             hil_mode == "modular" ? RankMode::modular : RankMode::rational))
                    << '\n';
                return exit_ok;
            } catch (const ResourceBudgetError& e) {
                err << e.what() << '\n';
                return exit_budget;
            }
        }

        if (*gram) {
            if (gram_named.empty() == (gram_extended == 0)) {
                throw io::InputError("give exactly one of --named or --extended");
            }
            if (gram_extended > 0) {
                print_matrix(out, extended_gram(gram_extended).matrix(), gram_format,
                             "Bp:" + std::to_string(gram_extended));
            } else {
                print_matrix(out, io::named_matrix(gram_named).matrix(), gram_format, gram_named);
            }
            return exit_ok;
        }

        if (*self_test) {
            bool all = true;
            for (const auto& [name, ok] : golden_suite()) {
                out << (ok ? "PASS " : "FAIL ") << name << '\n';
                all = all && ok;
            }
            return all ? exit_ok : exit_failed;
        }
    } catch (const io::InputError& e) {
        err << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const WordParseError& e) {
        err << "word error: " << e.what() << '\n';
        return exit_input;
    } catch (const GeneratorRangeError& e) {
        err << "word error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}

} // namespace ncsurf::cli
