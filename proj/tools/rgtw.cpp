// rgtw: partial-twuality polynomials of ribbon graphs from the command line.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rgt/catalog.hpp"
#include "rgt/edit.hpp"
#include "rgt/enumerate.hpp"
#include "rgt/io.hpp"
#include "rgt/recursions.hpp"
#include "rgt/reproduce.hpp"
#include "rgt/twuality.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;
constexpr int kExitCap = 5;

rgt::RibbonGraph load_graph(const std::string& file, const std::string& catalog,
                            std::optional<int> n) {
    if (!file.empty() && !catalog.empty())
        throw rgt::ArgumentError("give either a file or --catalog, not both");
    if (!catalog.empty()) return rgt::build_catalog(catalog, n);
    if (file.empty()) throw rgt::ArgumentError("no input graph: give a file or --catalog");
    std::ifstream in(file);
    if (!in) throw rgt::ParseError("cannot open '" + file + "'", 0, 0);
    std::ostringstream text;
    text << in.rdbuf();
    return rgt::parse_rg(text.str());
}

void print_analysis(const rgt::GenusPolynomial& p) {
    std::cout << p.to_string() << "\n";
    std::cout << "support: {";
    bool first = true;
    for (unsigned e : p.support()) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << e;
    }
    std::cout << "}\n";
    const bool even = p.is_even_polynomial();
    const bool odd = p.is_odd_polynomial();
    std::cout << "parity: " << (p.is_zero() ? "zero" : even ? "even" : odd ? "odd" : "neither")
              << "\n";
    if (p.is_zero()) {
        std::cout << "interpolating: undefined\n";
        std::cout << "even-interpolating: undefined\n";
    } else {
        std::cout << "interpolating: " << (p.is_interpolating() ? "yes" : "no") << "\n";
        std::cout << "even-interpolating: "
                  << (p.is_even_interpolating() ? "yes" : "no") << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"partial-dual and partial-Petrial Euler-genus polynomials"};
    app.require_subcommand(1);

    rgt::EnumerateOptions opts;

    // compute
    auto* compute = app.add_subcommand("compute", "enumerate a polynomial of one graph");
    std::string poly_kind, in_file, cat_key;
    std::optional<int> cat_n;
    compute->add_option("--poly", poly_kind,
                        "star | petrial | petrial-orientable | word:<w>")
        ->required();
    compute->add_option("file", in_file, "input .rg file");
    compute->add_option("--catalog", cat_key, "catalog key instead of a file");
    compute->add_option("--n", cat_n, "catalog size parameter");
    compute->add_option("--threads", opts.threads, "enumeration worker count");
    compute->add_option("--cap", opts.cap, "subset cap as log2");
    compute->add_flag("--override-cap", opts.override_cap, "allow enumerations over the cap");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "build a named graph");
    std::string name, emit;
    std::optional<int> nparam;
    catalog->add_option("--name", name, "catalog key")->required();
    catalog->add_option("--n", nparam, "size parameter");
    catalog->add_option("--emit", emit, "write the .rg file here");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized identity checks");
    std::string identity;
    unsigned trials = 100, max_edges = 10;
    std::uint64_t seed = 1;
    verify->add_option("--identity", identity, "eq1 eq2 eq3 eq4 eq5 eq7 join lemma41 lemma42 remark21 remark42")
        ->required();
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--max-edges", max_edges, "edge bound for random graphs");
    verify->add_option("--threads", opts.threads, "enumeration worker count");

    // bound
    auto* bound = app.add_subcommand("bound", "face statistics and the parallel-edge threshold");
    std::string bfile, bedge, bcat;
    std::optional<int> bn;
    std::optional<unsigned> search_n;
    bound->add_option("--file", bfile, "input .rg file");
    bound->add_option("--catalog", bcat, "catalog key instead of a file");
    bound->add_option("--n", bn, "catalog size parameter");
    bound->add_option("--edge", bedge, "distinguished edge name")->required();
    bound->add_option("--search", search_n, "also search the minimal failing n up to this");
    bound->add_option("--threads", opts.threads, "enumeration worker count");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "rerun the published-value suite");
    bool all = false;
    reproduce->add_flag("--all", all, "run every criterion");
    reproduce->add_option("--threads", opts.threads, "enumeration worker count");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        const rgt::RibbonGraph g = load_graph(in_file, cat_key, cat_n);
        rgt::GenusPolynomial p;
        if (poly_kind == "star") {
            p = rgt::partial_star_polynomial(g, opts);
        } else if (poly_kind == "petrial") {
            p = rgt::partial_petrial_polynomial(g, opts);
        } else if (poly_kind == "petrial-orientable") {
            p = rgt::restricted_orientable_petrial_polynomial(g, opts);
        } else if (poly_kind.rfind("word:", 0) == 0) {
            p = rgt::enumerate_euler_spectrum(
                g, rgt::TwualityWord::parse(poly_kind.substr(5)), opts);
        } else {
            throw rgt::ArgumentError("unknown --poly kind '" + poly_kind + "'");
        }
        print_analysis(p);
        return 0;
    }

    if (catalog->parsed()) {
        const rgt::RibbonGraph g = rgt::build_catalog(name, nparam);
        std::cout << name << ": v=" << g.vertex_count() << " e=" << g.edge_count()
                  << " f=" << rgt::face_count(g) << " eu=" << rgt::euler_genus(g)
                  << " orientable=" << (rgt::is_orientable(g) ? "yes" : "no")
                  << "\n";
        const std::string text = rgt::render_rg(g);
        if (emit.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(emit);
            if (!out) throw rgt::ArgumentError("cannot write '" + emit + "'");
            out << text;
        }
        return 0;
    }

    if (verify->parsed()) {
        const auto reports = rgt::verify_identity(identity, trials, seed, max_edges, opts);
        bool hard_failure = false;
        for (const auto& r : reports) {
            const char* status = r.pass ? "PASS" : r.advisory ? "FLAG" : "FAIL";
            if (!r.pass && !r.advisory) hard_failure = true;
            std::cout << r.identity << "\t" << r.descriptor << "\t" << status
                      << "\tlhs=" << r.lhs.to_string() << "\trhs=" << r.rhs.to_string()
                      << "\n";
        }
        std::cerr << reports.size() << " checks";
        if (hard_failure) std::cerr << ", hard failures present";
        std::cerr << "\n";
        return hard_failure ? kExitVerification : 0;
    }

    if (bound->parsed()) {
        const rgt::RibbonGraph g = load_graph(bfile, bcat, bn);
        const std::size_t e = g.edge_by_name(bedge);
        const rgt::FaceStats st = rgt::face_stats(g, e, opts);
        std::cout << "f0_max: " << st.f0_max << "\n";
        std::cout << "f1_min: " << st.f1_min << "\n";
        std::cout << "eu0_min: " << st.eu0_min << "\n";
        std::cout << "eu1_max: " << st.eu1_max << "\n";
        std::cout << "tm_bound: " << rgt::tm_bound(g, e, opts) << "\n";
        if (search_n) {
            const auto n = rgt::min_n_not_even_interpolating(g, e, *search_n, opts);
            if (n)
                std::cout << "minimal_n: " << *n << "\n";
            else
                std::cout << "minimal_n: none up to " << *search_n << "\n";
        }
        return 0;
    }

    if (reproduce->parsed()) {
        if (!all)
            throw rgt::ArgumentError("reproduce needs --all");
        const auto rows = rgt::run_acceptance_criteria(opts.threads);
        bool bad = false;
        for (const auto& r : rows) {
            std::cout << (r.id < 10 ? " " : "") << r.id << " "
                      << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
            if (!r.pass) bad = true;
        }
        return bad ? kExitVerification : 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rgt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rgt::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const rgt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
