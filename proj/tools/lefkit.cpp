#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lefkit/atlas.hpp"
#include "lefkit/common.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/report.hpp"
#include "lefkit/wordfile.hpp"

namespace {

// command-line misuse distinct from file-format and math errors
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpz_class parse_nonneg(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
    return mpz_class(s);
}

std::pair<mpz_class, mpz_class> parse_sweep(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw usage_error("sweep must look like n1..n2, got '" + s + "'");
    mpz_class lo = parse_nonneg(s.substr(0, dots), "sweep start");
    mpz_class hi = parse_nonneg(s.substr(dots + 2), "sweep end");
    if (hi < lo)
        throw usage_error("sweep range is empty: " + s);
    return {lo, hi};
}

lefkit::PlumbingGraph parse_plumbing(const std::vector<std::string>& vertices,
                                     const std::vector<std::string>& edges) {
    lefkit::PlumbingGraph p;
    for (const std::string& v : vertices) {
        std::size_t colon = v.find(':');
        if (colon == std::string::npos)
            throw lefkit::parse_error("vertex must look like genus:euler, got '" + v + "'");
        try {
            long genus = std::stol(v.substr(0, colon));
            long euler = std::stol(v.substr(colon + 1));
            p.vertices.push_back({genus, euler});
        } catch (const std::exception&) {
            throw lefkit::parse_error("vertex must look like genus:euler, got '" + v + "'");
        }
    }
    for (const std::string& e : edges) {
        std::size_t dash = e.find('-');
        if (dash == std::string::npos)
            throw lefkit::parse_error("edge must look like i-j, got '" + e + "'");
        try {
            unsigned long i = std::stoul(e.substr(0, dash));
            unsigned long j = std::stoul(e.substr(dash + 1));
            p.edges.emplace_back(i, j);
        } catch (const std::exception&) {
            throw lefkit::parse_error("edge must look like i-j, got '" + e + "'");
        }
    }
    return p;
}

void emit(const lefkit::Report& r, bool json) {
    std::cout << (json ? lefkit::to_json(r) : lefkit::to_text(r));
    if (json)
        std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lefkit: exact homology invariants of Lefschetz fibrations.\n"
        "Relator twist words, twisted fiber sums, Stein-filling invariants\n"
        "(h1, chi, sigma) and plumbing-boundary homology, all in exact arithmetic."};
    app.require_subcommand(1);
    app.footer(
        "Homology basis order is (a_1, b_1, a_2, b_2, ..., a_g, b_g) with\n"
        "<a_i, b_i> = +1; explicit classes in word files use that order.\n"
        "Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition violation.");

    // paper: the twisted relator family by (genus, twist power)
    auto* paper = app.add_subcommand(
        "paper", "invariants of the twisted relator family W_g(n) and its filling");
    int paper_genus = 0;
    std::string paper_n, paper_sweep;
    bool paper_json = false;
    paper->add_option("--genus", paper_genus, "fiber genus (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000));
    auto* opt_n = paper->add_option("--twist-power", paper_n, "twist power n (>= 0)");
    auto* opt_sweep =
        paper->add_option("--sweep", paper_sweep, "range of twist powers, e.g. 1..6");
    opt_n->excludes(opt_sweep);
    opt_sweep->excludes(opt_n);
    paper->add_flag("--json", paper_json, "machine-readable output");

    // word: parse a word file and compute its invariants
    auto* word = app.add_subcommand("word", "invariants of a twist word from a file");
    std::string word_file;
    bool word_json = false, word_strict = false;
    word->add_option("file", word_file, "word file path")
        ->required()
        ->check(CLI::ExistingFile);
    word->add_flag("--json", word_json, "machine-readable output");
    word->add_flag("--strict", word_strict, "promote parse warnings to errors");

    // verify: relator check only
    auto* verify = app.add_subcommand(
        "verify", "check whether a word acts as the identity on homology");
    std::string verify_file, verify_n;
    int verify_genus = 0;
    bool verify_json = false, verify_strict = false;
    auto* vfile = verify->add_option("file", verify_file, "word file path")
                      ->check(CLI::ExistingFile);
    auto* vgenus = verify->add_option("--genus", verify_genus,
                                      "use the built-in relator word of this genus (>= 2)")
                       ->check(CLI::Range(2, 1000));
    verify->add_option("--twist-power", verify_n,
                       "with --genus: use the twisted relator W_g(n)");
    verify->add_flag("--json", verify_json, "machine-readable output");
    verify->add_flag("--strict", verify_strict, "promote parse warnings to errors");
    vfile->excludes(vgenus);
    vgenus->excludes(vfile);

    // plumbing: boundary homology of a plumbing graph
    auto* plumbing = app.add_subcommand(
        "plumbing", "first homology of the boundary of a plumbing of disk bundles");
    std::vector<std::string> plumb_vertices, plumb_edges;
    bool plumb_json = false;
    plumbing->add_option("--vertex", plumb_vertices, "vertex as genus:euler (repeatable)")
        ->required();
    plumbing->add_option("--edge", plumb_edges, "edge as i-j, 0-based vertex indices");
    plumbing->add_flag("--json", plumb_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*paper) {
            if (paper_n.empty() && paper_sweep.empty())
                throw usage_error("paper needs --twist-power or --sweep");
            if (!paper_sweep.empty()) {
                auto [lo, hi] = parse_sweep(paper_sweep);
                std::vector<lefkit::Report> rs;
                for (mpz_class n = lo; n <= hi; ++n)
                    rs.push_back(lefkit::report_for_filling(
                        lefkit::filling_report(paper_genus, n)));
                if (paper_json) {
                    std::cout << lefkit::to_json(rs) << "\n";
                } else {
                    for (std::size_t i = 0; i < rs.size(); ++i) {
                        if (i)
                            std::cout << "\n";
                        std::cout << lefkit::to_text(rs[i]);
                    }
                }
            } else {
                mpz_class n = parse_nonneg(paper_n, "--twist-power");
                emit(lefkit::report_for_filling(lefkit::filling_report(paper_genus, n)),
                     paper_json);
            }
        } else if (*word) {
            std::ifstream in(word_file);
            if (!in)
                throw usage_error("cannot open file: " + word_file);
            lefkit::WordFile wf = lefkit::parse_word_file(in, word_strict);
            for (const std::string& w : wf.warnings)
                std::cerr << "warning: " << w << "\n";
            emit(lefkit::report_for_word(wf), word_json);
        } else if (*verify) {
            if (!verify_file.empty()) {
                std::ifstream in(verify_file);
                if (!in)
                    throw usage_error("cannot open file: " + verify_file);
                lefkit::WordFile wf = lefkit::parse_word_file(in, verify_strict);
                for (const std::string& w : wf.warnings)
                    std::cerr << "warning: " << w << "\n";
                emit(lefkit::report_for_verify(wf.word, wf.base), verify_json);
            } else if (verify_genus != 0) {
                lefkit::TwistWord w =
                    verify_n.empty()
                        ? lefkit::korkmaz_word(verify_genus)
                        : lefkit::twisted_relator(verify_genus,
                                                  parse_nonneg(verify_n, "--twist-power"));
                emit(lefkit::report_for_verify(w, std::nullopt), verify_json);
            } else {
                throw usage_error("verify needs a file or --genus");
            }
        } else if (*plumbing) {
            emit(lefkit::report_for_plumbing(parse_plumbing(plumb_vertices, plumb_edges)),
                 plumb_json);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lefkit::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lefkit::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
