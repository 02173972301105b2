// unipcount: counts of unipotent irreducible Brauer characters for reductive
// groups at bad primes, from root-system combinatorics and curated class data.
#include "CLI11.hpp"

#include "census.hpp"
#include "classical.hpp"
#include "lmod.hpp"
#include "sprdata.hpp"
#include "unitri.hpp"

#include <fstream>
#include <iostream>

using namespace unip;

namespace {

int run_census(const std::string& type, int ell, const std::string& datadir,
               const std::string& format, bool fail_on_dispute) {
    auto rep = census::alpha(rootsys::CartanType::parse(type), ell, datadir);
    if (format == "structured") std::cout << census::render_structured(rep);
    else std::cout << census::render_human(rep);
    bool dispute = rep.overall != "match";
    for (const auto& row : rep.rows)
        if (row.verdict == "mismatch" || row.verdict == "disputed") dispute = true;
    if (dispute) return fail_on_dispute ? 1 : 0;
    return 0;
}

int run_good(const std::string& type, const std::string& datadir) {
    auto g = census::unipotent_character_count(rootsys::CartanType::parse(type), datadir);
    std::cout << census::render_human(g);
    return g.match ? 0 : 1;
}

int run_classical(char series, int rank, long long q, bool oracle) {
    auto classes = classical::unipotent_class_data(series, rank);
    std::cout << "unipotent classes of type " << series << rank << " (q=" << q << ")\n";
    for (const auto& c : classes) {
        std::cout << "  [";
        for (size_t i = 0; i < c.lambda.size(); ++i)
            std::cout << (i ? "," : "") << c.lambda[i];
        std::cout << "]";
        if (c.series == 'A') std::cout << " gcd=" << c.gcd_parts;
        else std::cout << " A=(Z2)^" << c.a_rank;
        if (c.very_even) std::cout << " very-even#" << c.copy;
        std::cout << "\n";
    }
    long long count = classical::rational_unipotent_count(series, rank, q);
    std::cout << "rational unipotent classes: " << count << "\n";
    if (oracle) {
        long long bf = classical::brute_force_class_count(series, rank, q);
        std::cout << "brute-force oracle: " << bf << (bf == count ? "  (agrees)" : "  (DISAGREES)")
                  << "\n";
        if (bf != count) return 1;
    }
    return 0;
}

int run_type_a(int n, int ell, long long q, const std::string& form) {
    auto res = classical::alpha_type_a(n, ell, q, form == "unitary");
    std::cout << "type A counts: n=" << n << " ell=" << ell << " q=" << q << " form=" << form
              << "\n";
    for (const auto& row : res.rows) {
        std::cout << "  [";
        for (size_t i = 0; i < row.lambda.size(); ++i)
            std::cout << (i ? "," : "") << row.lambda[i];
        std::cout << "] m=" << row.m_lambda << " alpha=" << row.alpha
                  << " gcd(m,q-1)_l=" << row.formula_minus
                  << " gcd(m,q+1)_l=" << row.formula_plus << "\n";
    }
    std::cout << "total " << res.total << "; formula sign matching the orbit oracle: epsilon="
              << res.matched_sign << "\n";
    return 0;
}

int run_unitri(const std::string& mode, const std::string& file) {
    std::ifstream f(file);
    if (!f) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    auto M = unitri::parse_matrix(text);
    if (mode == "check") {
        std::cout << "unitriangular: " << (unitri::is_lower_unitriangular(M) ? "yes" : "no")
                  << "\n";
        return 0;
    }
    if (mode == "columns") {
        auto r = unitri::column_unitriangularize(M);
        if (r.ok) {
            std::cout << "columns:";
            for (int c : r.sigma) std::cout << " " << c;
            std::cout << "  (" << r.path << ")\n";
            return 0;
        }
        std::cout << "no column permutation works (" << r.path << ")\n";
        return 1;
    }
    if (mode == "certificate") {
        auto r = unitri::basic_set_certificate(M);
        if (r.ok) {
            std::cout << "certificate: yes\nrows:";
            for (int c : r.row_order) std::cout << " " << c;
            std::cout << "\ncols:";
            for (int c : r.col_order) std::cout << " " << c;
            std::cout << "\n";
            return 0;
        }
        std::cout << "certificate: no\n";
        return 1;
    }
    std::cerr << "unknown unitri mode " << mode << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unipotent Brauer character counts in bad characteristic"};
    app.require_subcommand(1);
    std::string datadir;
    app.add_option("--data", datadir, "data directory (default: $UNIPCOUNT_DATA or ./data)");

    auto* cen = app.add_subcommand("census", "per-class alpha_{ell,u} table and total alpha_ell");
    std::string type = "F4", format = "human";
    int ell = 2;
    bool fail_on_dispute = false;
    cen->add_option("--type", type, "exceptional type: G2 F4 E6 E7 E8")->required();
    cen->add_option("--ell", ell, "bad prime")->required();
    cen->add_option("--format", format, "human | structured");
    cen->add_flag("--fail-on-dispute", fail_on_dispute, "exit 1 on any dispute or mismatch");

    auto* good = app.add_subcommand("good-count", "unipotent character count (good primes)");
    std::string gtype = "E8";
    good->add_option("--type", gtype)->required();

    auto* cls = app.add_subcommand("classical", "rational unipotent class counts for B/C/D/A");
    std::string series = "C";
    int rank = 2;
    long long q = 3;
    bool oracle = false;
    cls->add_option("--series", series)->required();
    cls->add_option("--rank", rank)->required();
    cls->add_option("--q", q)->required();
    cls->add_flag("--oracle", oracle, "run the brute-force matrix oracle too");

    auto* ta = app.add_subcommand("type-a", "per-partition counts for SL_n/SU_n");
    int n = 2, tell = 2;
    long long tq = 3;
    std::string form = "linear";
    ta->add_option("--n", n)->required();
    ta->add_option("--ell", tell)->required();
    ta->add_option("--q", tq)->required();
    ta->add_option("--form", form, "linear | unitary");

    auto* ut = app.add_subcommand("unitri", "unitriangularity checks on integer matrices");
    std::string mode = "check", file;
    ut->add_option("mode", mode, "check | columns | certificate")->required();
    ut->add_option("--file", file, "matrix file, one row per line")->required();

    auto* val = app.add_subcommand("validate-data", "run all data-file validators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cen->parsed()) return run_census(type, ell, datadir, format, fail_on_dispute);
        if (good->parsed()) return run_good(gtype, datadir);
        if (cls->parsed()) return run_classical(series.at(0), rank, q, oracle);
        if (ta->parsed()) return run_type_a(n, tell, tq, form);
        if (ut->parsed()) return run_unitri(mode, file);
        if (val->parsed()) {
            for (const auto& line : sprdata::validate_all(datadir)) std::cout << line << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
