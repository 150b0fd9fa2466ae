// Command-line front end: exact Masur-Veech volumes, polynomials, area
// Siegel-Veech constants, square-tiled counting series, verification suites,
// table emission and coefficient-cache persistence.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvt/cache_io.hpp"
#include "mvt/graph_sum.hpp"
#include "mvt/siegel_veech.hpp"
#include "mvt/square_tiled.hpp"
#include "mvt/stable_graph.hpp"
#include "mvt/verify.hpp"
#include "mvt/virasoro.hpp"

namespace {

std::string latex_rational(const mvt::Rational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    std::string sign = r.is_negative() ? "-" : "";
    mvt::Rational a = r.is_negative() ? -r : r;
    return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_pipoly(const mvt::PiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [grade, r] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += latex_rational(r);
        if (grade != 0) out += "\\pi^{" + std::to_string(2 * grade) + "}";
    }
    return out;
}

std::string decimal(const mvt::PiPoly& p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", p.to_double(M_PI));
    return buf;
}

std::string render(const mvt::PiPoly& p, const std::string& format) {
    if (format == "latex") return latex_pipoly(p);
    if (format == "decimal") return decimal(p);
    return p.str(" * ");
}

std::vector<long> parse_lengths(const std::string& csv) {
    std::vector<long> out;
    std::istringstream in(csv);
    std::string piece;
    while (std::getline(in, piece, ',')) out.push_back(std::stol(piece));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of Masur-Veech volumes, Siegel-Veech constants\n"
                 "and square-tiled surface counts via topological recursion"};
    app.require_subcommand(1);

    int g = 0, n = 0;
    std::string format = "exact";
    std::string method = "virasoro";
    std::string lengths_csv;
    int order = 10;
    std::string suite;
    std::string path;
    std::string which = "mv";
    int gmax = 2, nmax = 4;

    auto* vol = app.add_subcommand("volume", "Masur-Veech volume MV_{g,n}");
    vol->add_option("--g", g)->required();
    vol->add_option("--n", n)->required();
    vol->add_option("--format", format)->check(CLI::IsMember({"exact", "latex", "decimal"}));

    auto* poly = app.add_subcommand("polynomial", "Masur-Veech polynomial coefficients");
    poly->add_option("--g", g)->required();
    poly->add_option("--n", n)->required();
    poly->add_option("--method", method)->check(CLI::IsMember({"virasoro", "graphs"}));

    auto* sv = app.add_subcommand("sv", "area Siegel-Veech constant (as pi^2*SV)");
    sv->add_option("--g", g)->required();
    sv->add_option("--n", n)->required();

    auto* sts = app.add_subcommand("sts", "square-tiled surface counting series");
    sts->add_option("--g", g)->required();
    sts->add_option("--n", n)->required();
    sts->add_option("--lengths", lengths_csv, "comma-separated boundary lengths")->required();
    sts->add_option("--order", order, "q-series truncation order");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"tables", "dual", "oracle", "scaling", "conjectures"}));

    auto* cache = app.add_subcommand("cache", "save or load the coefficient cache");
    cache->require_subcommand(1);
    auto* cache_save = cache->add_subcommand("save", "compute levels and write a cache file");
    cache_save->add_option("--path", path)->required();
    cache_save->add_option("--gmax", gmax);
    cache_save->add_option("--nmax", nmax);
    auto* cache_load = cache->add_subcommand("load", "read a cache file and report its contents");
    cache_load->add_option("--path", path)->required();

    auto* table = app.add_subcommand("table", "emit a table of normalized values");
    table->add_option("--which", which)->check(CLI::IsMember({"mv", "sv"}));
    table->add_option("--gmax", gmax);
    table->add_option("--nmax", nmax);
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "latex"}));

    auto* graphs = app.add_subcommand("graphs", "dump stable graphs of type (g,n)");
    graphs->add_option("--g", g)->required();
    graphs->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    mvt::Session session;
    try {
        if (vol->parsed()) {
            std::cout << render(session.mv_volume(g, n), format) << "\n";
        } else if (poly->parsed()) {
            mvt::EvenPolynomial p = (method == "graphs") ? mvt::mv_polynomial_via_graphs(session, g, n)
                                                         : session.mv_polynomial(g, n);
            std::cout << p.str() << "\n";
        } else if (sv->parsed()) {
            std::cout << "pi^2*SV = " << mvt::sv_constant(session, g, n).str(" * ") << "\n";
        } else if (sts->parsed()) {
            mvt::NorburyCounter counter;
            std::vector<long> lengths = parse_lengths(lengths_csv);
            if (static_cast<int>(lengths.size()) != n) {
                std::cerr << "error: expected " << n << " lengths\n";
                return 2;
            }
            std::cout << mvt::sts_series(counter, g, n, lengths, order).str() << "\n";
        } else if (verify->parsed()) {
            mvt::SuiteResult result = mvt::run_suite(session, suite);
            for (const auto& line : result.lines)
                std::cout << "CHECK " << line.name << ": EXPECTED " << line.expected << " GOT "
                          << line.got << " " << (line.ok ? "[OK]" : "[MISMATCH]") << "\n";
            std::cout << "suite " << result.suite << ": " << (result.passed() ? "PASS" : "FAIL") << "\n";
            return result.passed() ? 0 : 1;
        } else if (cache_save->parsed()) {
            for (int gg = 0; gg <= gmax; ++gg)
                for (int nn = 1; nn <= nmax; ++nn)
                    if (mvt::is_stable(gg, nn)) session.mv_polynomial(gg, nn);
            mvt::save_cache(session.masur_veech().table(), path);
            const auto& t = session.masur_veech().table();
            size_t written = 0;
            for (const auto& [idx, v] : t.entries()) written += t.is_complete(idx.g(), idx.n());
            std::cout << "saved " << written << " entries, " << t.complete_levels().size()
                      << " levels\n";
        } else if (cache_load->parsed()) {
            mvt::load_cache(session.masur_veech().table(), path);
            std::cout << "loaded " << session.masur_veech().table().size() << " entries, "
                      << session.masur_veech().table().complete_levels().size() << " levels\n";
        } else if (table->parsed()) {
            auto cell = [&](int gg, int nn) -> std::optional<mvt::PiPoly> {
                bool defined = (which == "mv") ? (mvt::is_stable(gg, nn) || (nn == 0 && gg >= 2))
                                               : 2 * gg - 2 + nn >= 2;
                if (!defined) return std::nullopt;
                return (which == "mv") ? session.mv_volume(gg, nn) : mvt::sv_constant(session, gg, nn);
            };
            if (format == "latex") {
                // grid layout: rows n, columns g, normalized rational entries
                std::cout << "\\begin{tabular}{|c|";
                for (int gg = 0; gg <= gmax; ++gg) std::cout << "c";
                std::cout << "|}\n\\hline\n$n \\backslash g$";
                for (int gg = 0; gg <= gmax; ++gg) std::cout << " & $" << gg << "$";
                std::cout << " \\\\\n\\hline\n";
                for (int nn = 0; nn <= nmax; ++nn) {
                    std::cout << "$" << nn << "$";
                    for (int gg = 0; gg <= gmax; ++gg) {
                        std::cout << " & ";
                        if (auto value = cell(gg, nn); value)
                            if (auto single = value->single_grade(); single)
                                std::cout << "$" << latex_rational(single->first) << "$";
                    }
                    std::cout << " \\\\\n";
                }
                std::cout << "\\hline\n\\end{tabular}\n";
            } else {
                std::cout << "g,n,value_rational,pi_power\n";
                for (int gg = 0; gg <= gmax; ++gg)
                    for (int nn = 0; nn <= nmax; ++nn)
                        if (auto value = cell(gg, nn); value)
                            if (auto single = value->single_grade(); single)
                                std::cout << gg << "," << nn << "," << single->first.str() << ","
                                          << 2 * single->second << "\n";
            }
        } else if (graphs->parsed()) {
            for (const auto& sg : mvt::enumerate_stable_graphs(g, n)) std::cout << sg.dump() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
