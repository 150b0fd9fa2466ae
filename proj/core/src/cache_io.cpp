#include "mvt/cache_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mvt {

std::string theory_name(Theory t) {
    return t == Theory::Kontsevich ? "KONTSEVICH" : "MASUR_VEECH";
}

void save_cache(const CoeffTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << "mvtr-cache 1 " << theory_name(table.theory()) << "\n";
    for (auto [g, n] : table.complete_levels()) {
        out << "level " << g << " " << n << "\n";
        for (const auto& [idx, value] : table.entries()) {
            if (idx.g() != g || idx.n() != n) continue;
            out << g << " " << n << " ";
            for (size_t i = 0; i < idx.d().size(); ++i) out << (i ? "," : "") << idx.d()[i];
            out << " ";
            bool first = true;
            for (const auto& [grade, r] : value.terms()) {
                out << (first ? "" : ";") << grade << ":" << r.str();
                first = false;
            }
            if (first) out << "0:0";
            out << "\n";
        }
    }
    if (!out) throw std::runtime_error("failed writing cache file: " + path);
}

void load_cache(CoeffTable& table, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    std::string magic, tag;
    int version = 0;
    in >> magic >> version >> tag;
    if (magic != "mvtr-cache" || version != 1) throw std::runtime_error("unrecognized cache format");
    if (tag != theory_name(table.theory())) throw std::runtime_error("cache theory tag mismatch");

    std::string line;
    std::getline(in, line);  // rest of header line
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string head;
        row >> head;
        if (head == "level") {
            int g = 0, n = 0;
            row >> g >> n;
            table.mark_complete(g, n);
            continue;
        }
        int g = std::stoi(head), n = 0;
        std::string dlist, terms;
        row >> n >> dlist >> terms;
        std::vector<int> d;
        std::istringstream ds(dlist);
        std::string piece;
        while (std::getline(ds, piece, ',')) d.push_back(std::stoi(piece));
        PiPoly value;
        std::istringstream ts(terms);
        while (std::getline(ts, piece, ';')) {
            auto colon = piece.find(':');
            if (colon == std::string::npos) throw std::runtime_error("malformed cache record");
            int grade = std::stoi(piece.substr(0, colon));
            Rational r = Rational::parse(piece.substr(colon + 1));
            value += PiPoly::term(r, grade);
        }
        table.store(MultiIndex(g, n, std::move(d)), std::move(value));
    }
}

}  // namespace mvt
