// anticomm: JSON front end for the anticomm library.
//
// Exit codes: 0 ok, 1 verify failures or internal error, 2 parse error,
// 3 shape error, 4 irrational spectrum, 5 invalid triple or argument, 6 pair does not
// anti-commute, 7 pair not generic.

#include "anticomm/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace anticomm;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> read_lines(const std::string& path) {
    std::istringstream in(read_input(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int exit_code(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const ShapeError*>(&e)) return 3;
    if (dynamic_cast<const IrrationalSpectrum*>(&e)) return 4;
    if (dynamic_cast<const NotAntiCommuting*>(&e)) return 6;
    if (dynamic_cast<const NotGeneric*>(&e)) return 7;
    if (dynamic_cast<const InvalidArgument*>(&e)) return 5;
    return 1;
}

// Either a bare matrix or {"A": ..., "B": ...}.
Json classify_one(const Json& in) {
    if (in.is_object() && in.contains("A")) {
        const auto [a, b] = pair_from_json(in);
        require_anticommuting(a, b);
        return to_json(component_of(a));
    }
    return to_json(component_of(matrix_from_json(in)));
}

Json invariants_one(const Json& in, int degree) {
    const auto [a, b] = pair_from_json(in);
    require_anticommuting(a, b);
    return to_json(trace_invariants(a, b, degree));
}

const char* ok(bool b) { return b ? "ok" : "fail"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on pairs of anti-commuting rational matrices"};
    app.require_subcommand(1);

    std::string file = "-";
    int sigma = -1;
    bool batch = false;
    int n = 0, p = 0, m = 0, r = 0;
    std::uint64_t seed = 0;
    int coeffBound = SampleConfig{}.coeffBound;
    int degree = -1;
    std::string suite = "all";
    int maxN = 5;

    auto* commutant = app.add_subcommand("commutant", "basis of {B : AB = sigma BA}");
    commutant->add_option("file", file, "matrix JSON ('-' for stdin)");
    commutant->add_option("--sigma", sigma, "+1 or -1")->check(CLI::IsMember({1, -1}));

    auto* classify = app.add_subcommand("classify", "component containing (A, B)");
    classify->add_option("file", file, "matrix or pair JSON ('-' for stdin)");
    classify->add_flag("--batch", batch, "JSON-lines input, one report per line");

    auto* sample = app.add_subcommand("sample", "random generic pair of a component");
    sample->add_option("--n", n)->required();
    sample->add_option("--p", p)->required();
    sample->add_option("--m", m)->required();
    sample->add_option("--r", r)->required();
    sample->add_option("--seed", seed);
    sample->add_option("--coeff-bound", coeffBound);

    auto* tangent = app.add_subcommand("tangent", "tangent, orbit, stabilizer and fiber dimensions");
    tangent->add_option("file", file, "pair JSON ('-' for stdin)");

    auto* invariants = app.add_subcommand("invariants", "Tr(A^i B^j) for i + j <= d");
    invariants->add_option("file", file, "pair JSON ('-' for stdin)");
    invariants->add_option("--degree", degree, "degree bound (default 2n)");
    invariants->add_flag("--batch", batch, "JSON-lines input, one vector per line");

    auto* etaCmd = app.add_subcommand("eta", "plane points of a generic pair");
    etaCmd->add_option("file", file, "pair JSON ('-' for stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "components for a given n");
    enumerate->add_option("--n", n)->required();

    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", maxN);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (commutant->parsed()) {
            const RatMatrix a = matrix_from_json(parse_json(read_input(file)));
            emit(to_json(sigma_commutant(a, sigma == 1 ? Sigma::Plus : Sigma::Minus)));
        } else if (classify->parsed()) {
            if (batch) {
                for (const auto& line : read_lines(file)) std::cout << classify_one(parse_json(line)).dump() << '\n';
            } else {
                emit(classify_one(parse_json(read_input(file))));
            }
        } else if (sample->parsed()) {
            const ComponentTriple t = make_triple(n, p, m, r);
            SampleConfig cfg;
            cfg.seed = seed;
            cfg.coeffBound = coeffBound;
            const auto s = sample_component(t, cfg);
            const DimReport dims = orbit_dim(s.A, s.B);
            emit(Json{{"triple", to_json(t)},
                      {"seed", seed},
                      {"coeffBound", coeffBound},
                      {"A", to_json(s.A)},
                      {"B", to_json(s.B)},
                      {"g", to_json(s.g)},
                      {"dims", to_json(dims)},
                      {"checks",
                       Json{{"anticommutes", ok(anticommutes(s.A, s.B))},
                            {"component", ok(component_of(s.A).triple == t)},
                            {"generic", ok(is_generic_pair(s.A, s.B, t))}}}});
        } else if (tangent->parsed()) {
            const auto [a, b] = pair_from_json(parse_json(read_input(file)));
            emit(to_json(orbit_dim(a, b)));
        } else if (invariants->parsed()) {
            if (batch) {
                for (const auto& line : read_lines(file)) std::cout << invariants_one(parse_json(line), degree).dump() << '\n';
            } else {
                emit(invariants_one(parse_json(read_input(file)), degree));
            }
        } else if (etaCmd->parsed()) {
            const auto [a, b] = pair_from_json(parse_json(read_input(file)));
            emit(to_json(eta(a, b)));
        } else if (enumerate->parsed()) {
            Json out = Json::array();
            for (const auto& t : enumerate_components(n)) out.push_back(to_json(t));
            emit(Json{{"n", n}, {"count", out.size()}, {"components", std::move(out)}});
        } else if (verify->parsed()) {
            const auto results = run_suite(suite, maxN);
            Json report = to_json(suite, maxN, results);
            double wall = 0;
            for (const auto& res : results) wall += res.wallSeconds;
            report["wallSeconds"] = wall;
            emit(report);
            return report["failures"].empty() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "anticomm: " << e.what() << '\n';
        return exit_code(e);
    }
    return 0;
}
