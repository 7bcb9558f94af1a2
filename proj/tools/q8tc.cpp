// q8tc: cell bases, coboundary matrices and certification runs for
// S^3 x_ad P^t G.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "q8tc/borel.hpp"
#include "q8tc/certify.hpp"
#include "q8tc/cochain.hpp"
#include "q8tc/gf2.hpp"
#include "q8tc/group.hpp"

namespace fs = std::filesystem;
using namespace q8tc;

namespace {

struct Options {
    std::string group = "builtin:q8";
    std::string variant = "reduced";
    int skeleton = 4;
    std::string equation = "eq2";
    std::string cochain;
    std::string elimination;  // per subcommand default
    std::string format = "text";
    std::string out;
    std::size_t memory_budget = std::size_t{1} << 30;
    unsigned threads = 1;
    int dimension = -1;
    bool packed = false;
    bool show_solution = false;
    std::string compare_with;
    std::string certificate;
};

GroupTable load_group(const std::string& spec)
{
    if (spec == "builtin:q8") return GroupTable::quaternion();
    return GroupTable::load(spec);
}

Scenario make_scenario(const Options& o)
{
    Scenario s;
    s.variant = parse_variant(o.variant);
    s.skeleton = o.skeleton;
    s.equation = parse_equation(o.equation);
    s.cochain = o.cochain;
    if (!o.elimination.empty()) s.elimination.order = parse_elimination(o.elimination);
    s.elimination.threads = o.threads;
    s.memory_budget = o.memory_budget;
    return s;
}

std::ofstream open_out(const Options& o, const std::string& name)
{
    fs::create_directories(o.out);
    const fs::path p = fs::path(o.out) / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    return f;
}

void add_group(CLI::App* cmd, Options& o)
{
    cmd->add_option("--group", o.group, "Group table JSON file, or builtin:q8");
}

void add_basis(CLI::App* cmd, Options& o)
{
    add_group(cmd, o);
    cmd->add_option("--variant", o.variant, "Bar complex variant")
        ->check(CLI::IsMember({"reduced", "unreduced"}));
    cmd->add_option("--skeleton", o.skeleton, "Skeleton t of P^t G")->check(CLI::Range(0, 11));
}

void add_system(CLI::App* cmd, Options& o)
{
    add_basis(cmd, o);
    cmd->add_option("--equation", o.equation, "eq2: delta u' = c' (4 -> 5), eq1: delta u = c (5 -> 6)")
        ->check(CLI::IsMember({"eq1", "eq2"}));
    cmd->add_option("--cochain", o.cochain, "Right-hand side cochain (default: cprime for eq2, c for eq1)");
    cmd->add_option("--memory-budget", o.memory_budget, "Bytes available to the elimination");
}

void add_solver(CLI::App* cmd, Options& o)
{
    cmd->add_option("--elimination", o.elimination, "Pivot order (certify: reference, rank/verify: fast)")
        ->check(CLI::IsMember({"fast", "reference"}));
    cmd->add_option("--threads", o.threads, "Worker threads for row updates")->check(CLI::PositiveNumber);
}

int cmd_cells(const Options& o)
{
    const GroupTable group = load_group(o.group);
    const CellBasis basis(group, parse_variant(o.variant), o.dimension, o.skeleton);
    const std::string stem = "cells_d" + std::to_string(o.dimension) + "_p" + std::to_string(o.skeleton);

    std::string body;
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < basis.size(); ++i) arr.push_back(basis.at(i).label());
        body = arr.dump(1) + "\n";
    } else {
        for (std::size_t i = 0; i < basis.size(); ++i) body += basis.at(i).label() + "\n";
    }

    if (o.out.empty()) {
        std::cout << body;
    } else {
        open_out(o, stem + (o.format == "json" ? ".json" : ".txt")) << body;
        if (!o.cochain.empty()) {
            const BitVector v = named_cochain(group, o.cochain).on(basis);
            auto f = open_out(o, stem + "_" + o.cochain + ".bits");
            for (std::size_t i = 0; i < v.size(); ++i) f << (v.get(i) ? '1' : '0') << '\n';
        }
        std::cerr << basis.size() << " cells written to " << o.out << "\n";
    }
    return 0;
}

int cmd_matrix(const Options& o)
{
    const GroupTable group = load_group(o.group);
    const Scenario s = make_scenario(o);
    const CellBasis lo(group, s.variant, s.lower_degree(), s.skeleton);
    const CellBasis hi(group, s.variant, s.upper_degree(), s.skeleton);
    const BitMatrix a = borel_boundary_matrix(group, hi, lo);

    if (o.out.empty()) {
        if (o.packed) throw std::invalid_argument("--packed needs --out");
        write_sparse(std::cout, a);
        return 0;
    }
    const std::string stem = "delta_" + s.kind() + "_" + to_string(s.variant);
    if (o.packed) {
        auto f = open_out(o, stem + ".bin");
        write_packed(f, a);
    } else {
        auto f = open_out(o, stem + ".mtx");
        write_sparse(f, a);
    }
    const BitVector b = named_cochain(group, s.cochain_name()).on(hi);
    auto f = open_out(o, "rhs_" + s.cochain_name() + "_" + s.kind() + "_" + to_string(s.variant) + ".bits");
    for (std::size_t i = 0; i < b.size(); ++i) f << (b.get(i) ? '1' : '0') << '\n';
    std::cerr << a.rows() << "x" << a.cols() << " matrix written to " << o.out << "\n";
    return 0;
}

int cmd_rank(const Options& o)
{
    const GroupTable group = load_group(o.group);
    Scenario s = make_scenario(o);
    if (o.elimination.empty()) s.elimination.order = EliminationOrder::fast;
    if (estimated_bytes(group, s) > s.memory_budget) throw ResourceError("rank: memory budget exceeded");
    const CellBasis lo(group, s.variant, s.lower_degree(), s.skeleton);
    const CellBasis hi(group, s.variant, s.upper_degree(), s.skeleton);
    const BitMatrix a = borel_boundary_matrix(group, hi, lo);
    const SolveReport r = solve_augmented(a, named_cochain(group, s.cochain_name()).on(hi), s.elimination);
    if (o.format == "json") {
        std::cout << nlohmann::json{{"rows", a.rows()},
                                    {"cols", a.cols()},
                                    {"rank_coefficient", r.rank_coefficient},
                                    {"rank_augmented", r.rank_augmented}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "The rank of the matrix delta is " << r.rank_coefficient << ".\n"
                  << "The rank of the matrix Delta is " << r.rank_augmented << ".\n";
    }
    return 0;
}

int cmd_certify(const Options& o)
{
    const GroupTable group = load_group(o.group);
    const Scenario s = make_scenario(o);
    const CertificationReport r = run_scenario(group, s, o.group);

    if (o.format == "json")
        std::cout << to_json(r).dump(2) << "\n";
    else
        std::cout << render_text(r, {o.show_solution, true});

    if (!o.compare_with.empty()) {
        const CohomologyCheck c = compare_cochains(group, s, r.cochain, o.compare_with);
        std::cout << "# " << c.first << " - " << c.second << ": " << c.differing_cells
                  << " differing cells, ranks " << c.rank_coefficient << "/" << c.rank_augmented << ", "
                  << (c.cohomologous ? "a coboundary" : "not a coboundary") << "\n";
    }
    if (!o.out.empty()) {
        open_out(o, "certificate.json") << to_json(r).dump(2) << "\n";
        open_out(o, "report.txt") << render_text(r, {true, true});
    }
    return r.solvable ? 0 : 2;
}

int cmd_verify(const Options& o)
{
    std::ifstream in(o.certificate);
    if (!in) throw std::runtime_error("cannot read " + o.certificate);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not JSON: ") + e.what());
    }
    const CertificationReport cert = report_from_json(doc);
    const GroupTable group = load_group(o.group.empty() ? cert.group : o.group);
    EliminationOptions opts;
    opts.order = parse_elimination(o.elimination.empty() ? "fast" : o.elimination);
    opts.threads = o.threads;
    const VerifyResult v = verify_certificate(group, cert, opts);
    if (!v.ok) {
        for (const auto& p : v.problems) std::cerr << "invalid: " << p << "\n";
        return 1;
    }
    std::cout << "certificate " << cert.digest << " valid: " << cert.kind << ' ' << to_string(cert.variant)
              << (cert.solvable ? " solvable" : " unsolvable") << "\n";
    return cert.solvable ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coboundary systems on S^3 x_ad P^t G over F2"};
    app.require_subcommand(1);
    Options o;

    auto* cells = app.add_subcommand("cells", "Enumerate a cell basis");
    add_basis(cells, o);
    cells->add_option("--dimension", o.dimension, "Cell dimension")->required();
    cells->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    cells->add_option("--out", o.out, "Output directory");
    cells->add_option("--cochain", o.cochain, "Also export this cochain on the basis (with --out)");

    auto* matrix = app.add_subcommand("matrix", "Assemble and export the coboundary matrix");
    add_system(matrix, o);
    matrix->add_option("--out", o.out, "Output directory (stdout when omitted)");
    matrix->add_flag("--packed", o.packed, "Write the packed binary format");

    auto* rank = app.add_subcommand("rank", "Ranks of the coefficient and augmented matrices");
    add_system(rank, o);
    add_solver(rank, o);
    rank->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* certify = app.add_subcommand("certify", "Run a full scenario");
    add_system(certify, o);
    add_solver(certify, o);
    certify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    certify->add_option("--out", o.out, "Directory for certificate.json and report.txt");
    certify->add_flag("--show-solution", o.show_solution, "List the solution cells");
    certify->add_option("--compare-with", o.compare_with, "Check whether rhs minus this cochain is a coboundary");

    auto* verify = app.add_subcommand("verify", "Re-check a certificate file");
    verify->add_option("certificate", o.certificate, "certificate.json")->required();
    verify->add_option("--group", o.group, "Group table (default: as recorded)");
    add_solver(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (verify->parsed() && verify->count("--group") == 0) o.group.clear();

    try {
        if (cells->parsed()) return cmd_cells(o);
        if (matrix->parsed()) return cmd_matrix(o);
        if (rank->parsed()) return cmd_rank(o);
        if (certify->parsed()) return cmd_certify(o);
        return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
