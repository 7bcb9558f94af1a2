#include "q8tc/certify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace q8tc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_quaternion(const GroupTable& group)
{
    static const nlohmann::json q8 = GroupTable::quaternion().to_json();
    return group.to_json() == q8;
}

std::string default_cochain(Equation e) { return e == Equation::eq2 ? "cprime" : "c"; }

std::vector<std::string> interpret(const GroupTable& group, const CertificationReport& r)
{
    if (!r.verified || !is_quaternion(group) || r.cochain != default_cochain(r.equation)) return {};
    if (r.equation == Equation::eq2 && r.skeleton == 4 && r.solvable)
        return {
            "delta u' = c' is solvable on S^3 x_ad P^4 G.",
            "u = v cup u' then solves delta_5 u = c, so (e_5)^*(z (x) z) = 0.",
            "wgt_B(z (x) z; F2) >= 6, hence tc(M) = 6.",
        };
    if (r.equation == Equation::eq2 && r.skeleton == 5 && !r.solvable)
        return {
            "delta u' = c' has no solution on S^3 x_ad P^5 G: z (x) x^2 is non-zero in degree 5.",
            "wgt_B(z (x) x^2; F2) = 5; this posing gives no bound on tc(M).",
        };
    if (r.equation == Equation::eq1 && r.skeleton == 5 && r.solvable)
        return {
            "delta_5 u = c is solvable on S^3 x_ad P^5 G, so (e_5)^*(z (x) z) = 0.",
            "wgt_B(z (x) z; F2) >= 6, hence tc(M) = 6.",
        };
    return {};
}

void check_budget(const GroupTable& group, const Scenario& s)
{
    const std::size_t need = estimated_bytes(group, s);
    if (need > s.memory_budget)
        throw ResourceError(s.kind() + " needs about " + std::to_string(need) +
                            " bytes, budget is " + std::to_string(s.memory_budget));
}

Cochain scenario_cochain(const GroupTable& group, const Scenario& s)
{
    Cochain rhs = named_cochain(group, s.cochain_name());
    if (rhs.degree() != s.upper_degree())
        throw std::invalid_argument("cochain " + rhs.name() + " has degree " + std::to_string(rhs.degree()) +
                                    ", " + to_string(s.equation) + " needs degree " +
                                    std::to_string(s.upper_degree()));
    return rhs;
}

BitVector support_vector(std::size_t n, const std::vector<std::size_t>& support)
{
    BitVector x(n);
    for (std::size_t i : support) {
        if (i >= n) throw std::out_of_range("solution index " + std::to_string(i) + " out of range");
        x.set(i, true);
    }
    return x;
}

EliminationOptions other_order(EliminationOptions o)
{
    o.order = o.order == EliminationOrder::fast ? EliminationOrder::reference : EliminationOrder::fast;
    return o;
}

}  // namespace

std::string to_string(Equation e) { return e == Equation::eq1 ? "eq1" : "eq2"; }

Equation parse_equation(const std::string& s)
{
    if (s == "eq1") return Equation::eq1;
    if (s == "eq2") return Equation::eq2;
    throw std::invalid_argument("unknown equation '" + s + "' (expected eq1 or eq2)");
}

std::string to_string(EliminationOrder o) { return o == EliminationOrder::fast ? "fast" : "reference"; }

EliminationOrder parse_elimination(const std::string& s)
{
    if (s == "fast") return EliminationOrder::fast;
    if (s == "reference") return EliminationOrder::reference;
    throw std::invalid_argument("unknown elimination order '" + s + "' (expected fast or reference)");
}

std::string Scenario::cochain_name() const { return cochain.empty() ? default_cochain(equation) : cochain; }

std::string Scenario::kind() const
{
    if (equation == Equation::eq1 && skeleton == 5) return "eq1-direct";
    return to_string(equation) + "-on-p" + std::to_string(skeleton);
}

Scenario eq2_on_p4(Variant variant)
{
    Scenario s;
    s.variant = variant;
    return s;
}

Scenario eq2_on_p5(Variant variant)
{
    Scenario s = eq2_on_p4(variant);
    s.skeleton = 5;
    return s;
}

Scenario eq1_direct(Variant variant)
{
    Scenario s = eq2_on_p5(variant);
    s.equation = Equation::eq1;
    return s;
}

std::size_t estimated_bytes(const GroupTable& group, const Scenario& s)
{
    const CellBasis lo(group, s.variant, s.lower_degree(), s.skeleton);
    const CellBasis hi(group, s.variant, s.upper_degree(), s.skeleton);
    return hi.size() * (words_for(lo.size()) + words_for(lo.size() + 1)) * sizeof(Word64);
}

CertificationReport run_scenario(const GroupTable& group, const Scenario& s, const std::string& group_label)
{
    const auto start = Clock::now();
    const Cochain rhs = scenario_cochain(group, s);
    check_budget(group, s);

    CertificationReport r;
    r.group = group_label;
    r.kind = s.kind();
    r.variant = s.variant;
    r.skeleton = s.skeleton;
    r.equation = s.equation;
    r.cochain = rhs.name();
    r.elimination = s.elimination.order;
    r.lower_degree = s.lower_degree();
    r.upper_degree = s.upper_degree();

    auto t = Clock::now();
    const CellBasis lo(group, s.variant, r.lower_degree, s.skeleton);
    const CellBasis hi(group, s.variant, r.upper_degree, s.skeleton);
    r.lower_cells = lo.size();
    r.upper_cells = hi.size();
    r.timings.enumerate = seconds_since(t);

    t = Clock::now();
    const BitMatrix a = borel_boundary_matrix(group, hi, lo);
    const BitVector b = rhs.on(hi);
    r.rows = a.rows();
    r.cols = a.cols();
    r.timings.assemble = seconds_since(t);

    t = Clock::now();
    const SolveReport sol = solve_augmented(a, b, s.elimination);
    r.rank_coefficient = sol.rank_coefficient;
    r.rank_augmented = sol.rank_augmented;
    r.solvable = sol.solvable;
    r.solution_support = sol.solution_support;
    r.timings.solve = seconds_since(t);

    t = Clock::now();
    if (r.solvable) {
        const BitVector u = support_vector(lo.size(), r.solution_support);
        if (!sol.verified || coboundary(group, u, lo, hi) != b)
            throw ConsistencyError(r.kind + ": solution fails the coboundary re-check");
        for (std::size_t i : r.solution_support) r.solution_labels.push_back(lo.at(i).label());
        r.verified = true;
    } else {
        const SolveReport again = solve_augmented(a, b, other_order(s.elimination));
        if (again.rank_coefficient != r.rank_coefficient || again.rank_augmented != r.rank_augmented)
            throw ConsistencyError(r.kind + ": elimination orders disagree on the ranks");
        r.verified = true;
    }
    r.timings.verify = seconds_since(t);

    r.interpretation = interpret(group, r);
    r.digest = report_digest(r);
    r.timings.total = seconds_since(start);
    r.peak_memory_bytes = peak_memory_bytes();
    return r;
}

CertificationReport run_direct(const GroupTable& group, const Scenario& s, const std::string& group_label)
{
    if (s.equation != Equation::eq1) throw std::invalid_argument("run_direct needs an eq1 scenario");
    return run_scenario(group, s, group_label);
}

std::string report_digest(const CertificationReport& r)
{
    nlohmann::json doc = to_json(r, false);
    doc.erase("digest");
    const std::string text = doc.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string render_text(const CertificationReport& r, const RenderOptions& options)
{
    std::ostringstream out;
    out << "# " << r.kind << ' ' << to_string(r.variant) << " skeleton " << r.skeleton << " cochain "
        << r.cochain << " group " << r.group << '\n';
    out << "The Number of " << r.lower_degree << "-cells is " << r.lower_cells << ".\n";
    out << "The Number of " << r.upper_degree << "-cells is " << r.upper_cells << ".\n";
    out << "The size of the coefficients matrix delta is " << r.rows << 'x' << r.cols << ".\n";
    out << "The size of the augmented coefficients matrix Delta is " << r.rows << 'x' << r.cols + 1 << ".\n";
    out << "The rank of the matrix delta is " << r.rank_coefficient << ".\n";
    out << "The rank of the matrix Delta is " << r.rank_augmented << ".\n";
    if (r.solvable) {
        out << "The length of one particular solution is " << r.solution_support.size() << ".\n";
        if (options.solution) {
            out << "The particular solution is\n";
            for (const auto& label : r.solution_labels) out << label << '\n';
        }
    } else {
        out << "There is no solution.\n";
    }
    out << (r.verified ? "Verified.\n" : "Not verified.\n");
    for (const auto& line : r.interpretation) out << line << '\n';
    out << "digest " << r.digest << '\n';
    if (options.timings) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "# time enumerate %.3fs assemble %.3fs solve %.3fs verify %.3fs total %.3fs\n",
                      r.timings.enumerate, r.timings.assemble, r.timings.solve, r.timings.verify,
                      r.timings.total);
        out << buf << "# peak memory " << r.peak_memory_bytes << " bytes\n";
    }
    return out.str();
}

nlohmann::json to_json(const CertificationReport& r, bool timings)
{
    nlohmann::json doc;
    doc["group"] = r.group;
    doc["kind"] = r.kind;
    doc["variant"] = to_string(r.variant);
    doc["skeleton"] = r.skeleton;
    doc["equation"] = to_string(r.equation);
    doc["cochain"] = r.cochain;
    doc["elimination"] = to_string(r.elimination);
    doc["cells"] = {{std::to_string(r.lower_degree), r.lower_cells},
                    {std::to_string(r.upper_degree), r.upper_cells}};
    doc["lower_degree"] = r.lower_degree;
    doc["upper_degree"] = r.upper_degree;
    doc["matrix"] = {{"rows", r.rows}, {"cols", r.cols}};
    doc["rank_coefficient"] = r.rank_coefficient;
    doc["rank_augmented"] = r.rank_augmented;
    doc["solvable"] = r.solvable;
    doc["verified"] = r.verified;
    doc["solution_support"] = r.solution_support;
    doc["solution_labels"] = r.solution_labels;
    doc["interpretation"] = r.interpretation;
    doc["digest"] = r.digest;
    if (timings) {
        doc["timings"] = {{"enumerate", r.timings.enumerate}, {"assemble", r.timings.assemble},
                          {"solve", r.timings.solve},         {"verify", r.timings.verify},
                          {"total", r.timings.total}};
        doc["peak_memory_bytes"] = r.peak_memory_bytes;
    }
    return doc;
}

CertificationReport report_from_json(const nlohmann::json& doc)
{
    CertificationReport r;
    try {
        r.group = doc.at("group").get<std::string>();
        r.kind = doc.at("kind").get<std::string>();
        r.variant = parse_variant(doc.at("variant").get<std::string>());
        r.skeleton = doc.at("skeleton").get<int>();
        r.equation = parse_equation(doc.at("equation").get<std::string>());
        r.cochain = doc.at("cochain").get<std::string>();
        r.elimination = parse_elimination(doc.at("elimination").get<std::string>());
        r.lower_degree = doc.at("lower_degree").get<int>();
        r.upper_degree = doc.at("upper_degree").get<int>();
        r.lower_cells = doc.at("cells").at(std::to_string(r.lower_degree)).get<std::size_t>();
        r.upper_cells = doc.at("cells").at(std::to_string(r.upper_degree)).get<std::size_t>();
        r.rows = doc.at("matrix").at("rows").get<std::size_t>();
        r.cols = doc.at("matrix").at("cols").get<std::size_t>();
        r.rank_coefficient = doc.at("rank_coefficient").get<std::size_t>();
        r.rank_augmented = doc.at("rank_augmented").get<std::size_t>();
        r.solvable = doc.at("solvable").get<bool>();
        r.verified = doc.at("verified").get<bool>();
        r.solution_support = doc.at("solution_support").get<std::vector<std::size_t>>();
        r.solution_labels = doc.at("solution_labels").get<std::vector<std::string>>();
        r.interpretation = doc.at("interpretation").get<std::vector<std::string>>();
        r.digest = doc.at("digest").get<std::string>();
        if (doc.contains("timings")) {
            const auto& t = doc.at("timings");
            r.timings = {t.at("enumerate").get<double>(), t.at("assemble").get<double>(),
                         t.at("solve").get<double>(), t.at("verify").get<double>(), t.at("total").get<double>()};
        }
        if (doc.contains("peak_memory_bytes")) r.peak_memory_bytes = doc.at("peak_memory_bytes").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

VerifyResult verify_certificate(const GroupTable& group, const CertificationReport& cert,
                                const EliminationOptions& elimination)
{
    VerifyResult result;
    auto problem = [&](std::string msg) { result.problems.push_back(std::move(msg)); };

    if (report_digest(cert) != cert.digest) problem("digest mismatch");

    Scenario s;
    s.variant = cert.variant;
    s.skeleton = cert.skeleton;
    s.equation = cert.equation;
    s.cochain = cert.cochain;
    s.elimination = elimination;
    if (cert.lower_degree != s.lower_degree() || cert.upper_degree != s.upper_degree())
        problem("degrees do not match the equation");
    const Cochain rhs = scenario_cochain(group, s);

    const CellBasis lo(group, s.variant, s.lower_degree(), s.skeleton);
    const CellBasis hi(group, s.variant, s.upper_degree(), s.skeleton);
    if (lo.size() != cert.lower_cells || hi.size() != cert.upper_cells) problem("cell counts differ");
    if (hi.size() != cert.rows || lo.size() != cert.cols) problem("matrix size differs");
    if (!result.problems.empty()) return result;

    const BitMatrix a = borel_boundary_matrix(group, hi, lo);
    const BitVector b = rhs.on(hi);
    const SolveReport sol = solve_augmented(a, b, elimination);
    if (sol.rank_coefficient != cert.rank_coefficient) problem("rank of delta differs");
    if (sol.rank_augmented != cert.rank_augmented) problem("rank of Delta differs");
    if (sol.solvable != cert.solvable) problem("solvability differs");

    if (cert.solvable) {
        if (cert.solution_labels.size() != cert.solution_support.size()) problem("support and labels differ in length");
        for (std::size_t k = 0; k < cert.solution_support.size() && k < cert.solution_labels.size(); ++k) {
            const std::size_t i = cert.solution_support[k];
            if (i >= lo.size() || lo.at(i).label() != cert.solution_labels[k]) {
                problem("label mismatch at support position " + std::to_string(k));
                break;
            }
        }
        if (result.problems.empty()) {
            if (!verify_solution(a, b, cert.solution_support)) problem("A x != b");
            else if (coboundary(group, support_vector(lo.size(), cert.solution_support), lo, hi) != b)
                problem("coboundary re-check failed");
        }
    }
    result.ok = result.problems.empty();
    return result;
}

CohomologyCheck compare_cochains(const GroupTable& group, const Scenario& s, const std::string& first,
                                 const std::string& second)
{
    const Cochain f = named_cochain(group, first);
    const Cochain g = named_cochain(group, second);
    if (f.degree() != s.upper_degree() || g.degree() != s.upper_degree())
        throw std::invalid_argument("compare_cochains: cochain degrees do not match the scenario");
    Scenario probe = s;
    probe.cochain = first;
    check_budget(group, probe);

    const CellBasis lo(group, s.variant, s.lower_degree(), s.skeleton);
    const CellBasis hi(group, s.variant, s.upper_degree(), s.skeleton);
    BitVector diff = f.on(hi);
    const BitVector other = g.on(hi);
    for (std::size_t w = 0; w < diff.words().size(); ++w) diff.words()[w] ^= other.words()[w];

    const SolveReport sol = solve_augmented(borel_boundary_matrix(group, hi, lo), diff, s.elimination);
    CohomologyCheck out;
    out.first = f.name();
    out.second = g.name();
    out.rank_coefficient = sol.rank_coefficient;
    out.rank_augmented = sol.rank_augmented;
    out.cohomologous = sol.solvable;
    out.differing_cells = diff.count();
    return out;
}

CrossScenarioCheck cross_scenario_check(const GroupTable& group, Variant variant,
                                        const std::vector<std::size_t>& eq2_support)
{
    const CellBasis lo(group, variant, 4, 4);
    const Cochain uprime = from_vector("u'", support_vector(lo.size(), eq2_support), lo);
    const Cochain u = cup_with_v(group, uprime);
    const CellBasis hi(group, variant, 6, 5);

    const BitVector du = coboundary(group, u, hi);
    const BitVector c = cochain_c(group).on(hi);
    const BitVector vc = cup_with_v(group, cochain_cprime(group)).on(hi);

    CrossScenarioCheck out;
    out.cells = hi.size();
    out.coboundary_weight = du.count();
    for (std::size_t i = 0; i < hi.size(); ++i) {
        out.mismatches_c += du.get(i) != c.get(i);
        out.mismatches_v_cup_cprime += du.get(i) != vc.get(i);
    }
    return out;
}

std::size_t peak_memory_bytes()
{
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line))
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream in(line.substr(6));
            std::size_t kb = 0;
            in >> kb;
            return kb * 1024;
        }
    return 0;
}

}  // namespace q8tc
