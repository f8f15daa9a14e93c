// Command-line front end: verify / classify / solve / emit / apply / scan.
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include "sbo/io.hpp"
#include "sbo/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sbo;

json diagnostics_json(const RecurrenceDiagnostics& d) {
    return json{{"a_range", d.a_range},
                {"plus", d.plus_branch},
                {"minus", d.minus_branch},
                {"solution_dimension", d.solution_dimension},
                {"unknowns", d.unknown_count},
                {"plus_constants_zero", d.plus_constants_zero},
                {"minus_constants_zero", d.minus_constants_zero},
                {"vanishing_pattern_ok", d.vanishing_pattern_ok},
                {"phase3_relation_ok", d.phase3_relation_ok}};
}

// branch labels straight from the Gamma ledger, without running the solver
json branch_labels(const Rational& lambda, long long a, int big_n) {
    std::string plus = "generic", minus = a <= big_n ? "empty" : "generic";
    for (int s = 1; s <= big_n; ++s) {
        if (a - s >= 0 && (a - s) % 2 == 0 &&
            gamma_factor(lambda + Rational(big_n - 1, 1), a - s).is_zero())
            plus = "gamma0_plus_zero(s=" + std::to_string(s) + ")";
        if (a > big_n && a - s >= 0 && (a - s) % 2 == 0 && s >= 2 * big_n - a &&
            gamma_factor(lambda, a - s - 2).is_zero())
            minus = "gamma0_minus_zero(s=" + std::to_string(s) + ")";
    }
    return json{{"a_range", a >= 2 * big_n  ? "a>=2N"
                            : a > big_n     ? "N<a<2N"
                                            : "0<=a<=N"},
                {"plus", plus},
                {"minus", minus}};
}

int cmd_verify(const std::string& suite) {
    auto results = run_verify_suite(suite);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%-4s (%6.2f s)  %s%s%s\n", r.pass ? "PASS" : "FAIL", r.seconds,
                    r.name.c_str(), r.detail.empty() ? "" : ": ", r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

int cmd_classify(const std::string& lambda_s, const std::string& nu_s, int big_n,
                 long long m) {
    Rational lambda = Rational::parse(lambda_s);
    Rational nu = Rational::parse(nu_s);
    int dim = classify(lambda, nu, big_n, m);
    json out{{"lambda", lambda.to_string()},
             {"nu", nu.to_string()},
             {"N", big_n},
             {"m", m},
             {"dimension", dim}};
    Rational diff = nu - lambda;
    if (dim == 1) {
        long long a = diff.num().to_longlong();
        out["a"] = a;
        out["branch"] = branch_labels(lambda, a, big_n);
    } else {
        out["branch"] = json{{"reason", "nu - lambda is not a natural number"}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_solve(const std::string& lambda_s, long long a, int big_n, long long m,
              const std::string& method) {
    Rational lambda = Rational::parse(lambda_s);
    json out;
    if (method == "nullspace") {
        LinearSystem sys = build_linear_system(lambda, a, big_n, m);
        auto kernel = nullspace(sys);
        json basis = json::array();
        for (const auto& v : kernel)
            basis.push_back(to_json(gvector_from_coeffs(a, big_n, m, sys, v)));
        out = json{{"dimension", kernel.size()},
                   {"basis", basis},
                   {"branch", json{{"method", "nullspace"},
                                   {"exploratory", m > big_n},
                                   {"unknowns", sys.unknown_layout.size()},
                                   {"rows", sys.matrix.size()}}}};
    } else if (method == "closed") {
        if (m != big_n)
            throw std::domain_error("closed form is only asserted for m = N");
        GVector g = closed_solution(lambda, a, big_n);
        out = json{{"dimension", 1},
                   {"basis", json::array({to_json(g)})},
                   {"branch", branch_labels(lambda, a, big_n)}};
    } else if (method == "recurrence") {
        if (m != big_n)
            throw std::domain_error("the recurrence solver requires m = N");
        auto [f, diag] = recurrence_solution(lambda, a, big_n);
        out = json{{"dimension", diag.solution_dimension},
                   {"basis", json::array({to_json(tilde_reverse(f, m))})},
                   {"branch", diagnostics_json(diag)}};
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_emit(const std::string& lambda_s, const std::string& nu_s, int big_n,
             long long m, const std::string& format) {
    Rational lambda = Rational::parse(lambda_s);
    Rational nu = Rational::parse(nu_s);
    DiffOperator d = build_sbo(lambda, nu, big_n, m);
    std::cout << emit(d, format == "latex" ? EmitFormat::Latex : EmitFormat::Json)
              << "\n";
    return 0;
}

int cmd_apply(const std::string& op_path, const std::string& sec_path) {
    std::ifstream op_in(op_path);
    if (!op_in)
        throw std::invalid_argument("cannot open operator file: " + op_path);
    std::ifstream sec_in(sec_path);
    if (!sec_in)
        throw std::invalid_argument("cannot open section file: " + sec_path);
    DiffOperator d = diffop_from_json(json::parse(op_in));
    PolySection f = section_from_json(json::parse(sec_in));
    std::cout << to_json(apply_operator(d, f)).dump(2) << "\n";
    return 0;
}

// minimal reader for the grid files documented in the README:
// string arrays, integers and booleans only
struct GridFile {
    std::vector<Rational> lambdas;
    long long a_min = 0, a_max = 0;
    int n_min = 0, n_max = 0;
    bool include_degenerate = true;
    std::string m_side = "both"; // plus | minus | both
};

GridFile parse_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open grid file: " + path);
    GridFile g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid file line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [&](std::string s) {
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
            return s;
        };
        key = trim(key);
        value = trim(value);
        if (key == "lambda") {
            if (value.size() < 2 || value.front() != '[' || value.back() != ']')
                throw std::invalid_argument("lambda must be an array of \"p/q\" strings");
            std::string body = value.substr(1, value.size() - 2);
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (item.size() < 2 || item.front() != '"' || item.back() != '"')
                    throw std::invalid_argument("lambda entries must be quoted strings");
                g.lambdas.push_back(Rational::parse(item.substr(1, item.size() - 2)));
            }
        } else if (key == "a_min")
            g.a_min = std::stoll(value);
        else if (key == "a_max")
            g.a_max = std::stoll(value);
        else if (key == "n_min")
            g.n_min = std::stoi(value);
        else if (key == "n_max")
            g.n_max = std::stoi(value);
        else if (key == "include_degenerate")
            g.include_degenerate = value == "true";
        else if (key == "m")
            g.m_side = trim(value.size() >= 2 && value.front() == '"'
                                ? value.substr(1, value.size() - 2)
                                : value);
        else
            throw std::invalid_argument("grid file: unknown key " + key);
    }
    if (g.lambdas.empty() && !g.include_degenerate)
        throw std::invalid_argument("grid file: no lambda values");
    if (g.a_max < g.a_min || g.n_max < g.n_min)
        throw std::invalid_argument("grid file: empty range");
    if (g.m_side != "plus" && g.m_side != "minus" && g.m_side != "both")
        throw std::invalid_argument("grid file: m must be plus, minus or both");
    return g;
}

int cmd_scan(const std::string& grid_path) {
    GridFile grid = parse_grid_file(grid_path);
    long long points = 0, failures = 0;
    for (int big_n = grid.n_min; big_n <= grid.n_max; ++big_n)
        for (long long a = grid.a_min; a <= grid.a_max; ++a) {
            std::vector<Rational> lambdas = grid.lambdas;
            if (grid.include_degenerate)
                for (const auto& l : suites::degenerate_lambdas(big_n, a))
                    if (std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end())
                        lambdas.push_back(l);
            for (const auto& lambda : lambdas) {
                Rational nu = lambda + Rational(a, 1);
                std::vector<long long> ms;
                if (grid.m_side != "minus")
                    ms.push_back(big_n);
                if (grid.m_side != "plus" && big_n > 0)
                    ms.push_back(-big_n);
                for (long long m : ms) {
                    ++points;
                    int dim = 0;
                    bool ok = true;
                    try {
                        dim = classify(lambda, nu, big_n, m);
                        ok = dim == 1;
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    if (!ok)
                        ++failures;
                    std::printf("lambda=%-8s nu=%-10s N=%d m=%-3lld dim=%d %s\n",
                                lambda.to_string().c_str(), nu.to_string().c_str(),
                                big_n, m, dim, ok ? "" : " << FAIL");
                }
            }
        }
    std::printf("%lld points scanned, %lld failures\n", points, failures);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for the rank-(2N+1) -> rank-1 "
                 "differential symmetry breaking operators on (S^3, S^2)"};
    app.require_subcommand(1);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite, "appendix|fsystem|ode|duality|all")
        ->check(CLI::IsMember({"appendix", "fsystem", "ode", "duality", "all"}));

    std::string lambda_s, nu_s, format = "json", method = "nullspace";
    std::string op_path, sec_path, grid_path;
    int big_n = 0;
    long long m = 0, a = 0;

    auto* classify_cmd = app.add_subcommand("classify", "dimension of the operator space");
    classify_cmd->add_option("--lambda", lambda_s, "rational P/Q")->required();
    classify_cmd->add_option("--nu", nu_s, "rational P/Q")->required();
    classify_cmd->add_option("--N", big_n, "bundle parameter N")->required();
    classify_cmd->add_option("--m", m, "twist, +N or -N")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve the ODE system Xi(lambda,a,N,m)");
    solve_cmd->add_option("--lambda", lambda_s, "rational P/Q")->required();
    solve_cmd->add_option("--a", a, "degree a = nu - lambda")->required();
    solve_cmd->add_option("--N", big_n, "bundle parameter N")->required();
    solve_cmd->add_option("--m", m, "twist, m >= N")->required();
    solve_cmd->add_option("--method", method, "nullspace|recurrence|closed")
        ->check(CLI::IsMember({"nullspace", "recurrence", "closed"}));

    auto* emit_cmd = app.add_subcommand("emit", "print the operator");
    emit_cmd->add_option("--lambda", lambda_s, "rational P/Q")->required();
    emit_cmd->add_option("--nu", nu_s, "rational P/Q")->required();
    emit_cmd->add_option("--N", big_n, "bundle parameter N")->required();
    emit_cmd->add_option("--m", m, "twist, +N or -N")->required();
    emit_cmd->add_option("--format", format, "json|latex")
        ->check(CLI::IsMember({"json", "latex"}));

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a section");
    apply_cmd->add_option("--operator", op_path, "operator JSON file")->required();
    apply_cmd->add_option("--section", sec_path, "section JSON file")->required();

    auto* scan_cmd = app.add_subcommand("scan", "batch classification over a grid file");
    scan_cmd->add_option("--grid", grid_path, "grid description file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify)
            return cmd_verify(suite);
        if (*classify_cmd)
            return cmd_classify(lambda_s, nu_s, big_n, m);
        if (*solve_cmd)
            return cmd_solve(lambda_s, a, big_n, m, method);
        if (*emit_cmd)
            return cmd_emit(lambda_s, nu_s, big_n, m, format);
        if (*apply_cmd)
            return cmd_apply(op_path, sec_path);
        if (*scan_cmd)
            return cmd_scan(grid_path);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
