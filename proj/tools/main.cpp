/*
 * treeimm command line: enumerate trees, build the shift poset, run the
 * verification suites, and print moments / immanantal coefficients.
 *
 * Exit codes: 0 success, 1 falsified identity, 2 usage or input error.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/gts.hpp"
#include "treeimm/immanantal.hpp"
#include "treeimm/moments.hpp"
#include "treeimm/orientmatch.hpp"
#include "treeimm/polymatrix.hpp"
#include "treeimm/tree.hpp"
#include "treeimm/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace treeimm;

nlohmann::json bipoly_json(const BiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b, c] : p.serialize()) arr.push_back({a, b, c});
    return arr;
}

int cmd_trees(int n, const std::string& format) {
    auto trees = all_trees(n);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& t : trees) {
            nlohmann::json jt;
            jt["code"] = canonical_code(t);
            jt["edges"] = nlohmann::json::array();
            for (auto [u, v] : t.edges()) jt["edges"].push_back({u, v});
            j.push_back(std::move(jt));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < trees.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << format_tree(trees[i]);
        }
    }
    return 0;
}

int cmd_poset(int n, const std::string& format) {
    HasseDiagram h = build_poset(n);
    if (format == "dot")
        std::cout << poset_to_dot(h);
    else
        std::cout << poset_to_json(h) << "\n";
    return 0;
}

Tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tree file: " + path);
    return parse_tree(in);
}

int cmd_moments(const std::string& tree_file, const std::string& q0_str,
                const std::string& format) {
    Tree t = load_tree(tree_file);
    Rational q0 = parse_rational(q0_str);
    nlohmann::json j = nlohmann::json::array();
    for (int i = 1; i <= t.n(); ++i) {
        BiPoly m = moment(t, i);
        if (format == "json") {
            nlohmann::json ji;
            ji["vertex"] = i;
            ji["moment"] = bipoly_json(m);
            ji["value_at_q0"] = rational_to_string(m.eval(q0, q0));
            j.push_back(std::move(ji));
        } else {
            std::cout << "vertex " << i << ": " << m.to_string() << "  [q0=" << q0_str << " -> "
                      << rational_to_string(m.eval(q0, q0)) << "]\n";
        }
    }
    if (format == "json") {
        nlohmann::json out;
        out["moments"] = std::move(j);
        if (q0 != 0) {
            nlohmann::json cent = nlohmann::json::array();
            for (int v : centroid_at(t, q0)) cent.push_back(v);
            out["centroid_at_q0"] = std::move(cent);
        }
        std::cout << out.dump(2) << "\n";
    } else if (q0 != 0) {
        std::cout << "centroid at q0=" << q0_str << ":";
        for (int v : centroid_at(t, q0)) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_coeffs(const std::string& tree_file, const std::string& lambda_str,
               const std::string& kind_str, int r_filter, const std::string& format,
               const std::string& q0_str, const std::string& t0_str) {
    Tree t = load_tree(tree_file);
    Partition lam = Partition::parse(lambda_str);
    if (lam.n() != t.n()) throw std::invalid_argument("lambda must be a partition of n");
    if (kind_str != "ed" && kind_str != "laplacian")
        throw std::invalid_argument("kind must be laplacian|ed");
    MatrixKind kind = kind_str == "ed" ? MatrixKind::ExpDistance : MatrixKind::QtLaplacian;
    CoeffTable table = coeff_table_for_kind(t, lam, kind);
    bool eval = !q0_str.empty();
    Rational q0, t0;
    if (eval) {
        q0 = parse_rational(q0_str);
        t0 = t0_str.empty() ? q0 : parse_rational(t0_str);
    }
    nlohmann::json arr = nlohmann::json::array();
    for (int r = 0; r <= t.n(); ++r) {
        if (r_filter >= 0 && r != r_filter) continue;
        const BiPoly& c = table.c[static_cast<size_t>(r)];
        if (format == "json") {
            nlohmann::json entry{{"r", r}, {"c", bipoly_json(c)}};
            if (eval) entry["value"] = rational_to_string(c.eval(q0, t0));
            arr.push_back(std::move(entry));
        } else {
            std::cout << "c[" << r << "] = " << c.to_string();
            if (eval) std::cout << "  [-> " << rational_to_string(c.eval(q0, t0)) << "]";
            std::cout << "\n";
        }
    }
    if (format == "json") {
        nlohmann::json out;
        out["lambda"] = lam.to_string();
        out["kind"] = kind_str;
        out["coefficients"] = std::move(arr);
        // the polynomial d_lambda(xI - M) by ascending power of x
        XPoly f = immanantal_polynomial(t, lam, kind);
        nlohmann::json xs = nlohmann::json::array();
        for (const auto& c : f.coeffs()) xs.push_back(bipoly_json(c));
        out["xpoly"] = std::move(xs);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_alphas(int n) {
    // CSV: one row per partition, one column per i
    std::cout << "lambda";
    for (int i = 0; 2 * i <= n; ++i) std::cout << ",i=" << i;
    std::cout << "\n";
    for (const auto& lam : partitions(n)) {
        std::cout << "\"" << lam.to_string() << "\"";
        for (int i = 0; 2 * i <= n; ++i) std::cout << "," << rational_to_string(alpha(lam, i));
        std::cout << "\n";
    }
    return 0;
}

int cmd_matrix(const std::string& tree_file, const std::string& kind) {
    Tree t = load_tree(tree_file);
    ArcWeighting w = ArcWeighting::canonical(t);
    PolyMatrix m(t.n());
    if (kind == "laplacian")
        m = q_laplacian(t);
    else if (kind == "qt-laplacian")
        m = qt_laplacian(t, w);
    else if (kind == "ed")
        m = exp_distance(t);
    else if (kind == "qt-ed")
        m = qt_exp_distance(t, w);
    else
        throw std::invalid_argument("matrix kind must be laplacian|qt-laplacian|ed|qt-ed");
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= t.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= t.n(); ++j) row.push_back(bipoly_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::json out{{"n", t.n()}, {"kind", kind}, {"entries", std::move(rows)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int n, const VerifyOptions& opts,
               const std::string& format) {
    VerifyReport rep = run_verify(suite, n, opts);
    if (format == "text")
        std::cout << report_to_text(rep);
    else
        std::cout << report_to_json(rep) << "\n";
    return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact immanantal-polynomial toolkit for trees and the generalized tree shift order"};
    app.require_subcommand(1);

    int n = 6;
    std::string format = "text";
    std::string suite = "all";
    std::string tree_file;
    std::string lambda_str = "all";
    std::string kind_str = "laplacian";
    std::string q0_str = "1";
    int r_filter = -1;
    int jobs = 0;
    bool max_n_override = false;

    auto* trees_cmd = app.add_subcommand("trees", "List isomorphism-class representatives");
    trees_cmd->add_option("--n", n, "vertex count")->required();
    trees_cmd->add_option("--format", format, "text|json");

    auto* poset_cmd = app.add_subcommand("poset", "Print the shift poset");
    poset_cmd->add_option("--n", n, "vertex count")->required();
    poset_cmd->add_option("--format", format, "json|dot");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "main|identities|injections|moments|ed|all");
    verify_cmd->add_option("--n", n, "vertex count")->required();
    verify_cmd->add_option("--lambda", lambda_str, "partition filter, e.g. 2,1,1 (default all)");
    verify_cmd->add_option("--r", r_filter, "coefficient index filter");
    std::string extra_q0;
    verify_cmd->add_option("--q0", extra_q0, "extra rational sample point for pointwise checks");
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    verify_cmd->add_option("--format", format, "json|text");
    verify_cmd->add_flag("--max-n-override", max_n_override, "allow n beyond the default guard of 8");

    auto* moments_cmd = app.add_subcommand("moments", "Per-vertex moments of a tree file");
    moments_cmd->add_option("--tree", tree_file, "tree file")->required();
    moments_cmd->add_option("--q0", q0_str, "evaluation point, e.g. 3/2");
    moments_cmd->add_option("--format", format, "text|json");

    auto* alphas_cmd = app.add_subcommand("alphas", "Character-sum constants as CSV");
    alphas_cmd->add_option("--n", n, "partition size")->required();

    std::string matrix_kind = "laplacian";
    auto* matrix_cmd = app.add_subcommand("matrix", "Row-major JSON of a tree matrix");
    matrix_cmd->add_option("--tree", tree_file, "tree file")->required();
    matrix_cmd->add_option("--kind", matrix_kind, "laplacian|qt-laplacian|ed|qt-ed");

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Immanantal coefficients of a tree file");
    coeffs_cmd->add_option("--tree", tree_file, "tree file")->required();
    coeffs_cmd->add_option("--lambda", lambda_str, "partition, e.g. 2,1,1")->required();
    coeffs_cmd->add_option("--kind", kind_str, "laplacian|ed");
    coeffs_cmd->add_option("--r", r_filter, "only this coefficient");
    std::string coeff_q0, coeff_t0;
    coeffs_cmd->add_option("--q0", coeff_q0, "also evaluate at this rational q");
    coeffs_cmd->add_option("--t0", coeff_t0, "t evaluation point (default: q0)");
    coeffs_cmd->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (trees_cmd->parsed()) return cmd_trees(n, format);
        if (poset_cmd->parsed()) return cmd_poset(n, format);
        if (alphas_cmd->parsed()) return cmd_alphas(n);
        if (matrix_cmd->parsed()) return cmd_matrix(tree_file, matrix_kind);
        if (moments_cmd->parsed()) return cmd_moments(tree_file, q0_str, format);
        if (coeffs_cmd->parsed())
            return cmd_coeffs(tree_file, lambda_str, kind_str, r_filter, format, coeff_q0, coeff_t0);
        if (verify_cmd->parsed()) {
            VerifyOptions opts;
            opts.jobs = jobs;
            opts.max_n_override = max_n_override;
            if (lambda_str != "all") opts.lambda_filter = Partition::parse(lambda_str);
            if (r_filter >= 0) opts.r_filter = r_filter;
            if (!extra_q0.empty()) opts.extra_q0 = parse_rational(extra_q0);
            if (format == "text" && !verify_cmd->get_option("--format")->count()) format = "json";
            return cmd_verify(suite, n, opts, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
