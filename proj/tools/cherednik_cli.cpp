// Batch command-line front end. Subcommands:
//
//   kostka        restricted Kostka polynomials (check or restricted variant)
//   character     graded character of the spherical part
//   classify      parameters of the calibrated irreducibles
//   verify        mechanical check of the algebra presentations
//   fusion-check  tableau counts against the Verlinde path count
//
// Every run is deterministic for fixed flags. Output formats: table
// (default), json, csv. Exit codes: 0 success, 2 invalid input, 3 internal
// invariant violation or suite failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherednik/cherednik.hpp"

namespace {

using nlohmann::json;
using namespace cherednik;

enum class Format { table, js, csv };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::js;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected table, json or csv)");
}

Level parse_level(const std::string& s) {
    if (s == "inf") return Level::unbounded();
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0)
        throw std::invalid_argument("level must be a nonnegative integer or 'inf'");
    return Level::of(v);
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json shape_json(const Partition& p) {
    json a = json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

std::string coeff_list(const std::vector<long long>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int resolve_rows(int rows, const Partition& shape) {
    return rows > 0 ? rows : std::max(1, shape.length());
}

int cmd_kostka(const Partition& shape, int rows, const Level& level, const std::string& variant,
               Format format) {
    if (variant != "check" && variant != "restricted")
        throw std::invalid_argument("variant must be 'check' or 'restricted'");
    const int m = resolve_rows(rows, shape);
    const IntPolynomial kcheck = restricted_kostka_check(shape, m, level);
    const IntPolynomial k = restricted_kostka(shape, m, level);
    const long long count = kcheck.at_one();
    const IntPolynomial& shown = variant == "check" ? kcheck : k;

    switch (format) {
    case Format::table:
        std::cout << shown.to_string() << "\n";
        std::cout << "count = " << count << "\n";
        break;
    case Format::js: {
        json out;
        out["shape"] = shape_json(shape);
        out["m"] = m;
        if (level.is_unbounded())
            out["level"] = "inf";
        else
            out["level"] = level.value();
        out["kcheck"] = kcheck.to_string();
        out["k"] = k.to_string();
        out["count"] = count;
        std::cout << out.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "shape,m,level,variant,polynomial,count\n";
        std::cout << csv_field(shape.to_string()) << "," << m << "," << level.to_string() << ","
                  << variant << "," << csv_field(shown.to_string()) << "," << count << "\n";
        break;
    }
    return 0;
}

int cmd_character(int kappa, int rows, const Partition& shape, int order, Format format) {
    const int m = resolve_rows(rows, shape);
    const OffsetSeries series = character(kappa, m, shape, order);

    switch (format) {
    case Format::table:
        std::cout << "offset = " << series.offset().to_string() << "\n";
        std::cout << "coeffs = [" << coeff_list(series.coeffs(), ", ") << "]\n";
        break;
    case Format::js: {
        json out;
        out["kappa"] = kappa;
        out["m"] = m;
        out["shape"] = shape_json(shape);
        out["offset"] = series.offset().fraction_string();
        out["order"] = series.order();
        out["coeffs"] = series.coeffs();
        std::cout << out.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "kappa,m,shape,offset,order,coeffs\n";
        std::cout << kappa << "," << m << "," << csv_field(shape.to_string()) << ","
                  << series.offset().fraction_string() << "," << series.order() << ","
                  << csv_field(coeff_list(series.coeffs(), " ")) << "\n";
        break;
    }
    return 0;
}

int cmd_classify(int kappa, int n, Format format) {
    const auto classes = classify_calibrated(kappa, n);
    json arr = json::array();
    if (format == Format::csv) std::cout << "m,shape,c_lambda,count\n";
    for (const auto& entry : classes) {
        const Rational c = conformal_weight(entry.shape, entry.m, kappa);
        const long long count =
            restricted_kostka_check(entry.shape, entry.m, Level::of(kappa - entry.m)).at_one();
        switch (format) {
        case Format::table:
            std::cout << "m=" << entry.m << " shape=" << entry.shape.to_string()
                      << " C=" << c.to_string() << " count=" << count << "\n";
            break;
        case Format::js: {
            json one;
            one["m"] = entry.m;
            one["shape"] = shape_json(entry.shape);
            one["c_lambda"] = c.fraction_string();
            one["count"] = count;
            arr.push_back(one);
            break;
        }
        case Format::csv:
            std::cout << entry.m << "," << csv_field(entry.shape.to_string()) << ","
                      << c.fraction_string() << "," << count << "\n";
            break;
        }
    }
    if (format == Format::js) std::cout << arr.dump() << "\n";
    if (format == Format::table) std::cout << classes.size() << " calibrated classes\n";
    return 0;
}

int cmd_verify(int n, const std::string& suite_name, Format format) {
    if (n < 1 || n > 4) throw std::invalid_argument("verify: n must lie in [1, 4]");
    std::vector<std::pair<std::string, Suite>> suites;
    if (suite_name == "rat" || suite_name == "all") suites.push_back({"rat", Suite::rational});
    if (suite_name == "trig" || suite_name == "all")
        suites.push_back({"trig", Suite::trigonometric});
    if (suite_name == "embedding" || suite_name == "all")
        suites.push_back({"embedding", Suite::embedding});
    if (suites.empty())
        throw std::invalid_argument("suite must be rat, trig, embedding or all");

    bool all_ok = true;
    json arr = json::array();
    if (format == Format::csv) std::cout << "suite,relation,status,residual_term_count\n";
    for (const auto& [label, suite] : suites) {
        const VerificationReport report = verify_relations(n, suite);
        for (const auto& check : report.checks) {
            all_ok = all_ok && check.ok();
            switch (format) {
            case Format::table:
                std::cout << "[" << label << "] " << check.name << ": "
                          << (check.ok() ? "OK" : "FAIL (" + std::to_string(check.residual_terms) +
                                                      " residual terms)")
                          << "\n";
                break;
            case Format::js: {
                json one;
                one["suite"] = label;
                one["relation"] = check.name;
                one["status"] = check.ok() ? "ok" : "fail";
                one["residual_term_count"] = check.residual_terms;
                arr.push_back(one);
                break;
            }
            case Format::csv:
                std::cout << label << "," << csv_field(check.name) << ","
                          << (check.ok() ? "ok" : "fail") << "," << check.residual_terms << "\n";
                break;
            }
        }
    }
    if (format == Format::js) std::cout << arr.dump() << "\n";
    if (format == Format::table)
        std::cout << (all_ok ? "all relations verified" : "RELATION FAILURES PRESENT") << "\n";
    return all_ok ? 0 : 3;
}

int cmd_fusion_check(int m, int level, int n, double tol, Format format) {
    if (level < 1 && m != 1)
        throw std::invalid_argument("fusion-check: level must be >= 1 for rows >= 2");
    const auto shapes = enumerate_lambda_plus(level + m, m, n);
    bool all_match = true;
    json arr = json::array();
    if (format == Format::csv) std::cout << "shape,tableaux,verlinde,match\n";
    for (const auto& shape : shapes) {
        const long long tableaux = restricted_kostka_check(shape, m, Level::of(level)).at_one();
        const long long verlinde = verlinde_path_count(m, level, n, shape, tol);
        const bool match = tableaux == verlinde;
        all_match = all_match && match;
        switch (format) {
        case Format::table:
            std::cout << shape.to_string() << ": " << tableaux << " = " << verlinde
                      << (match ? " ok" : " MISMATCH") << "\n";
            break;
        case Format::js: {
            json one;
            one["shape"] = shape_json(shape);
            one["tableaux"] = tableaux;
            one["verlinde"] = verlinde;
            one["match"] = match;
            arr.push_back(one);
            break;
        }
        case Format::csv:
            std::cout << csv_field(shape.to_string()) << "," << tableaux << "," << verlinde << ","
                      << (match ? "true" : "false") << "\n";
            break;
        }
    }
    if (format == Format::js) std::cout << arr.dump() << "\n";
    if (format == Format::table)
        std::cout << shapes.size() << " shapes checked"
                  << (all_match ? "" : ", MISMATCHES PRESENT") << "\n";
    return all_match ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted Kostka polynomials and Cherednik algebra characters"};
    app.require_subcommand(1);

    std::string shape_text;
    std::string level_text = "inf";
    std::string variant = "check";
    std::string format_text = "table";
    std::string suite_name = "all";
    int rows = 0;
    int kappa = 1;
    int n = 1;
    int order = 20;
    double tol = 1e-6;

    auto* kostka = app.add_subcommand("kostka", "restricted Kostka polynomial of a shape");
    kostka->add_option("--shape", shape_text, "partition, e.g. 2,1")->required();
    kostka->add_option("--rows", rows, "number of rows m (default: length of shape)");
    kostka->add_option("--level", level_text, "restriction level, integer or 'inf'");
    kostka->add_option("--variant", variant, "check (cocharge form) or restricted (reversal)");
    kostka->add_option("--format", format_text, "table, json or csv");

    auto* character_cmd = app.add_subcommand("character", "graded character of a spherical part");
    character_cmd->add_option("--kappa", kappa, "parameter kappa (positive integer)")->required();
    character_cmd->add_option("--rows", rows, "number of rows m (default: length of shape)");
    character_cmd->add_option("--shape", shape_text, "partition in Lambda^+_kappa(m, n)")
        ->required();
    character_cmd->add_option("--order", order, "truncation order (default 20)");
    character_cmd->add_option("--format", format_text, "table, json or csv");

    auto* classify = app.add_subcommand("classify", "calibrated parameters for given kappa, n");
    classify->add_option("--kappa", kappa, "parameter kappa (positive integer)")->required();
    classify->add_option("--n", n, "number of boxes")->required();
    classify->add_option("--format", format_text, "table, json or csv");

    auto* verify = app.add_subcommand("verify", "check the defining relations mechanically");
    verify->add_option("--n", n, "rank (at most 4)")->required();
    verify->add_option("--suite", suite_name, "rat, trig, embedding or all");
    verify->add_option("--format", format_text, "table, json or csv");

    auto* fusion = app.add_subcommand("fusion-check", "tableau counts vs Verlinde path counts");
    fusion->add_option("--rows", rows, "number of rows m")->required();
    fusion->add_option("--level", level_text, "restriction level (integer)")->required();
    fusion->add_option("--n", n, "number of boxes")->required();
    fusion->add_option("--tol", tol, "integrality tolerance (default 1e-6)");
    fusion->add_option("--format", format_text, "table, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_text);
        if (kostka->parsed())
            return cmd_kostka(Partition::parse(shape_text), rows, parse_level(level_text),
                              variant, format);
        if (character_cmd->parsed())
            return cmd_character(kappa, rows, Partition::parse(shape_text), order, format);
        if (classify->parsed()) return cmd_classify(kappa, n, format);
        if (verify->parsed()) return cmd_verify(n, suite_name, format);
        if (fusion->parsed()) {
            const Level level = parse_level(level_text);
            if (level.is_unbounded())
                throw std::invalid_argument("fusion-check: level must be a finite integer");
            return cmd_fusion_check(rows, level.value(), n, tol, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
