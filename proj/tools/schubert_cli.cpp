// Command-line front end: Schubert products, tangent Chern classes, dual
// profiles and the reproduction targets.
//
// Exit codes: 0 success, 2 invalid input, 3 degenerate embedding,
// 4 anchor regression.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/report.hpp"

namespace {

using namespace schubert;

json element_terms(const RingElement& u) {
    json terms = json::array();
    const auto& ctx = *u.context();
    std::vector<std::pair<BasisKey, Int>> sorted(u.support().begin(), u.support().end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        int da = ctx.key_degree(a.first), db = ctx.key_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    for (const auto& [key, coeff] : sorted) {
        json t;
        t["class"] = ctx.render_key(key);
        t["degree"] = ctx.key_degree(key);
        t["coefficient"] = json_int(coeff);
        terms.push_back(std::move(t));
    }
    return terms;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw invalid_input("cannot write to '" + out_path + "'");
    out << text;
}

int run_mult(const std::string& ctx_text, const std::string& expr, int ceiling, bool as_json) {
    auto ctx = parse_context(ctx_text, ceiling);
    RingElement result = parse_class_expr(ctx, expr);
    if (as_json) {
        json doc;
        doc["schema_version"] = 1;
        doc["context"] = ctx->descriptor();
        doc["input"] = expr;
        doc["result"] = render_element(result);
        doc["terms"] = element_terms(result);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << render_element(result) << "\n";
    }
    return 0;
}

int run_chern(const std::string& ctx_text, int ceiling, bool as_json) {
    auto ctx = parse_context(ctx_text, ceiling);
    auto pieces = ctx->tangent_chern();
    if (as_json) {
        json doc;
        doc["schema_version"] = 1;
        doc["context"] = ctx->descriptor();
        doc["pieces"] = json::array();
        for (std::size_t d = 0; d < pieces.size(); ++d) {
            json p;
            p["degree"] = d;
            p["value"] = render_element(pieces[d]);
            p["terms"] = element_terms(pieces[d]);
            doc["pieces"].push_back(std::move(p));
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t d = 0; d < pieces.size(); ++d)
            std::cout << "c_" << d << " = " << render_element(pieces[d]) << "\n";
    }
    return 0;
}

int run_dual(const std::string& ctx_text, const std::vector<std::string>& args, int ceiling,
             bool as_json) {
    auto ctx = parse_context(ctx_text, ceiling);
    int k = 0;
    std::string h_text;
    for (const auto& arg : args) {
        if (arg.rfind("k=", 0) == 0) {
            try {
                k = std::stoi(arg.substr(2));
            } catch (const std::exception&) {
                throw invalid_input("bad section count '" + arg + "'");
            }
            if (k < 0) throw invalid_input("section count must be nonnegative");
        } else if (arg.rfind("H=", 0) == 0) {
            h_text = arg.substr(2);
        } else {
            throw invalid_input("unexpected argument '" + arg + "' (want k=<int> or H=<class>)");
        }
    }
    if (h_text.empty()) throw invalid_input("dual needs an H=<class> argument");
    RingElement H = parse_hyperplane(ctx, h_text);
    SectionSpec spec{EmbeddingSpec(ctx, std::move(H)),
                     std::vector<int>(static_cast<std::size_t>(k), 1)};
    DualProfile profile = dual_profile(spec);

    json doc;
    doc["delta"] = json::array();
    for (const auto& d : profile.delta) doc["delta"].push_back(json_int(d));
    doc["defect"] = profile.defect;
    doc["codegree"] = json_int(profile.codegree);
    doc["annotations"] = profile.annotations;
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "delta    = " << doc["delta"].dump() << "\n";
        std::cout << "defect   = " << profile.defect << "\n";
        std::cout << "codegree = " << profile.codegree.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert calculus, Chern classes and dual-variety invariants"};
    app.require_subcommand(1);
    int ceiling = schubert::kDefaultCeiling;
    app.add_option("--ceiling", ceiling, "dimension ceiling for context construction")
        ->capture_default_str();

    auto* mult = app.add_subcommand("mult", "expand a product of basis classes");
    std::string mult_ctx, mult_expr;
    bool mult_json = false;
    mult->add_option("ctx", mult_ctx, "context descriptor, e.g. gr:2,5")->required();
    mult->add_option("expr", mult_expr, "class expression, e.g. \"s[2,1]*s[1]\"")->required();
    mult->add_flag("--json", mult_json, "machine-readable output");

    auto* chern = app.add_subcommand("chern", "tangent Chern classes of a context");
    std::string chern_ctx;
    bool chern_json = false;
    chern->add_option("ctx", chern_ctx, "context descriptor")->required();
    chern->add_flag("--json", chern_json, "machine-readable output");

    auto* dual = app.add_subcommand("dual", "delta sequence, dual defect and codegree");
    std::string dual_ctx;
    std::vector<std::string> dual_args;
    bool dual_json = false;
    dual->add_option("ctx", dual_ctx, "context descriptor")->required();
    dual->add_option("args", dual_args, "k=<linear sections> and H=<class>");
    dual->add_flag("--json", dual_json, "machine-readable output");

    auto* reproduce = app.add_subcommand("reproduce", "regenerate a reference report");
    std::string target, out_path;
    bool rep_json = false, rep_md = false;
    schubert::ReportOptions opt;
    reproduce->add_option("target", target,
                          "chern-matrices | table1 | knop-examples | slopes")
        ->required();
    reproduce->add_flag("--json", rep_json, "JSON report");
    reproduce->add_flag("--md", rep_md, "markdown report (default)");
    reproduce->add_option("--out", out_path, "write the report to a file");
    reproduce->add_option("--data", opt.data_dir, "directory holding registry.json and errata.json")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*mult) return run_mult(mult_ctx, mult_expr, ceiling, mult_json);
        if (*chern) return run_chern(chern_ctx, ceiling, chern_json);
        if (*dual) return run_dual(dual_ctx, dual_args, ceiling, dual_json);
        if (*reproduce) {
            if (rep_json && rep_md)
                throw schubert::invalid_input("choose one of --json or --md");
            opt.as_json = rep_json;
            opt.ceiling = ceiling;
            emit(schubert::reproduce(target, opt), out_path);
            return 0;
        }
    } catch (const schubert::anchor_regression& e) {
        std::cerr << "anchor regression: " << e.what() << "\n";
        return 4;
    } catch (const schubert::degenerate_embedding& e) {
        std::cerr << "degenerate embedding: " << e.what() << "\n";
        return 3;
    } catch (const schubert::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const schubert::context_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
