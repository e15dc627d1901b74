#include "torifan/cli.hpp"

#include "torifan/catalog.hpp"
#include "torifan/classify.hpp"
#include "torifan/contraction.hpp"
#include "torifan/fan_json.hpp"
#include "torifan/isomorphism.hpp"
#include "torifan/polytope.hpp"
#include "torifan/primitive.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace torifan {

namespace {

using ojson = nlohmann::ordered_json;

// Raised for user-facing failures; becomes status error.
struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
    std::vector<std::string> details;
};

Fan load_fan(const std::string& source) {
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        auto named = find_named(source.substr(prefix.size()));
        if (!named)
            throw CommandError("unknown catalog name: " + source.substr(prefix.size()));
        return named->fan;
    }
    std::ifstream in(source);
    if (!in)
        throw CommandError("cannot read " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_fan(buf.str());
    } catch (const FanFormatError& e) {
        throw CommandError(source + ": " + e.what());
    }
}

Fan load_valid_fan(const std::string& source) {
    Fan fan = load_fan(source);
    const ValidationReport report = validate(fan);
    if (!report.ok()) {
        CommandError err(source + ": invalid fan");
        err.details = report.diagnostics();
        throw err;
    }
    return fan;
}

ojson cone_json(const Cone& c) {
    ojson out = ojson::array();
    for (int r : c)
        out.push_back(r);
    return out;
}

ojson relation_json(const PrimitiveRelation& r) {
    ojson coeffs = ojson::array();
    for (const Integer& a : r.coeffs)
        coeffs.push_back(json_integer(a));
    return ojson{{"collection", cone_json(r.collection)},
                 {"sigma", cone_json(r.sigma)},
                 {"coefficients", coeffs},
                 {"degree", r.degree}};
}

ojson verdict_json(const WeakenedVerdict& v) {
    ojson contractions = ojson::array();
    for (const CrepantContraction& c : v.crepant_contractions) {
        ojson item = relation_json(c.relation);
        item["kind"] = to_string(c.kind);
        contractions.push_back(item);
    }
    return ojson{{"is_weakened", v.is_weakened},
                 {"is_weak_fano", v.is_weak_fano},
                 {"is_fano", v.is_fano},
                 {"crepant_contractions", contractions}};
}

ojson expected_json(const NamedFan& nf) {
    ojson out = ojson::object();
    for (const auto& [k, v] : nf.expected)
        out[k] = json_integer(v);
    return out;
}

ojson report_json(const ClassificationReport& r) {
    ojson classes = ojson::array();
    for (const ClassEntry& e : r.classes) {
        ojson item{{"name", e.name},
                   {"key", e.key},
                   {"rays", e.rays},
                   {"picard", e.picard},
                   {"anticanonical_degree", json_integer(e.anticanonical_degree)},
                   {"is_fano", e.is_fano}};
        if (!e.fiber.empty())
            item["fiber"] = e.fiber;
        item["fan"] = to_json(e.fan);
        classes.push_back(item);
    }
    return ojson{{"count", r.count},
                 {"scope", r.scope},
                 {"matched_names", r.matched_names},
                 {"classes", classes}};
}

std::string report_table(const ClassificationReport& r, int dim) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "name" << std::setw(7) << "rays" << std::setw(5)
        << "rho" << std::setw(8) << ("(-K)^" + std::to_string(dim)) << "fiber\n";
    for (const ClassEntry& e : r.classes)
        out << std::setw(10) << (e.name.empty() ? "?" : e.name) << std::setw(7) << e.rays
            << std::setw(5) << e.picard << std::setw(8) << e.anticanonical_degree.str()
            << (e.fiber.empty() ? "-" : e.fiber) << "\n";
    out << r.count << " classes; scope: " << r.scope << "\n";
    return out.str();
}

int twist_bound_default() {
    if (const char* env = std::getenv("TORIFAN_TWIST_BOUND")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw CommandError(std::string("TORIFAN_TWIST_BOUND is not an integer: ") + env);
    }
    return 3;
}

void with_fan_arg(CLI::App* sub, std::string& file) {
    sub->add_option("fan", file, "JSON fan file or catalog:NAME")->required();
}

} // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    CLI::App app{"Smooth complete toric fans: validation, invariants, classification", "torifan"};
    app.require_subcommand(1);

    bool json = false;
    std::string file, file2, name;
    bool list = false;
    int twist_bound = 0;

    std::map<CLI::App*, std::function<void()>> actions;
    auto add = [&](const std::string& cmd, const std::string& help, std::function<void()> fn) {
        CLI::App* sub = app.add_subcommand(cmd, help);
        sub->add_flag("--json", json, "Pure JSON on standard output");
        actions[sub] = std::move(fn);
        return sub;
    };

    with_fan_arg(add("validate", "Check that a fan is smooth and complete", [&] {
        const Fan fan = load_fan(file);
        const ValidationReport report = validate(fan);
        ojson reasons = ojson::array();
        for (const Offense& o : report.offending)
            reasons.push_back(to_string(o.defect));
        result.payload = ojson{{"valid", report.ok()},
                               {"simplicial", report.is_simplicial},
                               {"smooth", report.is_smooth},
                               {"complete", report.is_complete},
                               {"reasons", reasons}};
        if (!report.ok()) {
            result.status = Status::Error;
            result.diagnostics = report.diagnostics();
        }
        result.text = report.ok() ? "valid: smooth and complete\n" : "invalid\n";
    }), file);

    with_fan_arg(add("analyze", "Primitive relations and anticanonical invariants", [&] {
        const Fan fan = load_valid_fan(file);
        const auto rels = primitive_collections(fan);
        const auto extremal = extremal_relations(fan, rels);
        ojson rj = ojson::array();
        for (std::size_t i = 0; i < rels.size(); ++i) {
            ojson item = relation_json(rels[i]);
            item["extremal"] =
                std::find(extremal.begin(), extremal.end(), i) != extremal.end();
            rj.push_back(item);
        }
        result.payload = ojson{{"dim", fan.dim},
                               {"rays", fan.ray_count()},
                               {"picard", fan.picard_number()},
                               {"is_fano", is_fano(rels)},
                               {"is_weak_fano", is_weak_fano(rels)}};
        if (is_weak_fano(rels))
            result.payload["anticanonical_degree"] = json_integer(anticanonical_degree(fan));
        result.payload["primitive_relations"] = rj;
        if (fan.dim == 3)
            result.payload["weakened"] = verdict_json(is_weakened_fano(fan));
    }), file);

    with_fan_arg(add("degree", "Anticanonical degree (-K)^d", [&] {
        const Fan fan = load_valid_fan(file);
        try {
            result.payload = ojson{{"anticanonical_degree", json_integer(anticanonical_degree(fan))}};
        } catch (const std::domain_error& e) {
            throw CommandError(e.what());
        }
        result.text = "(-K)^" + std::to_string(fan.dim) + " = " +
                      result.payload["anticanonical_degree"].dump() + "\n";
    }), file);

    with_fan_arg(add("is-fano", "All primitive relations have positive degree", [&] {
        result.payload = ojson{{"is_fano", is_fano(load_valid_fan(file))}};
    }), file);

    with_fan_arg(add("is-weak-fano", "All primitive relations have nonnegative degree", [&] {
        result.payload = ojson{{"is_weak_fano", is_weak_fano(load_valid_fan(file))}};
    }), file);

    with_fan_arg(add("is-weakened-fano", "Weakened Fano test for 3-folds", [&] {
        const Fan fan = load_valid_fan(file);
        if (fan.dim != 3)
            throw CommandError("is-weakened-fano needs a 3-dimensional fan");
        result.payload = verdict_json(is_weakened_fano(fan));
    }), file);

    {
        CLI::App* sub = add("isomorphic", "Search for a lattice isomorphism between two fans", [&] {
            const Fan a = load_valid_fan(file);
            const Fan b = load_valid_fan(file2);
            const auto iso = find_isomorphism(a, b);
            result.payload = ojson{{"isomorphic", iso.has_value()}};
            if (iso) {
                ojson m = ojson::array();
                const IntMatrix& mat = iso->matrix.matrix();
                for (Index i = 0; i < mat.rows(); ++i)
                    m.push_back(json_vector(mat.row(i).transpose()));
                result.payload["matrix"] = m;
                result.payload["ray_permutation"] = iso->ray_permutation;
            }
        });
        sub->add_option("first", file, "JSON fan file or catalog:NAME")->required();
        sub->add_option("second", file2, "JSON fan file or catalog:NAME")->required();
    }

    {
        CLI::App* sub = add("catalog", "List the catalog or dump a named fan", [&] {
            if (list || name.empty()) {
                ojson surf = ojson::array(), three = ojson::array();
                for (const NamedFan& nf : surfaces())
                    surf.push_back(ojson{{"name", nf.name}, {"expected", expected_json(nf)}});
                for (const NamedFan& nf : threefolds())
                    three.push_back(ojson{{"name", nf.name},
                                          {"fiber", nf.fiber},
                                          {"expected", expected_json(nf)}});
                result.payload = ojson{{"surfaces", surf}, {"threefolds", three}};
                return;
            }
            auto nf = find_named(name);
            if (!nf)
                throw CommandError("unknown catalog name: " + name);
            result.payload = to_json(nf->fan);
        });
        sub->add_flag("--list", list, "Print every name with its expected invariants");
        sub->add_option("name", name, "Catalog name");
    }

    add("classify-surfaces", "Enumerate smooth toric weak del Pezzo surfaces", [&] {
        const ClassificationReport r = enumerate_weak_del_pezzo();
        result.payload = report_json(r);
        result.text = report_table(r, 2);
    });

    {
        CLI::App* sub = add("classify-3folds", "Enumerate toric weakened Fano 3-folds", [&] {
            const int bound = twist_bound ? twist_bound : twist_bound_default();
            if (bound < 3)
                throw CommandError("twist bound must be at least 3");
            const ClassificationReport r = enumerate_weakened_threefolds(bound);
            result.payload = report_json(r);
            result.payload["twist_bound"] = bound;
            result.text = report_table(r, 3);
        });
        sub->add_option("--twist-bound", twist_bound, "Search bound for twist coordinates");
    }

    add("verify", "Run both classifications and cross-check the catalog", [&] {
        const VerificationSummary s = verify_classification(twist_bound_default());
        ojson items = ojson::array();
        std::ostringstream text;
        for (const Assertion& a : s.assertions) {
            items.push_back(ojson{{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
            text << (a.passed ? "PASS " : "FAIL ") << a.name << "  " << a.detail << "\n";
        }
        result.payload = ojson{{"all_passed", s.all_passed()}, {"assertions", items}};
        result.text = text.str();
        if (!s.all_passed()) {
            result.status = Status::Error;
            result.diagnostics.push_back("verification failed");
        }
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = Status::Error;
        result.payload = ojson{{"status", "error"}, {"diagnostics", {e.what()}}};
        result.diagnostics.push_back(e.what());
        return result;
    }
    result.json = json;

    try {
        for (CLI::App* sub : app.get_subcommands())
            actions.at(sub)();
    } catch (const CommandError& e) {
        result.status = Status::Error;
        result.diagnostics.push_back(e.what());
        result.diagnostics.insert(result.diagnostics.end(), e.details.begin(), e.details.end());
    } catch (const std::exception& e) {
        result.status = Status::Error;
        result.diagnostics.push_back(e.what());
    }
    if (result.status == Status::Error && !result.payload.contains("status")) {
        ojson body{{"status", "error"}, {"diagnostics", result.diagnostics}};
        if (!result.payload.is_null())
            body["result"] = result.payload;
        result.payload = body;
    }
    return result;
}

std::string render(const CommandResult& result) {
    if (result.json)
        return result.payload.dump(2) + "\n";
    std::string out = result.text;
    if (!result.payload.is_null())
        out += result.payload.dump(2) + "\n";
    return out;
}

} // namespace torifan
