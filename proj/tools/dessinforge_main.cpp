// dessinforge: build, verify and catalog the Shabat polynomials and
// monodromy groups of the twelve two-tree passport families.
#include "dessinforge/enumerate.hpp"
#include "dessinforge/families.hpp"
#include "dessinforge/lemma_trees.hpp"
#include "dessinforge/monodromy.hpp"
#include "dessinforge/render.hpp"
#include "dessinforge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace dforge;
namespace fs = std::filesystem;

namespace {

algebra::Poly read_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return algebra::Poly::from_json(j);
}

dessins::Dessin read_dessin(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return dessins::Dessin::from_json(j);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

FamilyParams params_from_flags(const std::string& family, int r, int s, int t) {
    FamilyId id = family_from_string(family);
    return FamilyParams::make(id, r, s, t);
}

int run_family_build(const std::string& family, int r, int s, int t,
                     const std::string& outdir, bool as_json) {
    auto prm = params_from_flags(family, r, s, t);
    auto report = families::family_report(prm);
    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.text();
    if (!outdir.empty()) {
        fs::create_directories(outdir);
        std::string base = family_name(prm.id);
        write_file(fs::path(outdir) / (base + "_report.json"), report.to_json().dump(2) + "\n");
        write_file(fs::path(outdir) / (base + "_tree1.json"),
                   report.pair.p1.to_json().dump() + "\n");
        write_file(fs::path(outdir) / (base + "_tree2.json"),
                   report.pair.p2.to_json().dump() + "\n");
    }
    return report.ok ? 0 : 1;
}

int run_verify(const std::string& input, bool as_json) {
    auto rep = verify::shabat_report(read_poly(input));
    if (as_json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        std::cout << "shabat: " << (rep.is_shabat ? "true" : "false")
                  << ", values: " << rep.cv.distinct_count << "\n";
        if (rep.cv.values_known) {
            std::cout << "critical values:";
            for (const auto& v : rep.cv.values)
                std::cout << " " << v.str();
            std::cout << "\n";
        } else if (rep.cv.extension_required) {
            std::cout << "critical values: extension required\n";
        }
        if (rep.profiles_known)
            std::cout << "profiles: " << dessins::partition_str(rep.black_profile) << " | "
                      << dessins::partition_str(rep.white_profile) << "\n";
        if (rep.degenerate_single_value)
            std::cout << "note: fewer than two finite critical values (degenerate)\n";
    }
    return rep.is_shabat ? 0 : 1;
}

int run_passport(const std::string& input) {
    std::cout << verify::passport_from_poly(read_poly(input)).str() << "\n";
    return 0;
}

int run_enumerate(const std::string& passport, bool force, bool as_json) {
    auto p = dessins::Passport::parse(passport);
    auto trees = dessins::enumerate_trees(p, force);
    if (as_json) {
        nlohmann::json j;
        j["passport"] = p.str();
        j["count"] = trees.size();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : trees)
            arr.push_back(t.to_json());
        j["trees"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count: " << trees.size() << "\n";
        for (const auto& t : trees)
            std::cout << t.to_json().dump() << "\n";
    }
    return 0;
}

int run_monodromy(const std::string& family, int tree, int r, int s, int t,
                  const std::string& dessin_file, bool as_json) {
    if (!dessin_file.empty()) {
        auto d = read_dessin(dessin_file);
        auto rep = monodromy::report_for(monodromy::cartographic_group(d));
        if (as_json)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.table_row("dessin n=" + std::to_string(d.n())) << "\n";
        return 0;
    }
    auto prm = params_from_flags(family, r, s, t);
    std::vector<int> trees = tree == 0 ? std::vector<int>{1, 2} : std::vector<int>{tree};
    nlohmann::json arr = nlohmann::json::array();
    for (int k : trees) {
        auto d = monodromy::family_tree_dessin(prm, k);
        auto rep = monodromy::structure_check(d, prm, k);
        if (as_json) {
            nlohmann::json j = rep.to_json();
            j["family"] = family_name(prm.id);
            j["tree"] = k;
            arr.push_back(j);
        } else {
            std::cout << rep.table_row(prm.str() + " tree " + std::to_string(k)) << "\n";
        }
    }
    if (as_json)
        std::cout << arr.dump(2) << "\n";
    return 0;
}

int run_render(const std::string& dessin_file, const std::string& output, bool labels) {
    auto d = read_dessin(dessin_file);
    std::string svg = render::dessin_to_svg(d, labels);
    if (output.empty() || output == "-")
        std::cout << svg;
    else
        write_file(output, svg);
    return 0;
}

struct ReportRow {
    std::string family;
    std::string field;
    std::string groups_differ;
    std::string notes;
};

int run_report(const std::string& outdir) {
    bool all_ok = true;
    std::vector<ReportRow> table1;
    std::vector<std::string> group_table;
    std::vector<std::string> problems;
    std::vector<std::string> repairs_section;
    nlohmann::json full = nlohmann::json::array();

    struct Entry {
        FamilyParams prm;
        bool has_polynomials;
    };
    std::vector<Entry> entries = {
        {FamilyParams::make(FamilyId::F1, 1, 2, 3), true},
        {FamilyParams::make(FamilyId::F2, 1, 2), true},
        {FamilyParams::make(FamilyId::F3, 3, 5), true},
        {FamilyParams::make(FamilyId::F3, 5, 6), true},
        {FamilyParams::make(FamilyId::F4, 2, 3), true},
        {FamilyParams::make(FamilyId::F5, 2), true},
        {FamilyParams::make(FamilyId::F6, 2), true},
        {FamilyParams::make(FamilyId::F7), false},
        {FamilyParams::make(FamilyId::F8), false},
        {FamilyParams::make(FamilyId::F9), true},
        {FamilyParams::make(FamilyId::F10), true},
        {FamilyParams::make(FamilyId::F11), true},
        {FamilyParams::make(FamilyId::F12), true},
    };

    for (const auto& entry : entries) {
        const auto& prm = entry.prm;
        ReportRow row;
        row.family = prm.str();
        nlohmann::json jentry;
        jentry["family"] = row.family;

        if (entry.has_polynomials) {
            auto rep = families::family_report(prm);
            row.field = rep.field.name;
            if (!rep.field_note.empty()) {
                row.notes += "field-note; ";
                repairs_section.push_back(row.family + ": " + rep.field_note);
            }
            for (const auto& rpr : rep.pair.repairs)
                repairs_section.push_back(row.family + ": " + rpr);
            if (!rep.ok) {
                all_ok = false;
                problems.push_back(row.family + ": polynomial verification failed");
            }
            jentry["polynomials"] = rep.to_json();
        } else {
            row.field = prm.id == FamilyId::F7 ? "Q(sqrt(-14)) [catalogued]"
                                               : "Q(sqrt(21)) [catalogued]";
            row.notes += "polynomials catalogued externally; ";
        }

        // enumeration cross-check where the scale guard allows
        if (prm.degree() <= dessins::enumeration_scale_limit()) {
            std::size_t count = dessins::count_trees(prm.passport());
            jentry["tree_count"] = count;
            if (count != 2) {
                all_ok = false;
                problems.push_back(row.family + ": expected a two-tree passport, enumerated " +
                                   std::to_string(count));
            }
        } else {
            row.notes += "enumeration scale-guarded; ";
        }

        // monodromy for both trees
        nlohmann::json groups = nlohmann::json::array();
        std::vector<monodromy::GroupReport> reps;
        for (int tree = 1; tree <= 2; ++tree) {
            auto d = monodromy::family_tree_dessin(prm, tree);
            auto rep = monodromy::structure_check(d, prm, tree);
            reps.push_back(rep);
            group_table.push_back(rep.table_row(row.family + " tree " + std::to_string(tree)));
            nlohmann::json jg = rep.to_json();
            jg["tree"] = tree;
            groups.push_back(jg);
            if (rep.expected_order && !rep.order_matches_expected) {
                if (rep.expectation_questionable) {
                    if (tree == 1)
                        row.notes += "order differs from the flagged claim (computed " +
                                     rep.order.get_str() + "); ";
                    repairs_section.push_back(row.family + " tree " + std::to_string(tree) +
                                              ": computed order " + rep.order.get_str() +
                                              " vs claimed " + rep.expected_order->get_str() +
                                              " (" + rep.expected_provenance + ")");
                } else {
                    all_ok = false;
                    problems.push_back(row.family + " tree " + std::to_string(tree) +
                                       ": computed order " + rep.order.get_str() +
                                       " != expected " + rep.expected_order->get_str());
                }
            }
        }
        bool differ = !(reps[0].order == reps[1].order) ||
                      reps[0].primitive != reps[1].primitive;
        row.groups_differ = differ ? "yes" : "no";
        jentry["groups"] = groups;
        jentry["groups_differ"] = differ;
        table1.push_back(row);
        full.push_back(jentry);
    }

    std::cout << "fields of definition and Galois behaviour\n";
    std::cout << "------------------------------------------\n";
    for (const auto& row : table1)
        std::cout << "  " << row.family << "  field=" << row.field
                  << "  groups-differ=" << row.groups_differ
                  << (row.notes.empty() ? "" : "  [" + row.notes + "]") << "\n";
    std::cout << "\nmonodromy groups\n";
    std::cout << "----------------\n";
    for (const auto& line : group_table)
        std::cout << "  " << line << "\n";
    if (!repairs_section.empty()) {
        std::cout << "\napplied repairs and reported discrepancies\n";
        std::cout << "------------------------------------------\n";
        for (const auto& line : repairs_section)
            std::cout << "  " << line << "\n";
    }
    if (!problems.empty()) {
        std::cout << "\nfailures\n--------\n";
        for (const auto& p : problems)
            std::cout << "  " << p << "\n";
    }
    std::cout << "\noverall: " << (all_ok ? "ok" : "FAIL") << "\n";

    if (!outdir.empty()) {
        fs::create_directories(outdir);
        write_file(fs::path(outdir) / "report.json", full.dump(2) + "\n");
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dessinforge: Shabat polynomials and monodromy groups of the "
                 "two-tree passport families"};
    app.require_subcommand(1);

    // family build
    auto* family_cmd = app.add_subcommand("family", "construct a family's Shabat pair");
    family_cmd->require_subcommand(1);
    auto* build_cmd = family_cmd->add_subcommand("build", "build and verify both trees");
    std::string family_name_arg;
    int r = 0, s = 0, t = 0;
    std::string outdir;
    bool as_json = false;
    build_cmd->add_option("family", family_name_arg, "family id, F1..F12")->required();
    build_cmd->add_option("--r", r, "first parameter");
    build_cmd->add_option("--s", s, "second parameter");
    build_cmd->add_option("--t", t, "third parameter (F1 only)");
    build_cmd->add_option("-o,--out", outdir, "directory for the report and polynomial files");
    build_cmd->add_flag("--json", as_json, "JSON output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check the Shabat property of a polynomial");
    std::string verify_in;
    bool verify_json = false;
    verify_cmd->add_option("--in", verify_in, "polynomial JSON file")->required();
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    // passport
    auto* passport_cmd = app.add_subcommand("passport", "passport of a Shabat polynomial");
    std::string passport_in;
    passport_cmd->add_option("--in", passport_in, "polynomial JSON file")->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate the trees of a passport");
    std::string passport_str;
    bool force = false, enum_json = false;
    enum_cmd->add_option("--passport", passport_str, "passport, e.g. \"3,5,6;3,1^11;14\"")
        ->required();
    enum_cmd->add_flag("--force", force, "override the scale guard");
    enum_cmd->add_flag("--json", enum_json, "JSON output");

    // monodromy
    auto* mono_cmd = app.add_subcommand("monodromy", "cartographic group report");
    std::string mono_family, mono_dessin;
    int mono_tree = 0, mr = 0, ms = 0, mt = 0;
    bool mono_json = false;
    mono_cmd->add_option("--family", mono_family, "family id, F1..F12");
    mono_cmd->add_option("--tree", mono_tree, "tree index 1 or 2 (default: both)");
    mono_cmd->add_option("--r", mr, "first parameter");
    mono_cmd->add_option("--s", ms, "second parameter");
    mono_cmd->add_option("--t", mt, "third parameter");
    mono_cmd->add_option("--dessin", mono_dessin, "dessin JSON file instead of a family");
    mono_cmd->add_flag("--json", mono_json, "JSON output");

    // report
    auto* report_cmd = app.add_subcommand("report", "regenerate the whole catalog");
    bool report_all = false;
    std::string report_out;
    report_cmd->add_flag("--all", report_all, "run every family");
    report_cmd->add_option("-o,--out", report_out, "directory for report.json");

    // render
    auto* render_cmd = app.add_subcommand("render", "draw a dessin as SVG");
    std::string render_in, render_out;
    bool no_labels = false;
    render_cmd->add_option("--dessin", render_in, "dessin JSON file")->required();
    render_cmd->add_option("-o,--out", render_out, "output SVG file (default stdout)");
    render_cmd->add_flag("--no-edge-labels", no_labels, "omit edge numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build_cmd->parsed())
            return run_family_build(family_name_arg, r, s, t, outdir, as_json);
        if (verify_cmd->parsed())
            return run_verify(verify_in, verify_json);
        if (passport_cmd->parsed())
            return run_passport(passport_in);
        if (enum_cmd->parsed())
            return run_enumerate(passport_str, force, enum_json);
        if (mono_cmd->parsed()) {
            if (mono_family.empty() && mono_dessin.empty())
                throw CLI::ValidationError("monodromy", "need --family or --dessin");
            return run_monodromy(mono_family, mono_tree, mr, ms, mt, mono_dessin, mono_json);
        }
        if (report_cmd->parsed()) {
            if (!report_all)
                throw CLI::ValidationError("report", "only --all is available");
            return run_report(report_out);
        }
        if (render_cmd->parsed())
            return run_render(render_in, render_out, !no_labels);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
