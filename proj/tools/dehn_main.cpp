#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dehn/census.hpp"
#include "dehn/diagram.hpp"
#include "dehn/errors.hpp"
#include "dehn/group.hpp"
#include "dehn/io.hpp"
#include "dehn/surgery.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitValidationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Input {
    bool is_diagram = false;
    dehn::DiagramDocument diagram;
    dehn::PresentationDocument presentation;
    std::string raw;
    std::string path;

    const dehn::HakenPresentation& pres() const {
        return is_diagram ? diagram.diagram.pres : presentation.presentation;
    }
    const std::vector<std::string>& pair_names() const {
        return is_diagram ? diagram.pair_names : presentation.pair_names;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dehn::error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dehn::error("cannot write '" + path + "'");
    out << text;
}

Input load(const std::string& path) {
    Input input;
    input.path = path;
    input.raw = read_file(path);
    std::istringstream scan(input.raw);
    std::string first_word;
    scan >> first_word;
    if (first_word == "hpres") {
        input.presentation = dehn::parse_presentation(input.raw);
        input.is_diagram = false;
    } else {
        input.diagram = dehn::parse_diagram(input.raw);
        input.is_diagram = true;
    }
    return input;
}

dehn::ValidationReport validate_input(const Input& input) {
    return input.is_diagram ? dehn::validate_diagram(input.diagram.diagram)
                            : dehn::validate_presentation(input.presentation.presentation);
}

void print_findings(const dehn::ValidationReport& report) {
    if (report.pass()) {
        std::cout << "pass: all checked necessary conditions hold\n";
        return;
    }
    for (const dehn::Finding& f : report.findings) {
        std::cout << (f.severity == dehn::Severity::error ? "error" : "warning") << " ["
                  << f.constraint << "] " << f.detail << "\n";
    }
}

void maybe_write_report(const Input& input, const std::string& json_path) {
    if (json_path.empty()) return;
    const std::string json =
        input.is_diagram
            ? dehn::diagram_report_json(input.diagram, input.path, input.raw)
            : dehn::presentation_report_json(input.presentation, input.path, input.raw);
    write_file(json_path, json);
}

int require_valid(const Input& input) {
    const dehn::ValidationReport report = validate_input(input);
    if (!report.pass()) {
        print_findings(report);
        return kExitValidationFail;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Johansson diagrams of filling Dehn spheres: validation, diagram groups, "
                 "homology, connected sums and census runs"};
    app.require_subcommand(1);

    std::string file1, file2, out_path, json_path, dot_path, dump_dir;
    int site1_face = 0, site1_pos = 0, site2_face = 0, site2_pos = 0;
    int triple_points = 2, max_pairs = -1, threads = 1;

    auto* cmd_validate = app.add_subcommand("validate", "check a jdiag/hpres file");
    cmd_validate->add_option("file", file1)->required();
    cmd_validate->add_option("--json", json_path, "write the JSON report here");

    auto* cmd_classify = app.add_subcommand("classify", "triple point types of each triplet");
    cmd_classify->add_option("file", file1)->required();
    cmd_classify->add_option("--json", json_path);

    auto* cmd_group = app.add_subcommand("group", "diagram group presentation");
    cmd_group->add_option("file", file1)->required();
    cmd_group->add_option("--json", json_path);

    auto* cmd_h1 = app.add_subcommand("h1", "first homology of the presented group");
    cmd_h1->add_option("file", file1)->required();
    cmd_h1->add_option("--json", json_path);

    auto* cmd_faces = app.add_subcommand("faces", "face cycles of an embedded diagram");
    cmd_faces->add_option("file", file1)->required();
    cmd_faces->add_option("--json", json_path);

    auto* cmd_sum = app.add_subcommand("sum", "diagram-level connected sum");
    cmd_sum->add_option("file1", file1)->required();
    cmd_sum->add_option("file2", file2)->required();
    cmd_sum->add_option("--site1", site1_face, "face index on the first diagram");
    cmd_sum->add_option("--pos1", site1_pos, "boundary position on that face");
    cmd_sum->add_option("--site2", site2_face, "face index on the mirrored second diagram");
    cmd_sum->add_option("--pos2", site2_pos);
    cmd_sum->add_option("-o,--out", out_path, "output jdiag path ('-' for stdout)")->required();

    auto* cmd_census = app.add_subcommand("census", "enumerate Haken presentations");
    cmd_census->add_option("--triple-points", triple_points)->required();
    cmd_census->add_option("--max-pairs", max_pairs);
    cmd_census->add_option("--json", json_path);
    cmd_census->add_option("--threads", threads);
    cmd_census->add_option("--dump-dir", dump_dir, "write each class as an hpres file");

    auto* cmd_render = app.add_subcommand("render", "DOT rendering of the crossing graph");
    cmd_render->add_option("file", file1)->required();
    cmd_render->add_option("--dot", dot_path, "output path ('-' for stdout)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_validate->parsed()) {
            const Input input = load(file1);
            const dehn::ValidationReport report = validate_input(input);
            print_findings(report);
            maybe_write_report(input, json_path);
            return report.pass() ? kExitPass : kExitValidationFail;
        }

        if (cmd_classify->parsed()) {
            const Input input = load(file1);
            const auto& h = input.pres();
            for (size_t ti = 0; ti < h.triplets.size(); ++ti) {
                const dehn::Triplet& t = h.triplets[ti];
                std::cout << "t" << ti << " ("
                          << dehn::curve_display_name(h, t.letters[0], &input.pair_names()) << ","
                          << dehn::curve_display_name(h, t.letters[1], &input.pair_names()) << ","
                          << dehn::curve_display_name(h, t.letters[2], &input.pair_names()) << ") "
                          << dehn::to_string(dehn::classify_triplet(t, h.pairing)) << "\n";
            }
            maybe_write_report(input, json_path);
            return kExitPass;
        }

        if (cmd_group->parsed()) {
            const Input input = load(file1);
            if (const int rc = require_valid(input); rc != kExitPass) return rc;
            const dehn::GroupPresentation g = dehn::presentation_from(input.pres());
            std::cout << "generators: " << g.generators << "\n";
            for (const auto& rel : g.relators) {
                std::cout << "relator:";
                for (int letter : rel) {
                    const int pair = std::abs(letter) - 1;
                    std::cout << ' '
                              << input.pair_names()[static_cast<size_t>(pair)]
                              << (letter < 0 ? "^-1" : "");
                }
                std::cout << "\n";
            }
            maybe_write_report(input, json_path);
            return kExitPass;
        }

        if (cmd_h1->parsed()) {
            const Input input = load(file1);
            if (const int rc = require_valid(input); rc != kExitPass) return rc;
            std::cout << dehn::recognize(dehn::h1(input.pres())) << "\n";
            maybe_write_report(input, json_path);
            return kExitPass;
        }

        if (cmd_faces->parsed()) {
            const Input input = load(file1);
            if (!input.is_diagram) {
                std::cerr << "faces: input must be a jdiag file\n";
                return kExitUsage;
            }
            const auto cycles = dehn::faces(input.diagram.diagram);
            const dehn::EdgeIndex edges(input.diagram.diagram);
            std::cout << "faces: " << cycles.size() << "\n";
            for (size_t i = 0; i < cycles.size(); ++i) {
                std::cout << "f" << i << ":";
                for (const dehn::Dart& dart : cycles[i]) {
                    const auto [c, pos] = edges.curve_pos(dart.edge);
                    std::cout << ' '
                              << dehn::curve_display_name(input.pres(), c, &input.pair_names())
                              << '[' << pos << (dart.forward ? "+" : "-") << ']';
                }
                std::cout << "\n";
            }
            maybe_write_report(input, json_path);
            const dehn::ValidationReport report = validate_input(input);
            return report.pass() ? kExitPass : kExitValidationFail;
        }

        if (cmd_sum->parsed()) {
            const Input a = load(file1);
            const Input b = load(file2);
            if (!a.is_diagram || !b.is_diagram) {
                std::cerr << "sum: both inputs must be jdiag files\n";
                return kExitUsage;
            }
            const dehn::JohanssonDiagram result =
                dehn::connected_sum(a.diagram.diagram, b.diagram.diagram,
                                    {site1_face, site1_pos}, {site2_face, site2_pos});
            write_file(out_path, dehn::serialize_diagram(result));
            if (out_path != "-") {
                std::cout << "triple points: " << result.triple_point_count() << "\n";
                std::cout << "h1: " << dehn::recognize(dehn::h1(result.pres)) << "\n";
            }
            return kExitPass;
        }

        if (cmd_census->parsed()) {
            dehn::CensusQuery q;
            q.triple_points = triple_points;
            q.max_pairs = max_pairs;
            q.threads = threads;
            const dehn::CensusResult result = dehn::census_h1(q);
            long long total = 0;
            for (const dehn::CensusRow& row : result.counts) total += row.count;
            std::cout << "triple points: " << result.triple_points << "\n";
            std::cout << "classes: " << total << "\n";
            for (const dehn::CensusRow& row : result.counts) {
                std::cout << "  pairs " << row.pairs << ": " << row.count << "\n";
            }
            std::cout << "h1 histogram:\n";
            for (const auto& e : result.histogram) {
                std::cout << "  " << e.name << ": " << e.count << "\n";
            }
            std::cout << "verdicts: no_z3_z3=" << (result.no_z3_z3 ? "yes" : "no")
                      << " small_k_cyclic=" << (result.small_k_cyclic ? "yes" : "no")
                      << " candidate_list_ok=" << (result.candidate_list_ok ? "yes" : "no")
                      << " bound_ok=" << (result.bound_ok ? "yes" : "no") << "\n";
            if (!json_path.empty()) write_file(json_path, dehn::census_result_json(result));
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                for (size_t i = 0; i < result.presentations.size(); ++i) {
                    std::ostringstream name;
                    name << dump_dir << "/" << std::setw(5) << std::setfill('0') << i << ".hpres";
                    write_file(name.str(), dehn::serialize_presentation(result.presentations[i].pres));
                }
            }
            return kExitPass;
        }

        if (cmd_render->parsed()) {
            const Input input = load(file1);
            write_file(dot_path, dehn::render_dot(input.pres(), &input.pair_names()));
            return kExitPass;
        }
    } catch (const dehn::parse_error& e) {
        std::cerr << file1 << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const dehn::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const dehn::precondition_error& e) {
        std::cerr << e.what() << "\n";
        return kExitValidationFail;
    } catch (const dehn::error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
