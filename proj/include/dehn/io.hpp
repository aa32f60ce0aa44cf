#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dehn/census.hpp"
#include "dehn/diagram.hpp"
#include "dehn/group.hpp"

namespace dehn {

// A parsed jdiag file: the diagram plus the names used in the file. Sister
// curves are written as the pair name with a trailing '*'.
struct DiagramDocument {
    JohanssonDiagram diagram;
    std::vector<std::string> pair_names;
    std::vector<std::string> point_names;
};

struct PresentationDocument {
    HakenPresentation presentation;
    std::vector<std::string> pair_names;
};

// Throws parse_error with a distinct code and line/column on malformed input.
DiagramDocument parse_diagram(std::string_view text);
PresentationDocument parse_presentation(std::string_view text);

std::string serialize_diagram(const DiagramDocument& doc);
std::string serialize_diagram(const JohanssonDiagram& d);
std::string serialize_presentation(const PresentationDocument& doc);
std::string serialize_presentation(const HakenPresentation& h);

std::string curve_display_name(const HakenPresentation& h, CurveId c,
                               const std::vector<std::string>* pair_names = nullptr);

// DOT rendering of the curve crossing graph; sister pairs are clustered and
// edges carry triplet/role labels.
std::string render_dot(const HakenPresentation& h,
                       const std::vector<std::string>* pair_names = nullptr);
std::string render_dot(const JohanssonDiagram& d,
                       const std::vector<std::string>* pair_names = nullptr);

// Stable-key JSON reports.
std::string diagram_report_json(const DiagramDocument& doc, const std::string& path,
                                std::string_view raw_text);
std::string presentation_report_json(const PresentationDocument& doc, const std::string& path,
                                     std::string_view raw_text);
std::string census_result_json(const CensusResult& result);

std::string fnv1a64_hex(std::string_view data);

inline constexpr const char* kToolName = "dehn";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace dehn
