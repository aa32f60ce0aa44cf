#include "dehn/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dehn/errors.hpp"

namespace dehn {

const char* parse_code_name(ParseCode code) {
    switch (code) {
    case ParseCode::lexical: return "lexical";
    case ParseCode::bad_header: return "bad-header";
    case ParseCode::bad_section: return "bad-section";
    case ParseCode::unknown_curve: return "unknown-curve";
    case ParseCode::unknown_point: return "unknown-point";
    case ParseCode::duplicate_curve: return "duplicate-curve";
    case ParseCode::duplicate_point: return "duplicate-point";
    case ParseCode::duplicate_word: return "duplicate-word";
    case ParseCode::slot_reused: return "slot-reused";
    case ParseCode::slot_missing: return "slot-missing";
    case ParseCode::sign_missing: return "sign-missing";
    case ParseCode::sign_duplicate: return "sign-duplicate";
    case ParseCode::triplet_arity: return "triplet-arity";
    case ParseCode::point_unassigned: return "point-unassigned";
    case ParseCode::missing_section: return "missing-section";
    case ParseCode::bad_number: return "bad-number";
    }
    return "unknown";
}

parse_error::parse_error(ParseCode code_, int line_, int column_, const std::string& what_)
    : error("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
            parse_code_name(code_) + ": " + what_),
      code(code_),
      line(line_),
      column(column_) {}

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<Token> tokens;
        size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back({std::string(line.substr(start, i - start)), lineno,
                              static_cast<int>(start) + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

struct NameTables {
    std::vector<std::string> pair_names;
    std::map<std::string, int, std::less<>> pair_index;
    std::vector<std::string> point_names;
    std::map<std::string, int, std::less<>> point_index;

    int curve_of(const Token& tok) const {
        std::string_view ref = tok.text;
        bool sister = false;
        if (!ref.empty() && ref.back() == '*') {
            sister = true;
            ref.remove_suffix(1);
        }
        const auto it = pair_index.find(ref);
        if (it == pair_index.end()) {
            throw parse_error(ParseCode::unknown_curve, tok.line, tok.column,
                              "unknown curve '" + tok.text + "'");
        }
        return 2 * it->second + (sister ? 1 : 0);
    }

    int point_of(const Token& tok, std::string_view name) {
        if (!valid_name(name)) {
            throw parse_error(ParseCode::lexical, tok.line, tok.column,
                              "bad point name '" + std::string(name) + "'");
        }
        const auto it = point_index.find(name);
        if (it != point_index.end()) return it->second;
        const int id = static_cast<int>(point_names.size());
        point_names.emplace_back(name);
        point_index.emplace(std::string(name), id);
        return id;
    }
};

void parse_pairs_line(const std::vector<Token>& line, NameTables& names) {
    if (!names.pair_names.empty()) {
        throw parse_error(ParseCode::bad_section, line[0].line, line[0].column,
                          "duplicate pairs: line");
    }
    for (size_t i = 1; i < line.size(); ++i) {
        const Token& tok = line[i];
        const size_t slash = tok.text.find('/');
        if (slash == std::string::npos) {
            throw parse_error(ParseCode::lexical, tok.line, tok.column,
                              "pair must be written name/name*");
        }
        const std::string base = tok.text.substr(0, slash);
        const std::string sister = tok.text.substr(slash + 1);
        if (!valid_name(base) || sister != base + "*") {
            throw parse_error(ParseCode::lexical, tok.line, tok.column,
                              "pair must be written name/name*");
        }
        if (names.pair_index.contains(base)) {
            throw parse_error(ParseCode::duplicate_curve, tok.line, tok.column,
                              "pair '" + base + "' declared twice");
        }
        names.pair_index.emplace(base, static_cast<int>(names.pair_names.size()));
        names.pair_names.push_back(base);
    }
}

std::array<Token, 3> split_triplet_tuple(const Token& tok) {
    const std::string& s = tok.text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw parse_error(ParseCode::lexical, tok.line, tok.column,
                          "triplet tuple must be written (a,c,g)");
    }
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += s[i];
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) {
        throw parse_error(ParseCode::triplet_arity, tok.line, tok.column,
                          "triplet must name exactly three curves");
    }
    std::array<Token, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[static_cast<size_t>(i)] = Token{parts[static_cast<size_t>(i)], tok.line, tok.column};
    }
    return out;
}

Token strip_colon(const Token& tok, ParseCode code) {
    if (tok.text.empty() || tok.text.back() != ':') {
        throw parse_error(code, tok.line, tok.column, "expected ':' after '" + tok.text + "'");
    }
    Token out = tok;
    out.text.pop_back();
    return out;
}

struct ParsedFile {
    bool is_diagram = false;
    NameTables names;
    std::vector<std::vector<WordEntry>> words;       // per curve
    std::vector<char> word_seen;                     // per curve
    std::map<int, Sign> signs;
    std::vector<Triplet> triplets;
};

ParsedFile parse_common(std::string_view text, bool expect_diagram) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw parse_error(ParseCode::bad_header, 1, 1, "empty input");
    }
    const auto& header = lines[0];
    const std::string want = expect_diagram ? "jdiag" : "hpres";
    if (header.size() != 2 || header[0].text != want || header[1].text != "1") {
        throw parse_error(ParseCode::bad_header, header[0].line, header[0].column,
                          "expected header '" + want + " 1'");
    }

    ParsedFile file;
    file.is_diagram = expect_diagram;

    // Sections are order-insensitive: find the pairs line first.
    for (size_t li = 1; li < lines.size(); ++li) {
        if (lines[li][0].text == "pairs:") parse_pairs_line(lines[li], file.names);
    }
    if (file.names.pair_names.empty()) {
        bool has_pairs_line = false;
        for (size_t li = 1; li < lines.size(); ++li) {
            has_pairs_line = has_pairs_line || lines[li][0].text == "pairs:";
        }
        if (!has_pairs_line) {
            throw parse_error(ParseCode::missing_section, 1, 1, "missing pairs: line");
        }
    }
    const int curves = 2 * static_cast<int>(file.names.pair_names.size());
    file.words.resize(static_cast<size_t>(curves));
    file.word_seen.assign(static_cast<size_t>(curves), 0);

    std::vector<std::array<char, 2>> slot_seen;

    auto ensure_point_slot = [&](int point, int slot, const Token& tok) {
        if (static_cast<size_t>(point) >= slot_seen.size()) {
            slot_seen.resize(static_cast<size_t>(point) + 1, {0, 0});
        }
        if (slot_seen[static_cast<size_t>(point)][static_cast<size_t>(slot)]) {
            throw parse_error(ParseCode::slot_reused, tok.line, tok.column,
                              "slot " + std::to_string(slot) + " of point '" +
                                  file.names.point_names[static_cast<size_t>(point)] +
                                  "' already used");
        }
        slot_seen[static_cast<size_t>(point)][static_cast<size_t>(slot)] = 1;
    };

    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const std::string& kind = line[0].text;
        if (kind == "pairs:") continue;

        if (kind == "word") {
            if (!expect_diagram) {
                throw parse_error(ParseCode::bad_section, line[0].line, line[0].column,
                                  "word lines are not part of hpres files");
            }
            if (line.size() < 2) {
                throw parse_error(ParseCode::bad_section, line[0].line, line[0].column,
                                  "word line needs a curve");
            }
            const Token curve_tok = strip_colon(line[1], ParseCode::lexical);
            const int curve = file.names.curve_of(curve_tok);
            if (file.word_seen[static_cast<size_t>(curve)]) {
                throw parse_error(ParseCode::duplicate_word, line[1].line, line[1].column,
                                  "second word line for curve '" + curve_tok.text + "'");
            }
            file.word_seen[static_cast<size_t>(curve)] = 1;
            for (size_t i = 2; i < line.size(); ++i) {
                const Token& tok = line[i];
                const size_t dot = tok.text.rfind('.');
                if (dot == std::string::npos || dot + 2 != tok.text.size() ||
                    (tok.text[dot + 1] != '0' && tok.text[dot + 1] != '1')) {
                    throw parse_error(ParseCode::lexical, tok.line, tok.column,
                                      "passage must be written point.slot with slot 0 or 1");
                }
                const int point = file.names.point_of(tok, tok.text.substr(0, dot));
                const int slot = tok.text[dot + 1] - '0';
                ensure_point_slot(point, slot, tok);
                file.words[static_cast<size_t>(curve)].push_back({point, slot});
            }
        } else if (kind == "cross") {
            if (!expect_diagram) {
                throw parse_error(ParseCode::bad_section, line[0].line, line[0].column,
                                  "cross lines are not part of hpres files");
            }
            if (line.size() != 3) {
                throw parse_error(ParseCode::sign_missing, line[0].line, line[0].column,
                                  "cross line needs 'cross point: sign'");
            }
            const Token point_tok = strip_colon(line[1], ParseCode::lexical);
            const int point = file.names.point_of(point_tok, point_tok.text);
            if (file.signs.contains(point)) {
                throw parse_error(ParseCode::sign_duplicate, line[1].line, line[1].column,
                                  "second sign for point '" + point_tok.text + "'");
            }
            if (line[2].text == "+") {
                file.signs.emplace(point, Sign::plus);
            } else if (line[2].text == "-") {
                file.signs.emplace(point, Sign::minus);
            } else {
                throw parse_error(ParseCode::sign_missing, line[2].line, line[2].column,
                                  "sign must be + or -");
            }
        } else if (kind == "triplet") {
            if (line.size() < 2) {
                throw parse_error(ParseCode::triplet_arity, line[0].line, line[0].column,
                                  "triplet line needs a (a,c,g) tuple");
            }
            const auto tuple = split_triplet_tuple(line[1]);
            Triplet t;
            for (int i = 0; i < 3; ++i) {
                t.letters[static_cast<size_t>(i)] = file.names.curve_of(tuple[static_cast<size_t>(i)]);
            }
            if (expect_diagram) {
                if (line.size() != 6 || line[2].text != "points") {
                    throw parse_error(ParseCode::point_unassigned, line[0].line, line[0].column,
                                      "triplet line needs 'points p1 p2 p3'");
                }
                for (int i = 0; i < 3; ++i) {
                    const Token& tok = line[static_cast<size_t>(3 + i)];
                    t.points[static_cast<size_t>(i)] = file.names.point_of(tok, tok.text);
                }
            } else if (line.size() != 2) {
                throw parse_error(ParseCode::bad_section, line[2].line, line[2].column,
                                  "hpres triplet lines carry no points");
            }
            file.triplets.push_back(t);
        } else {
            throw parse_error(ParseCode::bad_section, line[0].line, line[0].column,
                              "unknown section '" + kind + "'");
        }
    }

    // Structural closure for diagrams: every named point needs both slots and
    // a sign, and must sit in exactly one triplet.
    if (expect_diagram) {
        const int npoints = static_cast<int>(file.names.point_names.size());
        slot_seen.resize(static_cast<size_t>(npoints), {0, 0});
        for (int p = 0; p < npoints; ++p) {
            if (!slot_seen[static_cast<size_t>(p)][0] || !slot_seen[static_cast<size_t>(p)][1]) {
                throw parse_error(ParseCode::slot_missing, 1, 1,
                                  "point '" + file.names.point_names[static_cast<size_t>(p)] +
                                      "' does not carry two passages");
            }
            if (!file.signs.contains(p)) {
                throw parse_error(ParseCode::sign_missing, 1, 1,
                                  "point '" + file.names.point_names[static_cast<size_t>(p)] +
                                      "' has no crossing sign");
            }
        }
        std::vector<int> owner(static_cast<size_t>(npoints), -1);
        for (size_t ti = 0; ti < file.triplets.size(); ++ti) {
            for (int p : file.triplets[ti].points) {
                if (owner[static_cast<size_t>(p)] >= 0) {
                    throw parse_error(ParseCode::duplicate_point, 1, 1,
                                      "point '" + file.names.point_names[static_cast<size_t>(p)] +
                                          "' assigned to two triplets");
                }
                owner[static_cast<size_t>(p)] = static_cast<int>(ti);
            }
        }
        for (int p = 0; p < npoints; ++p) {
            if (owner[static_cast<size_t>(p)] < 0) {
                throw parse_error(ParseCode::point_unassigned, 1, 1,
                                  "point '" + file.names.point_names[static_cast<size_t>(p)] +
                                      "' belongs to no triplet");
            }
        }
    }
    return file;
}

std::string generated_pair_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "c" + std::to_string(i);
}

} // namespace

DiagramDocument parse_diagram(std::string_view text) {
    ParsedFile file = parse_common(text, true);

    DiagramDocument doc;
    doc.pair_names = file.names.pair_names;
    doc.point_names = file.names.point_names;

    JohanssonDiagram& d = doc.diagram;
    const int pairs = static_cast<int>(file.names.pair_names.size());
    d.pres.pairing = SisterPairing::standard(pairs);
    d.pres.triplets = file.triplets;
    d.words = std::move(file.words);
    d.points.resize(file.names.point_names.size());
    for (const auto& [point, sign] : file.signs) {
        d.points[static_cast<size_t>(point)].sign = sign;
    }
    for (CurveId c = 0; c < d.pres.pairing.curve_count(); ++c) {
        const auto& word = d.words[static_cast<size_t>(c)];
        for (size_t i = 0; i < word.size(); ++i) {
            d.points[static_cast<size_t>(word[i].point)].slots[static_cast<size_t>(word[i].slot)] =
                Passage{c, static_cast<int>(i)};
        }
    }
    return doc;
}

PresentationDocument parse_presentation(std::string_view text) {
    ParsedFile file = parse_common(text, false);
    PresentationDocument doc;
    doc.pair_names = file.names.pair_names;
    doc.presentation.pairing =
        SisterPairing::standard(static_cast<int>(file.names.pair_names.size()));
    doc.presentation.triplets = file.triplets;
    return doc;
}

std::string curve_display_name(const HakenPresentation& h, CurveId c,
                               const std::vector<std::string>* pair_names) {
    const int pair = h.pairing.pair_of(c);
    std::string base = pair_names && pair < static_cast<int>(pair_names->size())
                           ? (*pair_names)[static_cast<size_t>(pair)]
                           : generated_pair_name(pair);
    if (!h.pairing.is_primary(c)) base += "*";
    return base;
}

namespace {

std::vector<std::string> effective_pair_names(const HakenPresentation& h,
                                              const std::vector<std::string>* names) {
    std::vector<std::string> out;
    const int pairs = h.pairing.pair_count();
    for (int i = 0; i < pairs; ++i) {
        if (names && i < static_cast<int>(names->size())) {
            out.push_back((*names)[static_cast<size_t>(i)]);
        } else {
            out.push_back(generated_pair_name(i));
        }
    }
    return out;
}

std::string serialize_diagram_impl(const JohanssonDiagram& d,
                                   const std::vector<std::string>* pair_names,
                                   const std::vector<std::string>* point_names) {
    const auto pairs = effective_pair_names(d.pres, pair_names);
    auto point_name = [&](int p) {
        if (point_names && p < static_cast<int>(point_names->size())) {
            return (*point_names)[static_cast<size_t>(p)];
        }
        return "p" + std::to_string(p + 1);
    };

    std::ostringstream out;
    out << "jdiag 1\n";
    out << "pairs:";
    for (const std::string& name : pairs) out << ' ' << name << '/' << name << '*';
    out << '\n';
    for (CurveId c = 0; c < d.pres.pairing.curve_count(); ++c) {
        out << "word " << curve_display_name(d.pres, c, &pairs) << ':';
        for (const WordEntry& e : d.words[static_cast<size_t>(c)]) {
            out << ' ' << point_name(e.point) << '.' << e.slot;
        }
        out << '\n';
    }
    for (size_t p = 0; p < d.points.size(); ++p) {
        out << "cross " << point_name(static_cast<int>(p)) << ": "
            << sign_char(d.points[p].sign) << '\n';
    }
    for (const Triplet& t : d.pres.triplets) {
        out << "triplet (" << curve_display_name(d.pres, t.letters[0], &pairs) << ','
            << curve_display_name(d.pres, t.letters[1], &pairs) << ','
            << curve_display_name(d.pres, t.letters[2], &pairs) << ") points "
            << point_name(t.points[0]) << ' ' << point_name(t.points[1]) << ' '
            << point_name(t.points[2]) << '\n';
    }
    return out.str();
}

} // namespace

std::string serialize_diagram(const DiagramDocument& doc) {
    return serialize_diagram_impl(doc.diagram, &doc.pair_names, &doc.point_names);
}

std::string serialize_diagram(const JohanssonDiagram& d) {
    return serialize_diagram_impl(d, nullptr, nullptr);
}

std::string serialize_presentation(const PresentationDocument& doc) {
    const auto pairs = effective_pair_names(doc.presentation, &doc.pair_names);
    std::ostringstream out;
    out << "hpres 1\n";
    out << "pairs:";
    for (const std::string& name : pairs) out << ' ' << name << '/' << name << '*';
    out << '\n';
    for (const Triplet& t : doc.presentation.triplets) {
        out << "triplet (" << curve_display_name(doc.presentation, t.letters[0], &pairs) << ','
            << curve_display_name(doc.presentation, t.letters[1], &pairs) << ','
            << curve_display_name(doc.presentation, t.letters[2], &pairs) << ")\n";
    }
    return out.str();
}

std::string serialize_presentation(const HakenPresentation& h) {
    PresentationDocument doc;
    doc.presentation = h;
    doc.pair_names = effective_pair_names(h, nullptr);
    return serialize_presentation(doc);
}

std::string render_dot(const HakenPresentation& h, const std::vector<std::string>* pair_names) {
    const auto pairs = effective_pair_names(h, pair_names);
    std::ostringstream out;
    out << "graph crossings {\n";
    for (int i = 0; i < h.pairing.pair_count(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=\"" << pairs[static_cast<size_t>(i)] << "\";\n";
        out << "    \"" << pairs[static_cast<size_t>(i)] << "\";\n";
        out << "    \"" << pairs[static_cast<size_t>(i)] << "*\";\n";
        out << "  }\n";
    }
    const CrossingGraph g = curve_crossing_graph(h);
    for (const CrossingEdge& e : g.edges) {
        out << "  \"" << curve_display_name(h, e.a, &pairs) << "\" -- \""
            << curve_display_name(h, e.b, &pairs) << "\" [label=\"t" << e.triplet << ".r"
            << e.role + 1 << "\"];\n";
    }
    for (const CrossingLoop& l : g.loops) {
        out << "  \"" << curve_display_name(h, l.curve, &pairs) << "\" -- \""
            << curve_display_name(h, l.curve, &pairs) << "\" [label=\"t" << l.triplet << ".r"
            << l.role + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_dot(const JohanssonDiagram& d, const std::vector<std::string>* pair_names) {
    return render_dot(d.pres, pair_names);
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json findings_json(const ValidationReport& report) {
    ordered_json arr = ordered_json::array();
    for (const Finding& f : report.findings) {
        ordered_json j;
        j["constraint"] = f.constraint;
        j["severity"] = f.severity == Severity::error ? "error" : "warning";
        j["detail"] = f.detail;
        j["ids"] = f.ids;
        arr.push_back(j);
    }
    return arr;
}

ordered_json report_common(const HakenPresentation& h, const ValidationReport& report,
                           const std::vector<std::string>& pairs, const std::string& path,
                           std::string_view raw) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["input"] = {{"path", path}, {"digest", "fnv1a64:" + fnv1a64_hex(raw)}};
    j["validation"] = {{"pass", report.pass()}, {"findings", findings_json(report)}};

    ordered_json types = ordered_json::array();
    for (size_t ti = 0; ti < h.triplets.size(); ++ti) {
        const Triplet& t = h.triplets[ti];
        ordered_json entry;
        entry["index"] = ti;
        entry["letters"] = {curve_display_name(h, t.letters[0], &pairs),
                            curve_display_name(h, t.letters[1], &pairs),
                            curve_display_name(h, t.letters[2], &pairs)};
        entry["type"] = to_string(classify_triplet(t, h.pairing));
        types.push_back(entry);
    }
    j["triplet_types"] = types;

    ordered_json pres;
    pres["double_curves"] = double_curve_count(h);
    pres["triple_points"] = h.triple_point_count();
    if (report.pass()) {
        const GroupPresentation g = presentation_from(h);
        ordered_json relators = ordered_json::array();
        for (const auto& rel : g.relators) {
            std::string word;
            for (int letter : rel) {
                if (!word.empty()) word += ' ';
                word += pairs[static_cast<size_t>(std::abs(letter) - 1)];
                if (letter < 0) word += "^-1";
            }
            relators.push_back(word);
        }
        pres["relators"] = relators;
    }
    j["presentation"] = pres;

    if (report.pass()) {
        const AbelianGroup a = h1(h);
        j["h1"] = {{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"name", recognize(a)}};
    } else {
        j["h1"] = nullptr;
    }
    return j;
}

} // namespace

std::string diagram_report_json(const DiagramDocument& doc, const std::string& path,
                                std::string_view raw_text) {
    const ValidationReport report = validate_diagram(doc.diagram);
    ordered_json j =
        report_common(doc.diagram.pres, report, doc.pair_names, path, raw_text);
    if (structural_findings(doc.diagram).empty()) {
        j["faces"] = faces(doc.diagram).size();
    } else {
        j["faces"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string presentation_report_json(const PresentationDocument& doc, const std::string& path,
                                     std::string_view raw_text) {
    const ValidationReport report = validate_presentation(doc.presentation);
    ordered_json j = report_common(doc.presentation, report, doc.pair_names, path, raw_text);
    j["faces"] = nullptr;
    return j.dump(2) + "\n";
}

std::string census_result_json(const CensusResult& result) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    ordered_json census;
    census["triple_points"] = result.triple_points;
    census["max_pairs"] = result.max_pairs;
    long long total = 0;
    ordered_json counts = ordered_json::array();
    for (const CensusRow& row : result.counts) {
        counts.push_back({{"pairs", row.pairs}, {"count", row.count}});
        total += row.count;
    }
    census["classes"] = total;
    census["counts"] = counts;
    ordered_json hist = ordered_json::array();
    for (const CensusHistogramEntry& e : result.histogram) {
        hist.push_back({{"name", e.name}, {"count", e.count}});
    }
    census["h1_histogram"] = hist;
    census["verdicts"] = {{"no_z3_z3", result.no_z3_z3},
                          {"small_k_cyclic", result.small_k_cyclic},
                          {"candidate_list_ok", result.candidate_list_ok},
                          {"bound_ok", result.bound_ok}};
    j["census"] = census;
    return j.dump(2) + "\n";
}

} // namespace dehn
