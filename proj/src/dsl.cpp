#include "setcong/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace setcong {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_index(const Token& tok, int r, int line_no) {
    std::string body = tok.text;
    if (body.size() >= 2 && (body[0] == 'A' || body[0] == 'a') &&
        std::isdigit(static_cast<unsigned char>(body[1])))
        body = body.substr(1);
    else if (!std::isdigit(static_cast<unsigned char>(body[0])))
        throw UnknownSetName("unknown set name '" + tok.text + "'", line_no, tok.column);
    for (char c : body)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UnknownSetName("unknown set name '" + tok.text + "'", line_no, tok.column);
    int k = std::stoi(body);
    if (k < 1 || k > r)
        throw IndexOutOfRange("set index " + std::to_string(k) + " outside 1.." +
                                  std::to_string(r),
                              line_no, tok.column);
    return k;
}

} // namespace

CongruenceSystem parse_system(const std::string& text) {
    CongruenceSystem sys;
    bool have_sets = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> toks = tokenize_line(line);
        if (toks.empty()) continue;

        if (toks[0].text == "sets") {
            if (have_sets) throw ParseError("duplicate sets declaration", line_no, toks[0].column);
            if (toks.size() != 2)
                throw ParseError("expected: sets <r>", line_no, toks[0].column);
            try {
                sys.r = std::stoi(toks[1].text);
            } catch (...) {
                throw ParseError("invalid set count '" + toks[1].text + "'", line_no,
                                 toks[1].column);
            }
            if (sys.r < 1 || sys.r > 31)
                throw ParseError("set count out of range", line_no, toks[1].column);
            have_sets = true;
            continue;
        }
        if (toks[0].text == "mode") {
            if (toks.size() != 2 || (toks[1].text != "partition" && toks[1].text != "family"))
                throw ParseError("expected: mode partition|family", line_no, toks[0].column);
            sys.mode = toks[1].text == "partition" ? Mode::partition : Mode::family;
            continue;
        }
        if (!have_sets)
            throw ParseError("statements must follow the sets declaration", line_no,
                             toks[0].column);

        // Statement line: IDX+ (~|<) IDX+
        int split = -1;
        StatementKind kind = StatementKind::congruence;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].text == "~" || toks[i].text == "<") {
                if (split >= 0)
                    throw ParseError("multiple relation symbols in statement", line_no,
                                     toks[i].column);
                split = static_cast<int>(i);
                kind = toks[i].text == "~" ? StatementKind::congruence
                                           : StatementKind::subcongruence;
            }
        }
        if (split <= 0 || split == static_cast<int>(toks.size()) - 1)
            throw ParseError("statement needs index sets on both sides of ~ or <", line_no,
                             toks[0].column);
        Statement st;
        st.kind = kind;
        for (int i = 0; i < split; ++i) st.left |= IndexSet{1} << (parse_index(toks[i], sys.r, line_no) - 1);
        for (std::size_t i = split + 1; i < toks.size(); ++i)
            st.right |= IndexSet{1} << (parse_index(toks[i], sys.r, line_no) - 1);
        sys.statements.push_back(st);
    }
    if (!have_sets) throw ParseError("missing sets declaration", 1, 1);
    return sys;
}

std::string render_system(const CongruenceSystem& sys) {
    std::string out = "sets " + std::to_string(sys.r) + "\n";
    out += std::string("mode ") + (sys.mode == Mode::partition ? "partition" : "family") + "\n";
    for (const Statement& st : sys.statements) {
        std::string line;
        for (int k : set_members(st.left)) line += "A" + std::to_string(k) + " ";
        line += st.kind == StatementKind::congruence ? "~" : "<";
        for (int k : set_members(st.right)) line += " A" + std::to_string(k);
        out += line + "\n";
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::vector<int> letters;
    int col = 0;
    bool saw_token = false;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        saw_token = true;
        if (tok == "e") continue; // standalone identity token
        for (char c : tok) {
            ++col;
            if (c >= 'a' && c <= 'z')
                letters.push_back(c - 'a' + 1);
            else if (c >= 'A' && c <= 'Z')
                letters.push_back(-(c - 'A' + 1));
            else
                throw ParseError(std::string("invalid letter '") + c + "'", 1, col);
        }
    }
    if (!saw_token) throw ParseError("empty word", 1, 1);
    return Word(letters);
}

std::string render_report(const CongruenceSystem& sys, const PropertyReport& report) {
    nlohmann::ordered_json j;
    j["system"] = render_system(sys);
    nlohmann::ordered_json props;
    for (PropertyNode n : all_property_nodes()) {
        const NodeStatus& ns = report.at(n);
        nlohmann::ordered_json entry;
        entry["status"] = ns.status == Status::yes    ? "true"
                          : ns.status == Status::no   ? "false"
                                                      : "unknown";
        switch (ns.provenance) {
            case ProvenanceKind::checked: entry["provenance"] = "checked"; break;
            case ProvenanceKind::implied: entry["provenance"] = "implied"; break;
            case ProvenanceKind::contrapositive: entry["provenance"] = "contrapositive"; break;
            case ProvenanceKind::fixture: entry["provenance"] = "fixture"; break;
            case ProvenanceKind::none: entry["provenance"] = nullptr; break;
        }
        if (!ns.detail.empty()) entry["detail"] = ns.detail;
        props[property_name(n)] = entry;
    }
    j["properties"] = props;
    j["checks"] = report.checks;
    nlohmann::ordered_json artifacts;
    artifacts["extended_nc"] = report.extended_nc;
    artifacts["implication_dot"] = implication_dot();
    j["artifacts"] = artifacts;
    return j.dump(2);
}

FiniteFamily parse_family_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid family JSON: ") + e.what(), 1, 1);
    }
    int m = j.value("m", 2);
    std::vector<std::vector<Word>> sets;
    for (const auto& arr : j.at("sets")) {
        std::vector<Word> s;
        for (const auto& entry : arr) s.push_back(parse_word(entry.get<std::string>()));
        sets.push_back(std::move(s));
    }
    if (j.contains("coset")) {
        CosetSpace space = make_coset_space(m, parse_word(j["coset"].get<std::string>()));
        return make_coset_family(space, std::move(sets));
    }
    return make_group_family(m, std::move(sets));
}

std::string render_family_json(const FiniteFamily& fam) {
    nlohmann::ordered_json j;
    if (const auto* coset = std::get_if<CosetSpace>(&fam.space)) {
        j["m"] = coset->m;
        j["coset"] = word_to_string(coset->w);
    } else {
        j["m"] = std::get<GroupSpace>(fam.space).m;
    }
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& s : fam.sets) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Word& x : s) arr.push_back(word_to_string(x));
        sets.push_back(arr);
    }
    j["sets"] = sets;
    return j.dump(2);
}

} // namespace setcong
