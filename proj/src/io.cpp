#include "tangle/io.hpp"

#include <fstream>
#include <sstream>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

// next non-empty line after comment stripping; returns false at EOF
bool next_line(std::istream& in, std::string& out, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t\r");
        out = raw.substr(a, b - a + 1);
        return true;
    }
    return false;
}

// splits "key = value"; checks the key
std::string expect_keyed(const std::string& line, const std::string& key, int line_no) {
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, line, "expected '" + key + " = ...'");
    std::string k = line.substr(0, eq);
    size_t b = k.find_last_not_of(" \t");
    k = b == std::string::npos ? "" : k.substr(0, b + 1);
    if (k != key) throw ParseError(line_no, k, "expected key '" + key + "'");
    std::string v = line.substr(eq + 1);
    size_t a = v.find_first_not_of(" \t");
    return a == std::string::npos ? "" : v.substr(a);
}

std::vector<Label> parse_label_row(const std::string& text, int line_no) {
    std::vector<Label> out;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size() || v <= 0) throw std::invalid_argument("");
            out.push_back(static_cast<Label>(v));
        } catch (const std::exception&) {
            throw ParseError(line_no, tok, "expected a positive integer");
        }
    }
    if (out.empty()) throw ParseError(line_no, text, "expected at least one label");
    return out;
}

}  // namespace

Tanglegram read_tanglegram(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "<end>", "missing T line");
    Tree t = Tree::parse(expect_keyed(line, "T", line_no), line_no);
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "<end>", "missing S line");
    Tree s = Tree::parse(expect_keyed(line, "S", line_no), line_no);
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "<end>", "missing phi line");
    std::vector<Label> row = parse_label_row(expect_keyed(line, "phi", line_no), line_no);
    try {
        return Tanglegram::from_phi_row(std::move(t), std::move(s), row);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, "phi", e.what());
    }
}

Tanglegram read_tanglegram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path, "cannot open file");
    return read_tanglegram(in);
}

std::string write_tanglegram(const Tanglegram& tg) {
    std::ostringstream out;
    out << "T = " << tg.t().to_string() << "\n";
    out << "S = " << tg.s().to_string() << "\n";
    out << "phi =";
    for (Label l : tg.t_labels()) out << " " << tg.phi(l);
    out << "\n";
    return out.str();
}

Layout read_layout(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "<end>", "missing X line");
    Layout ly;
    ly.x_order = parse_label_row(expect_keyed(line, "X", line_no), line_no);
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "<end>", "missing Y line");
    ly.y_order = parse_label_row(expect_keyed(line, "Y", line_no), line_no);
    return ly;
}

Layout read_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path, "cannot open file");
    return read_layout(in);
}

std::string write_layout(const Layout& ly) {
    std::ostringstream out;
    out << "X =";
    for (Label l : ly.x_order) out << " " << l;
    out << "\nY =";
    for (Label l : ly.y_order) out << " " << l;
    out << "\n";
    return out.str();
}

}  // namespace tangle
