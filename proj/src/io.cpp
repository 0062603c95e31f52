#include "poolkit/io.hpp"

#include <fstream>
#include <sstream>

namespace poolkit {

namespace {

// Strip trailing comment; returns false for lines to skip entirely
// (pure-comment lines). A blank data line is an empty set.
bool strip_line(std::string& line, bool& is_data) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t hash = line.find('#');
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && first == hash) {
        is_data = false;
        return true;
    }
    if (hash != std::string::npos) line.erase(hash);
    is_data = true;
    return true;
}

std::vector<int> parse_indices(const std::string& line, int line_no, int max_value,
                               const char* kind) {
    std::vector<int> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) {
        size_t pos = 0;
        int val = 0;
        try {
            val = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError(line_no, "trailing junk in '" + tok + "'");
        if (val < 1 || val > max_value)
            throw ParseError(line_no, std::string(kind) + " index " + std::to_string(val) +
                                          " out of range 1.." + std::to_string(max_value));
        out.push_back(val);
    }
    return out;
}

}  // namespace

DesignInput parse_design_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    // header
    bool is_dual = false;
    int v = 0, n = 0;
    for (;;) {
        if (!std::getline(in, line)) throw ParseError(line_no + 1, "missing header line");
        ++line_no;
        bool is_data;
        strip_line(line, is_data);
        if (!is_data) continue;
        std::istringstream iss(line);
        std::string first;
        if (!(iss >> first)) throw ParseError(line_no, "empty header line");
        if (first == "dual") {
            is_dual = true;
            if (!(iss >> v >> n)) throw ParseError(line_no, "header must be `dual v n`");
        } else {
            try {
                v = std::stoi(first);
            } catch (const std::exception&) {
                throw ParseError(line_no, "header must be `v n` or `dual v n`");
            }
            if (!(iss >> n)) throw ParseError(line_no, "header must be `v n` or `dual v n`");
        }
        std::string extra;
        if (iss >> extra) throw ParseError(line_no, "unexpected token '" + extra + "' in header");
        break;
    }
    if (v < 1 || n < 1) throw ParseError(line_no, "v and n must be >= 1");

    const int rows = is_dual ? n : v;
    std::vector<std::vector<int>> lists;
    while (int(lists.size()) < rows) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, "expected " + std::to_string(rows) +
                                              " data lines, got " + std::to_string(lists.size()));
        ++line_no;
        bool is_data;
        strip_line(line, is_data);
        if (!is_data) continue;
        lists.push_back(parse_indices(line, line_no, is_dual ? v : n,
                                      is_dual ? "pool" : "object"));
    }
    // anything after the data lines must be blank or comments
    while (std::getline(in, line)) {
        ++line_no;
        bool is_data;
        strip_line(line, is_data);
        if (is_data && line.find_first_not_of(" \t") != std::string::npos)
            throw ParseError(line_no, "unexpected extra data line");
    }

    DesignInput out;
    out.was_dual = is_dual;
    if (is_dual) {
        out.dual = SubsetFamily::from_lists(v, lists);
    } else {
        out.dual = dualize(Design::from_lists(n, lists));
    }
    return out;
}

DesignInput parse_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_design_text(in);
}

namespace {
void append_line(std::string& out, const Bitset& b) {
    bool first = true;
    for (int i : b.indices()) {
        if (!first) out += ' ';
        out += std::to_string(i + 1);
        first = false;
    }
    out += '\n';
}
}  // namespace

std::string format_design(const Design& d) {
    std::string out = std::to_string(d.num_pools()) + " " + std::to_string(d.num_objects()) + "\n";
    for (const Bitset& p : d.pools()) append_line(out, p);
    return out;
}

std::string format_dual(const SubsetFamily& f) {
    std::string out = "dual " + std::to_string(f.ground_size) + " " +
                      std::to_string(f.size()) + "\n";
    for (const Bitset& m : f.members) append_line(out, m);
    return out;
}

}  // namespace poolkit
