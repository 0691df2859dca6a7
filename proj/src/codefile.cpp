#include "weightforge/codefile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace weightforge {

namespace {

constexpr const char* kMagic = "weightforge-code v1";

std::vector<std::string> content_lines(const std::string& text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError("code file must end with a trailing newline");
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        std::string line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line[0] == '#') continue;  // comment
        lines.push_back(std::move(line));
    }
    return lines;
}

uint64_t parse_field(const std::string& token, const char* key) {
    const std::string prefix = std::string(key) + "=";
    if (token.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + prefix + "<value>', got '" + token + "'");
    uint64_t value = 0;
    const char* begin = token.data() + prefix.size();
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("bad integer in '" + token + "'");
    return value;
}

}  // namespace

std::string export_code(const LinearCode& code) {
    std::ostringstream out;
    out << kMagic << '\n';
    out << "q=" << code.field().q() << " k=" << code.dim() << " n=" << code.length() << '\n';
    for (size_t i = 0; i < code.dim(); ++i) {
        const auto& row = code.generator().row(i);
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << unsigned(row[j]);
        }
        out << '\n';
    }
    return out.str();
}

LinearCode import_code(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.size() < 2) throw ParseError("truncated code file");
    if (lines[0] != kMagic)
        throw ParseError("bad header line: expected '" + std::string(kMagic) + "'");

    std::istringstream header(lines[1]);
    std::string tq, tk, tn, extra;
    header >> tq >> tk >> tn;
    if (header >> extra) throw ParseError("trailing tokens on the parameter line");
    uint64_t q = parse_field(tq, "q");
    uint64_t k = parse_field(tk, "k");
    uint64_t n = parse_field(tn, "n");
    if (k == 0 || n == 0) throw ParseError("k and n must be positive");
    if (lines.size() != 2 + k)
        throw ParseError("expected " + std::to_string(k) + " generator rows, found " +
                         std::to_string(lines.size() - 2));

    Field f = field_new(unsigned(q));
    std::vector<std::vector<uint8_t>> rows(k);
    for (uint64_t i = 0; i < k; ++i) {
        std::istringstream in(lines[2 + i]);
        uint64_t v = 0;
        while (in >> v) {
            if (v >= q)
                throw ParseError("row " + std::to_string(i + 1) + " entry " + std::to_string(v) +
                                 " is not an element of GF(" + std::to_string(q) + ")");
            rows[i].push_back(uint8_t(v));
        }
        if (!in.eof()) throw ParseError("row " + std::to_string(i + 1) + " has a bad token");
        if (rows[i].size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected n = " +
                             std::to_string(n));
    }
    return LinearCode(GenMatrix(f, std::move(rows)));  // NotFullRank if rank < k
}

void write_code_file(const std::filesystem::path& path, const LinearCode& code) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << export_code(code);
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

LinearCode read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_code(buf.str());
}

}  // namespace weightforge
