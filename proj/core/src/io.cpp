#include "tri4/io.hpp"

#include <fstream>
#include <sstream>

#include "tri4/errors.hpp"

namespace tri4 {

namespace {

[[noreturn]] void parse_error(int line, const std::string& message) {
    throw UserError("parse error at line " + std::to_string(line) + ": " + message);
}

std::int64_t parse_int(const std::string& token, int line, const char* what,
                       std::int64_t lo, std::int64_t hi) {
    std::int64_t value = 0;
    std::size_t pos = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception&) {
        parse_error(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    if (pos != token.size() || value < lo || value > hi)
        parse_error(line, std::string(what) + " out of range: '" + token + "'");
    return value;
}

} // namespace

std::string write_triangulation(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri4 v1 " << tri.size() << "\n";
    if (tri.has_types()) {
        out << "types ";
        for (std::int8_t t : tri.raw_types()) out << char('0' + t);
        out << "\n";
    }
    for (PentId p = 0; p < tri.size(); ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            if (!gl.glued()) continue;
            if (std::pair<PentId, int>(p, f) >
                std::pair<PentId, int>(gl.pent, gl.facet))
                continue; // written from the smaller side
            out << p << ' ' << f << ' ' << gl.pent << ' ' << int(gl.facet) << ' '
                << gl.perm.digits() << "\n";
        }
    }
    return out.str();
}

Triangulation read_triangulation(std::istream& in) {
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) parse_error(1, "empty input");
    ++lineno;
    std::istringstream header(line);
    std::string magic, version, count_token;
    if (!(header >> magic >> version >> count_token) || magic != "tri4" ||
        version != "v1")
        parse_error(lineno, "expected header 'tri4 v1 <n>'");
    std::string extra;
    if (header >> extra) parse_error(lineno, "trailing tokens after header");
    const std::int64_t n =
        parse_int(count_token, lineno, "pentachoron count", 1, 100'000'000);

    Triangulation tri(n);
    bool seen_gluing = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) parse_error(lineno, "blank line");
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "types") {
            if (seen_gluing || tri.has_types())
                parse_error(lineno, "misplaced 'types' line");
            std::string digits;
            if (!(ls >> digits) || (ls >> extra))
                parse_error(lineno, "expected one token of type digits");
            if (static_cast<std::int64_t>(digits.size()) != n * 5)
                parse_error(lineno, "expected " + std::to_string(n * 5) +
                                        " type digits, got " +
                                        std::to_string(digits.size()));
            std::vector<std::int8_t> types(digits.size());
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (digits[i] < '0' || digits[i] > '9')
                    parse_error(lineno, "bad type digit");
                types[i] = static_cast<std::int8_t>(digits[i] - '0');
            }
            tri.set_types(std::move(types));
            continue;
        }
        seen_gluing = true;
        std::string f_tok, q_tok, g_tok, perm_tok;
        if (!(ls >> f_tok >> q_tok >> g_tok >> perm_tok))
            parse_error(lineno, "expected '<p> <f> <q> <g> <perm>'");
        if (ls >> extra) parse_error(lineno, "trailing tokens");
        const PentId p =
            static_cast<PentId>(parse_int(first, lineno, "pentachoron id", 0, n - 1));
        const int f = static_cast<int>(parse_int(f_tok, lineno, "facet", 0, 4));
        const PentId q =
            static_cast<PentId>(parse_int(q_tok, lineno, "pentachoron id", 0, n - 1));
        const int g = static_cast<int>(parse_int(g_tok, lineno, "facet", 0, 4));
        Perm5 perm;
        try {
            perm = Perm5::from_digits(perm_tok);
        } catch (const UserError& e) {
            parse_error(lineno, e.what());
        }
        if (p == q && f == g) parse_error(lineno, "facet glued to itself");
        if (perm[f] != g)
            parse_error(lineno, "permutation does not carry facet " +
                                    std::to_string(f) + " to facet " +
                                    std::to_string(g));
        if (tri.is_glued(p, f) || tri.is_glued(q, g))
            parse_error(lineno, "facet glued twice");
        tri.glue_pair(p, f, q, g, perm);
    }
    if (tri.has_types()) {
        const ValidationReport r = validate(tri);
        if (!r.valid)
            throw UserError("read_triangulation: " + r.violations.front().message);
    }
    return tri;
}

Triangulation read_triangulation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open '" + path + "'");
    return read_triangulation(in);
}

void write_triangulation_file(const Triangulation& tri, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UserError("cannot write '" + path + "'");
    out << write_triangulation(tri);
}

std::string write_colouring(const Triangulation&, const FaceClasses& vertex_classes,
                            const Colouring& colouring) {
    if (static_cast<std::int64_t>(colouring.by_class.size()) != vertex_classes.count())
        throw UserError("write_colouring: colouring domain mismatch");
    std::ostringstream out;
    out << "colour v1\n";
    for (std::int32_t cls = 0; cls < vertex_classes.count(); ++cls) {
        const Corner rep = vertex_classes.representative(cls);
        out << rep.pent << ' ' << rep.face << ' ' << int(colouring.by_class[cls])
            << "\n";
    }
    return out.str();
}

Colouring read_colouring(std::istream& in, const Triangulation& tri,
                         const FaceClasses& vertex_classes) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) parse_error(1, "empty input");
    ++lineno;
    if (line != "colour v1") parse_error(lineno, "expected header 'colour v1'");

    Colouring colouring;
    colouring.by_class.assign(vertex_classes.count(), 3); // 3 = unset
    std::int64_t filled = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) parse_error(lineno, "blank line");
        std::istringstream ls(line);
        std::string p_tok, s_tok, c_tok, extra;
        if (!(ls >> p_tok >> s_tok >> c_tok) || (ls >> extra))
            parse_error(lineno, "expected '<p> <s> <c>'");
        const PentId p = static_cast<PentId>(
            parse_int(p_tok, lineno, "pentachoron id", 0, tri.size() - 1));
        const int s = static_cast<int>(parse_int(s_tok, lineno, "slot", 0, 4));
        const int c = static_cast<int>(parse_int(c_tok, lineno, "colour", 0, 2));
        const std::int32_t cls = vertex_classes.class_of(p, s);
        if (colouring.by_class[cls] != 3)
            parse_error(lineno, "vertex class coloured twice");
        colouring.by_class[cls] = static_cast<std::uint8_t>(c);
        ++filled;
    }
    if (filled != vertex_classes.count())
        throw UserError("colouring covers " + std::to_string(filled) + " of " +
                        std::to_string(vertex_classes.count()) + " vertex classes");
    return colouring;
}

Colouring read_colouring_file(const std::string& path, const Triangulation& tri,
                              const FaceClasses& vertex_classes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open '" + path + "'");
    return read_colouring(in, tri, vertex_classes);
}

} // namespace tri4
