#include "rmc/codefile.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "rmc/errors.hpp"

namespace rmc {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string compact(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool is_blank(const std::string& s) {
    const std::string t = strip(s);
    return t.empty() || t[0] == '#';
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Split on sep outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

unsigned long parse_uint(const std::string& s, int line) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw parse_error("expected an unsigned integer, got '" + s + "'", line);
    try {
        return std::stoul(s);
    } catch (const std::exception&) {
        throw parse_error("integer out of range: '" + s + "'", line);
    }
}

FieldElement parse_element_at(const std::string& raw, const FieldSpec& f, int line) {
    const std::string s = compact(raw);
    if (s.empty()) throw parse_error("empty element literal", line);
    if (f.degree() == 1) {
        const unsigned long v = parse_uint(s, line);
        if (v >= f.cardinality())
            throw parse_error("element " + s + " out of range for " + field_spec_text(f), line);
        return f.element(static_cast<std::uint32_t>(v));
    }
    std::vector<std::uint32_t> digits(f.degree(), 0);
    for (const std::string& term : split(s, '+')) {
        if (term.empty()) throw parse_error("empty term in element literal '" + s + "'", line);
        const std::size_t wpos = term.find('w');
        unsigned long coeff = 1;
        unsigned long power = 0;
        if (wpos == std::string::npos) {
            coeff = parse_uint(term, line);
        } else {
            if (wpos > 0) {
                if (term[wpos - 1] != '*')
                    throw parse_error("expected '*' before 'w' in '" + term + "'", line);
                coeff = parse_uint(term.substr(0, wpos - 1), line);
            }
            const std::string rest = term.substr(wpos + 1);
            if (rest.empty())
                power = 1;
            else if (rest[0] == '^')
                power = parse_uint(rest.substr(1), line);
            else
                throw parse_error("expected '^' after 'w' in '" + term + "'", line);
        }
        if (coeff >= f.characteristic())
            throw parse_error("coefficient " + std::to_string(coeff) + " not reduced mod " +
                                  std::to_string(f.characteristic()),
                              line);
        if (power >= f.degree())
            throw parse_error("power w^" + std::to_string(power) + " out of range", line);
        digits[power] = (digits[power] + static_cast<std::uint32_t>(coeff)) % f.characteristic();
    }
    return f.from_coeffs(digits);
}

ExtElement parse_ext_element_at(const std::string& raw, const ExtensionSpec& e, int line) {
    const std::string s = compact(raw);
    if (s.empty()) throw parse_error("empty element literal", line);
    std::vector<FieldElement> coords(e.degree(), e.base().zero());
    for (const std::string& term : split_top(s, '+')) {
        if (term.empty()) throw parse_error("empty term in element literal '" + s + "'", line);
        int depth = 0;
        std::size_t zpos = std::string::npos;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (term[i] == 'z' && depth == 0) zpos = i;
        }
        std::string coeff_str;
        unsigned long power = 0;
        if (zpos == std::string::npos) {
            coeff_str = term;
        } else {
            const std::string rest = term.substr(zpos + 1);
            if (rest.empty())
                power = 1;
            else if (rest[0] == '^')
                power = parse_uint(rest.substr(1), line);
            else
                throw parse_error("expected '^' after 'z' in '" + term + "'", line);
            coeff_str = term.substr(0, zpos);
            if (!coeff_str.empty() && coeff_str.back() == '*') coeff_str.pop_back();
            if (coeff_str.empty()) coeff_str = "1";
        }
        if (coeff_str.size() >= 2 && coeff_str.front() == '(' && coeff_str.back() == ')')
            coeff_str = coeff_str.substr(1, coeff_str.size() - 2);
        if (power >= e.degree())
            throw parse_error("power z^" + std::to_string(power) + " out of range", line);
        const FieldElement c = parse_element_at(coeff_str, e.base(), line);
        coords[power] = coords[power] + c;
    }
    return e.from_coords(std::move(coords));
}

struct Line {
    int no;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string s;
    int no = 0;
    while (std::getline(in, s)) lines.push_back({++no, s});
    return lines;
}

}  // namespace

std::string element_text(const FieldElement& a) {
    const FieldSpec& f = a.field();
    if (f.degree() == 1) return std::to_string(a.value());
    if (a.is_zero()) return "0";
    const auto d = a.coeffs();
    std::string out;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (d[static_cast<std::size_t>(i)] == 0) continue;
        if (!out.empty()) out += '+';
        out += std::to_string(d[static_cast<std::size_t>(i)]);
        if (i >= 1) out += "*w";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

FieldElement parse_element(const std::string& s, const FieldSpec& f) {
    return parse_element_at(s, f, 0);
}

std::string ext_element_text(const ExtElement& a) {
    if (a.is_zero()) return "0";
    const auto& coords = a.coords();
    std::string out;
    for (int i = static_cast<int>(coords.size()) - 1; i >= 0; --i) {
        const FieldElement& c = coords[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = element_text(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (!out.empty()) out += '+';
        out += cs;
        if (i >= 1) out += "*z";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

ExtElement parse_ext_element(const std::string& s, const ExtensionSpec& e) {
    return parse_ext_element_at(s, e, 0);
}

std::string field_spec_text(const FieldSpec& f) {
    if (f.degree() == 1) return "GF(" + std::to_string(f.characteristic()) + ")";
    std::string out = "GF(" + std::to_string(f.characteristic()) + "^" +
                      std::to_string(f.degree()) + "; ";
    const auto& mod = f.modulus();
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) {
        out += std::to_string(mod[static_cast<std::size_t>(i)]);
        if (i > 0) out += ",";
    }
    return out + ")";
}

namespace {

// Shared shell parser for GF(head) / GF(head; tail) forms.
void parse_gf_shell(const std::string& s, int line, std::string& head, std::string& tail,
                    bool& has_tail) {
    const std::string t = compact(s);
    if (t.size() < 5 || t.substr(0, 3) != "GF(" || t.back() != ')')
        throw parse_error("expected GF(...) field spec, got '" + s + "'", line);
    const std::string inner = t.substr(3, t.size() - 4);
    const auto parts = split_top(inner, ';');
    if (parts.size() > 2) throw parse_error("too many ';' in field spec '" + s + "'", line);
    head = parts[0];
    has_tail = parts.size() == 2;
    tail = has_tail ? parts[1] : "";
}

void parse_power_head(const std::string& head, int line, unsigned long& base,
                      unsigned long& exp) {
    const auto pieces = split(head, '^');
    if (pieces.size() > 2) throw parse_error("too many '^' in field spec", line);
    base = parse_uint(pieces[0], line);
    exp = pieces.size() == 2 ? parse_uint(pieces[1], line) : 1;
    if (exp < 1) throw parse_error("extension degree must be at least 1", line);
}

FieldSpecPtr parse_field_spec_at(const std::string& s, int line) {
    std::string head, tail;
    bool has_tail = false;
    parse_gf_shell(s, line, head, tail, has_tail);
    unsigned long p = 0, n = 0;
    parse_power_head(head, line, p, n);
    try {
        if (!has_tail) return FieldSpec::get(static_cast<std::uint32_t>(p), static_cast<unsigned>(n));
        const auto digits = split(tail, ',');
        if (digits.size() != n + 1)
            throw parse_error("modulus needs " + std::to_string(n + 1) + " digits", line);
        std::vector<std::uint32_t> mod(n + 1);
        for (std::size_t i = 0; i < digits.size(); ++i)
            mod[n - i] = static_cast<std::uint32_t>(parse_uint(digits[i], line));
        return FieldSpec::get(static_cast<std::uint32_t>(p), static_cast<unsigned>(n), mod);
    } catch (const domain_error& e) {
        throw parse_error(std::string("invalid field spec: ") + e.what(), line);
    }
}

ExtensionSpecPtr parse_ext_spec_at(const std::string& s, const FieldSpecPtr& base, int line) {
    std::string head, tail;
    bool has_tail = false;
    parse_gf_shell(s, line, head, tail, has_tail);
    unsigned long q = 0, m = 0;
    parse_power_head(head, line, q, m);
    if (q != base->cardinality())
        throw parse_error("extension base size " + std::to_string(q) +
                              " does not match the field line (" +
                              std::to_string(base->cardinality()) + ")",
                          line);
    try {
        if (!has_tail) return ExtensionSpec::get(base, static_cast<unsigned>(m));
        const auto lits = split_top(tail, ',');
        if (lits.size() != m + 1)
            throw parse_error("modulus needs " + std::to_string(m + 1) + " coefficients", line);
        std::vector<FieldElement> mod;
        mod.resize(m + 1, base->zero());
        for (std::size_t i = 0; i < lits.size(); ++i)
            mod[m - i] = parse_element_at(lits[i], *base, line);
        return ExtensionSpec::get(base, static_cast<unsigned>(m), mod);
    } catch (const domain_error& e) {
        throw parse_error(std::string("invalid extension spec: ") + e.what(), line);
    }
}

}  // namespace

FieldSpecPtr parse_field_spec(const std::string& s) { return parse_field_spec_at(s, 0); }

std::string ext_spec_text(const ExtensionSpec& e) {
    std::string out = "GF(" + std::to_string(e.base_cardinality()) + "^" +
                      std::to_string(e.degree()) + "; ";
    const auto& mod = e.modulus();
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) {
        out += element_text(mod[static_cast<std::size_t>(i)]);
        if (i > 0) out += ",";
    }
    return out + ")";
}

ExtensionSpecPtr parse_ext_spec(const std::string& s, const FieldSpecPtr& base) {
    return parse_ext_spec_at(s, base, 0);
}

std::string matrix_text(const MatrixFq& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        if (i > 0) out += "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += element_text(m.at(i, j));
        }
    }
    return out;
}

std::string vector_text(const std::vector<ExtElement>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += ext_element_text(v[i]);
    }
    return out;
}

CodeFile read_code_file(const std::string& text) {
    std::istringstream in(text);
    return read_code_file(in);
}

CodeFile read_code_file(std::istream& in) {
    const std::vector<Line> lines = read_lines(in);
    std::size_t idx = 0;
    auto next_content = [&]() -> const Line* {
        while (idx < lines.size() && is_blank(lines[idx].text)) ++idx;
        return idx < lines.size() ? &lines[idx] : nullptr;
    };
    auto take = [&]() -> const Line& {
        const Line* l = next_content();
        if (!l) throw parse_error("unexpected end of file", lines.empty() ? 1 : lines.back().no);
        ++idx;
        return *l;
    };

    {
        const Line& l = take();
        if (strip(l.text) != "rankcode v1")
            throw parse_error("expected header 'rankcode v1'", l.no);
    }

    CodeFile out;
    {
        const Line& l = take();
        const std::string t = strip(l.text);
        if (t.rfind("field ", 0) != 0) throw parse_error("expected 'field GF(...)'", l.no);
        out.field = parse_field_spec_at(t.substr(6), l.no);
    }

    const Line* peek = next_content();
    int ext_line_no = 0;
    if (peek && strip(peek->text).rfind("ext ", 0) == 0) {
        const Line& l = take();
        ext_line_no = l.no;
        out.ext = parse_ext_spec_at(strip(l.text).substr(4), out.field, l.no);
    }

    {
        const Line& l = take();
        const std::string t = strip(l.text);
        if (t.rfind("shape ", 0) != 0) throw parse_error("expected 'shape k m kind'", l.no);
        std::istringstream ss(t.substr(6));
        std::string ks, ms, kind;
        if (!(ss >> ks >> ms >> kind)) throw parse_error("expected 'shape k m kind'", l.no);
        std::string extra;
        if (ss >> extra) throw parse_error("trailing text after shape", l.no);
        out.k = static_cast<int>(parse_uint(ks, l.no));
        out.m = static_cast<int>(parse_uint(ms, l.no));
        if (out.k < 1 || out.m < 1) throw parse_error("shape must be positive", l.no);
        if (kind == "delsarte")
            out.kind = CodeFile::Kind::Delsarte;
        else if (kind == "gabidulin")
            out.kind = CodeFile::Kind::Gabidulin;
        else
            throw parse_error("kind must be 'delsarte' or 'gabidulin', got '" + kind + "'", l.no);
        if (out.kind == CodeFile::Kind::Delsarte && out.ext)
            throw parse_error("'ext' line is only valid in gabidulin files", ext_line_no);
        if (out.kind == CodeFile::Kind::Gabidulin) {
            if (!out.ext) throw parse_error("gabidulin files need an 'ext' line", l.no);
            if (out.ext->degree() != static_cast<unsigned>(out.m))
                throw parse_error("shape m does not match the extension degree", l.no);
        }
    }

    peek = next_content();
    if (peek && strip(peek->text).rfind("basis ", 0) == 0) {
        const Line& l = take();
        if (out.kind != CodeFile::Kind::Gabidulin)
            throw parse_error("'basis' line is only valid in gabidulin files", l.no);
        const auto lits = split_top(strip(l.text).substr(6), ',');
        if (lits.size() != static_cast<std::size_t>(out.m))
            throw parse_error("basis needs " + std::to_string(out.m) + " elements", l.no);
        std::vector<ExtElement> elems;
        elems.reserve(lits.size());
        for (const auto& s : lits) elems.push_back(parse_ext_element_at(s, *out.ext, l.no));
        try {
            out.basis.emplace(std::move(elems));
        } catch (const domain_error& e) {
            throw parse_error(std::string("invalid basis: ") + e.what(), l.no);
        }
    }

    std::vector<MatrixFq> mat_gens;
    std::vector<std::vector<ExtElement>> vec_gens;
    for (;;) {
        peek = next_content();
        if (!peek) break;
        const Line& gen_line = take();
        if (strip(gen_line.text) != "gen")
            throw parse_error("expected 'gen', got '" + strip(gen_line.text) + "'", gen_line.no);

        if (out.kind == CodeFile::Kind::Delsarte) {
            std::vector<std::vector<FieldElement>> rows;
            while (idx < lines.size() && !is_blank(lines[idx].text) &&
                   strip(lines[idx].text) != "gen") {
                const Line& l = lines[idx++];
                for (const std::string& piece : split(l.text, ';')) {
                    const std::string row = strip(piece);
                    if (row.empty()) continue;
                    const auto entries = split(row, ',');
                    if (entries.size() != static_cast<std::size_t>(out.m))
                        throw parse_error("matrix row needs " + std::to_string(out.m) +
                                              " entries, got " + std::to_string(entries.size()),
                                          l.no);
                    std::vector<FieldElement> erow;
                    erow.reserve(entries.size());
                    for (const auto& s : entries)
                        erow.push_back(parse_element_at(s, *out.field, l.no));
                    rows.push_back(std::move(erow));
                }
            }
            if (rows.size() != static_cast<std::size_t>(out.k))
                throw parse_error("matrix needs " + std::to_string(out.k) + " rows, got " +
                                      std::to_string(rows.size()),
                                  gen_line.no);
            mat_gens.push_back(MatrixFq::from_rows(*out.field, rows));
        } else {
            std::string body;
            while (idx < lines.size() && !is_blank(lines[idx].text) &&
                   strip(lines[idx].text) != "gen")
                body += strip(lines[idx++].text);
            const auto lits = split_top(body, ',');
            if (lits.size() != static_cast<std::size_t>(out.k))
                throw parse_error("vector needs " + std::to_string(out.k) + " entries, got " +
                                      std::to_string(lits.size()),
                                  gen_line.no);
            std::vector<ExtElement> v;
            v.reserve(lits.size());
            for (const auto& s : lits) v.push_back(parse_ext_element_at(s, *out.ext, gen_line.no));
            vec_gens.push_back(std::move(v));
        }
    }

    if (out.kind == CodeFile::Kind::Delsarte) {
        out.given_generators = static_cast<int>(mat_gens.size());
        out.delsarte = DelsarteCode::from_generators(*out.field, out.k, out.m, mat_gens);
    } else {
        out.given_generators = static_cast<int>(vec_gens.size());
        out.gabidulin = GabidulinCode::from_generators(*out.ext, out.k, vec_gens);
    }
    return out;
}

void write_delsarte_file(std::ostream& os, const DelsarteCode& c) {
    os << "rankcode v1\n";
    os << "field " << field_spec_text(c.field()) << "\n";
    os << "shape " << c.k() << " " << c.m() << " delsarte\n";
    for (const auto& g : c.generators()) {
        os << "gen\n";
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j) {
                if (j > 0) os << ",";
                os << element_text(g.at(i, j));
            }
            os << (i + 1 < g.rows() ? ";" : "") << "\n";
        }
        os << "\n";
    }
}

void write_gabidulin_file(std::ostream& os, const GabidulinCode& c,
                          const std::optional<FieldBasis>& basis) {
    os << "rankcode v1\n";
    os << "field " << field_spec_text(c.ext().base()) << "\n";
    os << "ext " << ext_spec_text(c.ext()) << "\n";
    os << "shape " << c.length() << " " << c.ext().degree() << " gabidulin\n";
    if (basis) {
        os << "basis ";
        for (unsigned i = 0; i < basis->size(); ++i) {
            if (i > 0) os << ",";
            os << ext_element_text((*basis)[i]);
        }
        os << "\n";
    }
    for (const auto& g : c.generators()) {
        os << "gen\n" << vector_text(g) << "\n\n";
    }
}

}  // namespace rmc
