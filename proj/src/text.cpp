#include "ncsf/text.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace ncsf {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// A signed sum of terms "c*b[...]", "b[...]" or "c". The callback receives the
// coefficient, the basis letter (0 for a bare constant), the bracket contents
// and the offset of those contents.
template <typename OnTerm>
void scan_linear_combination(const std::string& text, OnTerm on_term) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && is_space(text[i])) ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty expression", i);
    bool first = true;
    while (true) {
        skip();
        Rational sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;
        if (i == text.size()) throw ParseError("expected a term", i);
        Rational coeff = 1;
        bool have_coeff = false;
        if (is_digit(text[i])) {
            const std::size_t start = i;
            while (i < text.size() && (is_digit(text[i]) || text[i] == '/')) ++i;
            try {
                coeff = parse_rational(text.substr(start, i - start));
            } catch (const ParseError& e) {
                throw ParseError("malformed coefficient", start + e.position());
            }
            have_coeff = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            } else {
                on_term(sign * coeff, '\0', std::string(), i);
                skip();
                if (i == text.size()) return;
                continue;
            }
        }
        if (i == text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
            throw ParseError(have_coeff ? "expected a basis letter after '*'" : "expected a term", i);
        const char letter = text[i++];
        skip();
        if (i == text.size() || text[i] != '[') throw ParseError("expected '[' after basis letter", i);
        const std::size_t open = ++i;
        while (i < text.size() && text[i] != ']') ++i;
        if (i == text.size()) throw ParseError("missing ']'", i);
        on_term(sign * coeff, letter, text.substr(open, i - open), open);
        ++i;
        skip();
        if (i == text.size()) return;
    }
}

Basis letter_basis(char letter, std::size_t position) {
    try {
        return parse_basis(std::string(1, letter));
    } catch (const ParseError&) {
        throw ParseError(std::string("unknown basis '") + letter + "'", position);
    }
}

std::string coefficient_prefix(const Rational& magnitude) {
    return magnitude == 1 ? "" : to_string(magnitude) + "*";
}

template <typename Terms, typename Index>
std::string print_combination(char letter, const Terms& terms, Index index_text) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        out += coefficient_prefix(abs(c)) + letter + "[" + index_text(key) + "]";
    }
    return out;
}

Rational json_rational(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw ParseError("coefficient must be a string or an integer", 0);
}

Basis json_basis(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["basis"].is_string() || !j["terms"].is_array())
        throw ParseError("expected an object with \"basis\" and \"terms\"", 0);
    return parse_basis(j["basis"].get<std::string>());
}

}  // namespace

// -------------------------------------------------------------------- NCSym

NCSymElement parse_ncsym(const std::string& text) {
    std::vector<std::pair<Rational, NCSymElement>> pending;
    std::optional<Basis> target;
    scan_linear_combination(text, [&](const Rational& c, char letter, const std::string& inside, std::size_t at) {
        if (letter == '\0') {
            pending.emplace_back(c, NCSymElement::one());
            return;
        }
        const Basis b = letter_basis(letter, at - 2);
        if (b == Basis::s) throw ParseError("Schur functions are not a basis of Π(x); use the schur command", at - 2);
        SetPartition pi;
        try {
            pi = parse_set_partition(inside);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at")), at + e.position());
        }
        if (!target) target = b;
        pending.emplace_back(c, NCSymElement::basis_element(b, pi));
    });
    NCSymElement out(target.value_or(Basis::m));
    for (const auto& [c, f] : pending) out += c * f;
    return out;
}

std::string to_string(const NCSymElement& f) {
    return print_combination(basis_letter(f.basis()), f.terms(), [](const SetPartition& pi) { return to_string(pi); });
}

// ---------------------------------------------------------------------- Sym

SymElement parse_sym(const std::string& text) {
    std::vector<std::pair<Rational, SymElement>> pending;
    std::optional<Basis> target;
    scan_linear_combination(text, [&](const Rational& c, char letter, const std::string& inside, std::size_t at) {
        if (letter == '\0') {
            pending.emplace_back(c, SymElement::basis_element(Basis::m, IntPartition()));
            return;
        }
        const Basis b = letter_basis(letter, at - 2);
        IntPartition lambda;
        try {
            lambda = parse_int_partition(inside);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at")), at + e.position());
        }
        if (!target) target = b;
        pending.emplace_back(c, SymElement::basis_element(b, lambda));
    });
    SymElement out(target.value_or(Basis::m));
    for (const auto& [c, f] : pending) out += c * f;
    return out;
}

std::string to_string(const SymElement& f) {
    // by degree, then reverse lexicographic within a degree
    std::vector<std::pair<IntPartition, Rational>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return lex_compare(a.first, b.first) == std::strong_ordering::greater;
    });
    return print_combination(basis_letter(f.basis()), terms, [](const IntPartition& lambda) {
        std::string out;
        for (int i = 0; i < lambda.length(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
        return out;
    });
}

// --------------------------------------------------------------------- JSON

Json to_json(const NCSymElement& f) {
    Json terms = Json::array();
    for (const auto& [pi, c] : f.terms())
        terms.push_back({{"blocks", pi.blocks()}, {"coeff", to_string(c)}, {"n", pi.size()}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

NCSymElement ncsym_from_json(const Json& j) {
    const Basis b = json_basis(j);
    if (b == Basis::s) throw ParseError("Schur functions are not a basis of Π(x)", 0);
    NCSymElement out(b);
    for (const auto& term : j["terms"]) {
        if (!term.contains("blocks") || !term.contains("coeff")) throw ParseError("term needs \"blocks\" and \"coeff\"", 0);
        const auto blocks = term["blocks"].get<std::vector<std::vector<int>>>();
        try {
            const SetPartition pi = term.contains("n") ? SetPartition::from_blocks(term["n"].get<int>(), blocks)
                                                       : SetPartition::from_blocks(blocks);
            out.add_term(pi, json_rational(term["coeff"]));
        } catch (const SemanticError& e) {
            throw ParseError(e.what(), 0);
        }
    }
    return out;
}

Json to_json(const SymElement& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) terms.push_back({{"parts", lambda.parts()}, {"coeff", to_string(c)}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

SymElement sym_from_json(const Json& j) {
    SymElement out(json_basis(j));
    for (const auto& term : j["terms"]) {
        if (!term.contains("parts") || !term.contains("coeff")) throw ParseError("term needs \"parts\" and \"coeff\"", 0);
        out.add_term(IntPartition(term["parts"].get<std::vector<int>>()), json_rational(term["coeff"]));
    }
    return out;
}

Json to_json(const WordPolynomial& P) {
    Json out = Json::array();
    for (const auto& [w, c] : P.terms()) {
        std::vector<int> letters(w.begin(), w.end());
        out.push_back({{"word", letters}, {"coeff", to_string(c)}});
    }
    return out;
}

Json to_json(const MultiPolynomial& P) {
    const Truncation& t = P.truncation();
    Json terms = Json::array();
    for (const auto& [e, c] : P.polynomial().terms()) {
        Json factors = Json::array();
        for (int i = 1; i <= t.variables; ++i)
            for (int k = 1; k <= t.alphabets; ++k)
                if (const int x = e[static_cast<std::size_t>(t.index(i, k))]; x > 0) factors.push_back({i, k, x});
        terms.push_back({{"factors", factors}, {"coeff", to_string(c)}});
    }
    return {{"alphabets", t.alphabets}, {"variables", t.variables}, {"terms", terms}};
}

Json to_json(const DottedTableau& T) {
    Json rows = Json::array();
    for (const auto& row : T.rows()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back({x.value, x.dots});
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const Biword& beta) {
    Json columns = Json::array();
    for (const auto& c : beta.columns())
        columns.push_back({{"top", {c.top.value, c.top.dots}}, {"bottom", {c.bottom.value, c.bottom.dots}}});
    return columns;
}

// ------------------------------------------------------------ vectors, RSK

namespace {

DotVector parse_vector_at(const std::string& text, std::size_t& i) {
    auto skip = [&] {
        while (i < text.size() && is_space(text[i])) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
    ++i;
    DotVector v;
    skip();
    if (i < text.size() && text[i] == ']') throw ParseError("a vector needs at least one component", i);
    while (true) {
        skip();
        if (i >= text.size() || !is_digit(text[i])) throw ParseError("expected a nonnegative integer", i);
        int value = 0;
        while (i < text.size() && is_digit(text[i])) {
            value = value * 10 + (text[i++] - '0');
            if (value > 255) throw ParseError("component too large", i);
        }
        v.push_back(value);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            return v;
        }
        throw ParseError("expected ',' or ']'", i);
    }
}

void expect_end(const std::string& text, std::size_t i) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i != text.size()) throw ParseError("trailing characters", i);
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return is_space(c); });
}

std::vector<std::vector<DottedEntry>> parse_rows(const std::vector<std::string>& lines) {
    std::vector<std::vector<DottedEntry>> rows;
    for (const auto& line : lines) {
        std::vector<DottedEntry> row;
        for (const auto& w : split_words(line)) row.push_back(parse_dotted_entry(w));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

DotVector parse_dot_vector(const std::string& text) {
    std::size_t i = 0;
    DotVector v = parse_vector_at(text, i);
    expect_end(text, i);
    return v;
}

VectorPartition parse_vector_partition(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    std::vector<DotVector> parts;
    while (true) {
        parts.push_back(parse_vector_at(text, i));
        while (i < text.size() && is_space(text[i])) ++i;
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == '}') {
            ++i;
            break;
        }
        throw ParseError("expected ',' or '}'", i);
    }
    expect_end(text, i);
    const int dimension = static_cast<int>(parts.front().size());
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) != dimension) throw ParseError("vectors of different dimensions", 0);
    return VectorPartition(dimension, std::move(parts));
}

DottedEntry parse_dotted_entry(const std::string& text) {
    std::size_t i = 0;
    int value = 0;
    while (i < text.size() && is_digit(text[i])) {
        value = value * 10 + (text[i++] - '0');
        if (value > 255) throw ParseError("entry too large in '" + text + "'", i);
    }
    if (i == 0 || value == 0) throw ParseError("expected a positive value in '" + text + "'", 0);
    int dots = 0;
    while (i < text.size() && text[i] == '\'') {
        ++dots;
        ++i;
    }
    if (dots == 0) throw ParseError("entry '" + text + "' needs at least one dot (')", i);
    if (i != text.size()) throw ParseError("unexpected character in entry '" + text + "'", i);
    return {value, dots};
}

Biword parse_biword(const std::string& text) {
    std::vector<std::string> lines;
    for (auto& line : lines_of(text))
        if (!blank(line)) lines.push_back(line);
    if (lines.empty()) return Biword();
    if (lines.size() != 2) throw ParseError("a biword has two lines, top row then bottom row", 0);
    const auto top = split_words(lines[0]);
    const auto bottom = split_words(lines[1]);
    if (top.size() != bottom.size()) throw ParseError("biword rows have different lengths", 0);
    std::vector<BiwordColumn> columns;
    for (std::size_t c = 0; c < top.size(); ++c) columns.push_back({parse_dotted_entry(top[c]), parse_dotted_entry(bottom[c])});
    return Biword(std::move(columns));
}

std::pair<DottedTableau, DottedTableau> parse_tableau_pair(const std::string& text) {
    auto lines = lines_of(text);
    while (!lines.empty() && blank(lines.back())) lines.pop_back();
    std::size_t start = 0;
    while (start < lines.size() && blank(lines[start])) ++start;
    std::vector<std::string> first;
    std::vector<std::string> second;
    std::size_t i = start;
    for (; i < lines.size() && !blank(lines[i]); ++i) first.push_back(lines[i]);
    while (i < lines.size() && blank(lines[i])) ++i;
    for (; i < lines.size(); ++i) {
        if (blank(lines[i])) throw ParseError("more than two tableaux in input", 0);
        second.push_back(lines[i]);
    }
    return {DottedTableau(parse_rows(first)), DottedTableau(parse_rows(second))};
}

std::string to_string(const DottedTableau& T, const DottedTableau& U) { return to_string(T) + "\n" + to_string(U); }

}  // namespace ncsf
