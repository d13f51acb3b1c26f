#include "certint/fnspec.hpp"

#include <sstream>
#include <vector>

namespace certint {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            flush();
        } else if (ch == '(' || ch == ')' || ch == '|' || ch == ';') {
            flush();
            out.push_back(std::string(1, ch));
        } else {
            cur += ch;
        }
    }
    flush();
    return out;
}

struct Parser {
    const std::vector<std::string>& toks;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) throw ParseError("unexpected end of function spec");
        return toks[pos];
    }
    std::string take() {
        const std::string t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (done() || toks[pos] != t)
            throw ParseError("expected '" + t + "' in function spec");
        ++pos;
    }

    Rational number() { return Rational::from_string(take()); }

    /// key=v1,v2,... (value list may be empty: "key=").
    std::vector<Rational> keyed_list(const std::string& key) {
        const std::string t = take();
        const std::string prefix = key + "=";
        if (t.rfind(prefix, 0) != 0)
            throw ParseError("expected '" + key + "=...', got '" + t + "'");
        std::vector<Rational> out;
        const std::string rest = t.substr(prefix.size());
        if (rest.empty()) return out;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(Rational::from_string(item));
        return out;
    }

    Rational keyed_number(const std::string& key) {
        auto vals = keyed_list(key);
        if (vals.size() != 1) throw ParseError("'" + key + "=' expects a single value");
        return vals[0];
    }

    bool peek_has_prefix(const std::string& prefix) const {
        return !done() && toks[pos].rfind(prefix, 0) == 0;
    }

    FuncModelPtr model() {
        const std::string head = take();
        if (head == "step") return step_model();
        if (head == "poly") return poly_model();
        if (head == "abs") return abs_model();
        if (head == "fatcantor") return fatcantor_model();
        if (head == "patho") return patho_model();
        if (head == "affine") return affine_model();
        if (head == "glue") return glue_model();
        throw ParseError("unknown model kind '" + head + "'");
    }

    FuncModelPtr step_model() {
        const Rational a = number(), b = number();
        std::vector<Rational> bps;
        if (peek_has_prefix("bp=")) bps = keyed_list("bp");
        const std::vector<Rational> vals = keyed_list("vals");
        std::vector<std::optional<Rational>> at;
        if (peek_has_prefix("at=")) {
            for (const Rational& v : keyed_list("at")) at.push_back(v);
            if (at.size() != bps.size())
                throw ParseError("'at=' expects one value per breakpoint");
        }
        return make_step(Interval(a, b), bps, vals, at);
    }

    FuncModelPtr poly_model() {
        std::vector<PolyPiece> pieces;
        for (;;) {
            const Rational a = number(), b = number();
            pieces.push_back(PolyPiece{Interval(a, b), keyed_list("coeffs")});
            if (!done() && peek() == ";") {
                take();
                continue;
            }
            break;
        }
        return make_piecewise_polynomial(std::move(pieces));
    }

    FuncModelPtr abs_model() {
        const Rational a = number(), b = number();
        return make_abs_shift(Interval(a, b), keyed_number("center"));
    }

    FuncModelPtr fatcantor_model() {
        const Rational d = keyed_number("depth");
        if (!d.is_integer() || d.sign() <= 0) throw ParseError("depth must be a positive integer");
        Rational ratio(1, 4);
        if (peek_has_prefix("ratio=")) ratio = keyed_number("ratio");
        return make_fat_cantor_indicator(FatCantorSpec(ratio), d.num().get_ui());
    }

    FuncModelPtr patho_model() {
        if (!done() && peek() != ")" && peek() != "|" && peek() != ";") {
            const Rational a = number(), b = number();
            return make_pathological(Interval(a, b));
        }
        return make_pathological();
    }

    FuncModelPtr affine_model() {
        const Rational s = keyed_number("scale");
        const Rational o = keyed_number("offset");
        expect("(");
        FuncModelPtr inner = model();
        expect(")");
        return make_affine_image(std::move(inner), s, o);
    }

    FuncModelPtr glue_model() {
        expect("(");
        std::vector<FuncModelPtr> parts;
        parts.push_back(model());
        while (!done() && peek() == "|") {
            take();
            parts.push_back(model());
        }
        expect(")");
        return make_glued(std::move(parts));
    }
};

} // namespace

FuncModelPtr parse_function_spec(const std::string& text) {
    const auto toks = tokenize(text);
    Parser p{toks};
    FuncModelPtr m = p.model();
    if (!p.done()) throw ParseError("trailing tokens after function spec");
    return m;
}

std::map<Rational, Rational> parse_sample_table(const std::string& text) {
    std::map<Rational, Rational> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string xs, fs, extra;
        if (!(ls >> xs)) continue; // blank line
        if (!(ls >> fs) || (ls >> extra))
            throw ParseError("table line needs exactly two entries: '" + line + "'");
        out[Rational::from_string(xs)] = Rational::from_string(fs);
    }
    return out;
}

} // namespace certint
