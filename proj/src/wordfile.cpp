#include "lefkit/wordfile.hpp"

#include <istream>
#include <sstream>

#include "lefkit/atlas.hpp"
#include "lefkit/common.hpp"

namespace lefkit {

namespace {

std::string at_line(std::size_t lineno, const std::string& msg) {
    return "line " + std::to_string(lineno) + ": " + msg;
}

bool looks_like_integer(const std::string& tok) {
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size())
        return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            return false;
    return true;
}

mpz_class parse_integer(const std::string& tok, std::size_t lineno) {
    if (!looks_like_integer(tok))
        throw parse_error(at_line(lineno, "expected an integer, got '" + tok + "'"));
    return mpz_class(tok[0] == '+' ? tok.substr(1) : tok);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t)
        toks.push_back(t);
    return toks;
}

} // namespace

WordFile parse_word_file(std::istream& in, bool strict) {
    WordFile wf;
    std::optional<int> genus;
    std::optional<Base> base;
    std::optional<CurveAtlas> atlas; // built lazily for named twists
    std::vector<TwistLetter> letters;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty())
            continue;
        const std::string& head = toks[0];

        if (head == "genus") {
            if (genus)
                throw parse_error(at_line(lineno, "duplicate genus line"));
            if (!letters.empty())
                throw parse_error(at_line(lineno, "genus must come before twist lines"));
            if (toks.size() != 2)
                throw parse_error(at_line(lineno, "usage: genus <g>"));
            mpz_class g = parse_integer(toks[1], lineno);
            if (g < 1 || g > 1000)
                throw parse_error(at_line(lineno, "genus must be between 1 and 1000"));
            genus = static_cast<int>(g.get_si());
            continue;
        }
        if (head == "base") {
            if (base)
                throw parse_error(at_line(lineno, "duplicate base line"));
            if (!letters.empty())
                throw parse_error(at_line(lineno, "base must come before twist lines"));
            if (toks.size() != 2 || (toks[1] != "disk" && toks[1] != "sphere"))
                throw parse_error(at_line(lineno, "usage: base disk|sphere"));
            base = (toks[1] == "disk") ? Base::disk : Base::sphere;
            continue;
        }
        if (head == "section") {
            if (wf.section_square)
                throw parse_error(at_line(lineno, "duplicate section line"));
            if (toks.size() != 2)
                throw parse_error(at_line(lineno, "usage: section <k>"));
            wf.section_square = parse_integer(toks[1], lineno);
            continue;
        }
        if (head != "twist")
            throw parse_error(at_line(lineno, "unknown directive '" + head + "'"));

        if (!genus)
            throw parse_error(at_line(lineno, "twist before genus line"));
        if (!base)
            throw parse_error(at_line(lineno, "twist before base line"));
        if (toks.size() < 2)
            throw parse_error(at_line(lineno, "usage: twist <name> | twist <exp> <2g ints> [separating]"));

        Surface s{*genus};
        if (!looks_like_integer(toks[1])) {
            // named atlas curve
            if (toks.size() != 2)
                throw parse_error(at_line(lineno, "a named twist takes no further tokens"));
            if (*genus < 2)
                throw parse_error(at_line(lineno, "atlas curve names need genus >= 2"));
            if (!atlas)
                atlas = korkmaz_curves(*genus);
            if (!atlas->has(toks[1]))
                throw parse_error(at_line(lineno, "unknown atlas curve '" + toks[1]
                                                  + "' at genus " + std::to_string(*genus)));
            letters.push_back(atlas->at(toks[1]));
            continue;
        }

        // explicit class: twist <exp> <2g ints> [separating]
        mpz_class exp = parse_integer(toks[1], lineno);
        if (exp == 0)
            throw parse_error(at_line(lineno, "twist exponent must be nonzero"));
        std::size_t want = 2 * static_cast<std::size_t>(*genus);
        bool sep_token = !toks.empty() && toks.back() == "separating";
        std::size_t ncoords = toks.size() - 2 - (sep_token ? 1 : 0);
        if (ncoords != want)
            throw parse_error(at_line(lineno, "expected " + std::to_string(want)
                                              + " coordinates, got " + std::to_string(ncoords)));
        std::vector<mpz_class> coords(want);
        for (std::size_t i = 0; i < want; ++i)
            coords[i] = parse_integer(toks[2 + i], lineno);
        HomologyClass c = make_class(s, std::move(coords));

        bool separating = sep_token;
        if (sep_token && !c.is_zero())
            throw parse_error(at_line(lineno,
                "the separating token needs a zero class (separating curves are null-homologous)"));
        if (!sep_token && c.is_zero()) {
            std::string msg = at_line(lineno,
                "zero-class twist without the 'separating' token; treated as separating");
            if (strict)
                throw parse_error(at_line(lineno,
                    "zero-class twist needs the trailing 'separating' token (strict mode)"));
            wf.warnings.push_back(msg);
            separating = true;
        }
        letters.push_back(make_letter(std::move(c), std::move(exp), separating));
    }

    if (!genus)
        throw parse_error("missing genus line");
    if (!base)
        throw parse_error("missing base line");
    wf.word = make_word(Surface{*genus}, std::move(letters));
    wf.base = *base;
    return wf;
}

WordFile parse_word_file_text(const std::string& text, bool strict) {
    std::istringstream in(text);
    return parse_word_file(in, strict);
}

std::string serialize_word_file(const TwistWord& w, Base base,
                                const std::optional<mpz_class>& section) {
    std::ostringstream out;
    out << "genus " << w.surface.genus << "\n";
    out << "base " << to_string(base) << "\n";
    if (section)
        out << "section " << section->get_str() << "\n";

    std::optional<CurveAtlas> atlas;
    if (w.surface.genus >= 2)
        atlas = korkmaz_curves(w.surface.genus);

    for (const TwistLetter& l : w.letters) {
        if (atlas) {
            // prefer the atlas name when the letter matches one exactly
            const std::string* match = nullptr;
            for (const std::string& name : atlas->names) {
                if (atlas->at(name) == l) {
                    match = &name;
                    break;
                }
            }
            if (match) {
                out << "twist " << *match << "\n";
                continue;
            }
        }
        out << "twist " << l.exponent.get_str();
        for (const mpz_class& c : l.curve.coords)
            out << " " << c.get_str();
        if (l.separating)
            out << " separating";
        out << "\n";
    }
    return out.str();
}

} // namespace lefkit
