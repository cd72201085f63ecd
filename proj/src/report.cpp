#include "lefkit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lefkit {

namespace {

const char* kRelatorCaveatNote =
    "relator_ok reflects the homology action only: identity on homology is "
    "necessary but not sufficient for a relator in the mapping class group";

nlohmann::json json_int(const mpz_class& z) {
    // canonical integer output: a JSON number while it fits, decimal text after
    if (z.fits_slong_p())
        return static_cast<long long>(z.get_si());
    return z.get_str();
}

nlohmann::json json_group(const AbelianGroup& g) {
    nlohmann::json j;
    j["rank"] = g.free_rank;
    j["torsion"] = nlohmann::json::array();
    for (const mpz_class& d : g.torsion)
        j["torsion"].push_back(json_int(d));
    return j;
}

nlohmann::json json_report(const Report& r) {
    nlohmann::json j;
    if (r.genus)
        j["genus"] = *r.genus;
    if (r.base)
        j["base"] = *r.base;
    if (r.length)
        j["length"] = *r.length;
    if (r.h1)
        j["h1"] = json_group(*r.h1);
    if (r.chi)
        j["chi"] = *r.chi;
    if (r.sigma)
        j["sigma"] = *r.sigma;
    if (r.relator_ok)
        j["relator_ok"] = *r.relator_ok;
    if (r.separating_count)
        j["separating_count"] = *r.separating_count;
    if (r.section_square)
        j["section_square"] = json_int(*r.section_square);
    j["notes"] = r.notes;
    return j;
}

} // namespace

std::string to_json(const Report& r) {
    return json_report(r).dump(2);
}

std::string to_json(const std::vector<Report>& rs) {
    nlohmann::json j = nlohmann::json::array();
    for (const Report& r : rs)
        j.push_back(json_report(r));
    return j.dump(2);
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    auto field = [&out](const char* name, const std::string& value) {
        out << name;
        for (std::size_t i = std::string(name).size(); i < 18; ++i)
            out << ' ';
        out << value << "\n";
    };
    if (r.genus)
        field("genus", std::to_string(*r.genus));
    if (r.base)
        field("base", *r.base);
    if (r.length)
        field("length", std::to_string(*r.length));
    if (r.h1)
        field("h1", r.h1->to_string());
    if (r.chi)
        field("chi", std::to_string(*r.chi));
    if (r.sigma)
        field("sigma", std::to_string(*r.sigma));
    if (r.relator_ok)
        field("relator_ok", *r.relator_ok ? "true" : "false");
    if (r.separating_count)
        field("separating_count", std::to_string(*r.separating_count));
    if (r.section_square)
        field("section_square", r.section_square->get_str());
    if (!r.notes.empty()) {
        out << "notes\n";
        for (const std::string& n : r.notes)
            out << "  - " << n << "\n";
    }
    return out.str();
}

Report report_for_filling(const FillingReport& fr) {
    Report r;
    r.genus = fr.genus;
    r.base = to_string(Base::disk);
    r.length = fr.length;
    r.h1 = fr.h1;
    r.chi = fr.chi;
    r.sigma = fr.sigma;
    r.relator_ok = true;
    r.separating_count = fr.separating_count;
    r.section_square = fr.section_square;
    r.notes = fr.notes;
    return r;
}

Report report_for_word(const WordFile& wf) {
    RelatorReport rr = verify_relator(wf.word);

    Report r;
    r.genus = wf.word.surface.genus;
    r.base = to_string(wf.base);
    r.length = rr.length;
    r.relator_ok = rr.identity;
    r.separating_count = rr.separating_count;
    r.section_square = wf.section_square;
    r.notes.push_back(kRelatorCaveatNote);

    // h1 and chi go through the fibration view; over a sphere base this
    // enforces the closure and section hypotheses (precondition errors)
    Fibration f = make_fibration(wf.word, wf.base, wf.section_square);
    r.chi = euler_characteristic(f);
    r.h1 = h1(f);

    if (rr.identity)
        r.sigma = signature(wf.word);
    else
        r.notes.push_back("sigma omitted: the word is not a relator on homology");

    for (const std::string& w : wf.warnings)
        r.notes.push_back("warning: " + w);
    return r;
}

Report report_for_verify(const TwistWord& w, std::optional<Base> base) {
    RelatorReport rr = verify_relator(w);
    Report r;
    r.genus = w.surface.genus;
    if (base)
        r.base = to_string(*base);
    r.length = rr.length;
    r.relator_ok = rr.identity;
    r.separating_count = rr.separating_count;
    r.notes.push_back(rr.caveat);
    return r;
}

Report report_for_plumbing(const PlumbingGraph& p) {
    Report r;
    r.h1 = plumbing_boundary_h1(p);
    std::ostringstream note;
    note << "plumbing graph: " << p.vertices.size()
         << (p.vertices.size() == 1 ? " vertex, " : " vertices, ")
         << p.edges.size() << (p.edges.size() == 1 ? " edge" : " edges");
    r.notes.push_back(note.str());
    return r;
}

} // namespace lefkit
