#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefkit/fibration.hpp"
#include "lefkit/wordfile.hpp"

namespace lefkit {

// The CLI's uniform result record. Fields that do not apply to a command
// are left unset and omitted from the output. Serialization is
// deterministic: sorted keys, canonical decimal integers.
struct Report {
    std::optional<long> genus;
    std::optional<std::string> base; // "disk" or "sphere"
    std::optional<std::size_t> length;
    std::optional<AbelianGroup> h1;
    std::optional<long long> chi;
    std::optional<long long> sigma;
    std::optional<bool> relator_ok;
    std::optional<std::size_t> separating_count;
    std::optional<mpz_class> section_square;
    std::vector<std::string> notes;
};

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
std::string to_text(const Report& r);

// Assemblers behind the CLI commands.
Report report_for_filling(const FillingReport& fr);           // `paper`
Report report_for_word(const WordFile& wf);                   // `word`
Report report_for_verify(const TwistWord& w,
                         std::optional<Base> base);           // `verify`
Report report_for_plumbing(const PlumbingGraph& p);           // `plumbing`

} // namespace lefkit
