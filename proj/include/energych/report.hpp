#ifndef ENERGYCH_REPORT_HPP
#define ENERGYCH_REPORT_HPP

#include <iosfwd>
#include <string>

#include "energych/verifier.hpp"
#include "json.hpp"

namespace energych {

// g6,n,m,energy,chi,ch,chi_bar,margin,verdict,family,isolated_count,lemma_flags
inline constexpr const char* kCsvHeader =
    "g6,n,m,energy,chi,ch,chi_bar,margin,verdict,family,isolated_count,lemma_flags";

std::string csv_row(const VerificationRecord& r);
nlohmann::ordered_json to_json(const VerificationRecord& r);
nlohmann::ordered_json to_json(const Summary& s);

void write_csv(const Report& report, std::ostream& out);
// {"records": [...], "summary": {...}}
void write_json(const Report& report, std::ostream& out);
void write_report(const Report& report, std::ostream& out);

std::string summary_text(const Summary& s);

}  // namespace energych

#endif  // ENERGYCH_REPORT_HPP
