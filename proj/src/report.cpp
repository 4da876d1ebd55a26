#include "energych/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace energych {

namespace {

std::string fixed(double x) {
  if (x == 0.0) x = 0.0;  // no "-0.000..."
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) s = "0.000000000000";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flags_text(const LemmaFlags& f) {
  std::string out;
  for (const auto& [name, ok] : f.entries()) {
    if (!out.empty()) out += ';';
    out += name + (ok ? "=1" : "=0");
  }
  return out;
}

std::vector<int> members_of(VertexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

nlohmann::ordered_json witness_json(const TypeWitness& w) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(w.kind);
  if (w.kind == TypeKind::F2) {
    j["clique"] = members_of(w.clique);
    j["independent"] = members_of(w.independent);
    j["cycle"] = w.cycle;
  } else {
    j["S1"] = members_of(w.s1);
    j["T"] = members_of(w.t);
    j["S2"] = members_of(w.s2);
  }
  return j;
}

nlohmann::ordered_json witness_json(const ExceptionWitness& w) {
  nlohmann::ordered_json j;
  j["tag"] = w.to_string();
  j["n"] = w.n;
  j["t"] = w.t;
  j["isolated_count"] = w.isolated_count;
  return j;
}

}  // namespace

std::string csv_row(const VerificationRecord& r) {
  std::ostringstream out;
  out << r.g6 << ',' << r.n << ',' << r.m << ',' << fixed(r.energy) << ',' << r.chi << ','
      << r.ch << ',' << r.chi_bar << ',' << fixed(r.margin) << ',' << to_string(r.verdict) << ','
      << csv_field(r.family ? r.family->to_string() : "none") << ',' << r.isolated_count << ','
      << flags_text(r.flags);
  return out.str();
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["g6"] = r.g6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["energy"] = fixed(r.energy);
  j["chi"] = r.chi;
  j["ch"] = r.ch;
  j["chi_bar"] = r.chi_bar;
  j["margin"] = fixed(r.margin);
  j["verdict"] = to_string(r.verdict);
  j["family"] = r.family ? witness_json(*r.family) : nlohmann::ordered_json(nullptr);
  j["isolated_count"] = r.isolated_count;
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : r.flags.entries()) flags[name] = ok;
  j["lemma_flags"] = flags;

  if (r.ch_bar) j["ch_bar"] = *r.ch_bar;
  if (r.chi_family) j["chi_family"] = witness_json(*r.chi_family);
  if (r.type_witness) j["ng_witness"] = witness_json(*r.type_witness);
  if (r.exact_sign) j["exact_margin_sign"] = *r.exact_sign;
  if (r.mismatch) j["mismatch"] = true;
  if (r.unresolved) {
    j["unresolved"] = true;
    j["note"] = r.note;
  }
  if (r.mismatch || r.verdict == Verdict::Borderline) {
    nlohmann::ordered_json spectrum = nlohmann::ordered_json::array();
    for (double x : r.spectrum) spectrum.push_back(fixed(x));
    j["spectrum"] = spectrum;
    if (!r.char_poly.empty()) j["char_poly"] = r.char_poly;
  }
  if (r.counterexample) j["counterexample_lists"] = r.counterexample->lists;
  return j;
}

nlohmann::ordered_json to_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["theorem"] = s.theorem;
  j["tolerance"] = s.tolerance;
  nlohmann::ordered_json per_order = nlohmann::ordered_json::object();
  int total = 0;
  for (const auto& [n, c] : s.graphs_per_order) {
    per_order[std::to_string(n)] = c;
    total += c;
  }
  j["graphs"] = total;
  j["graphs_per_order"] = per_order;
  j["strict_exceptions"] = s.strict_exceptions;
  j["family_census"] = s.family_census;
  if (!s.chi_family_census.empty()) j["chi_family_census"] = s.chi_family_census;
  if (!s.type_census.empty()) j["ng_type_census"] = s.type_census;
  j["borderline"] = s.borderline;
  j["mismatches"] = s.mismatches;
  j["unresolved"] = s.unresolved;
  j["flag_failures"] = s.flag_failures;
  j["exit_code"] = s.exit_code();
  return j;
}

void write_csv(const Report& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.records) out << csv_row(r) << '\n';
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  nlohmann::ordered_json summary = to_json(report.summary);
  summary["conventions"] = {
      {"f1_allow_empty_t", report.config.conventions.allow_empty_t},
      {"f2_allow_empty_parts", report.config.conventions.allow_empty_f2_parts}};
  j["summary"] = std::move(summary);
  out << j.dump(2) << '\n';
}

void write_report(const Report& report, std::ostream& out) {
  if (report.config.format == OutputFormat::Json)
    write_json(report, out);
  else
    write_csv(report, out);
}

std::string summary_text(const Summary& s) {
  std::ostringstream out;
  int total = 0;
  for (const auto& [n, c] : s.graphs_per_order) total += c;
  out << "theorem " << s.theorem << ": " << total << " graphs, " << s.strict_exceptions
      << " strict exceptions, " << s.borderline.size() << " borderline, " << s.mismatches.size()
      << " mismatches, " << s.unresolved.size() << " unresolved";
  for (const auto& [name, c] : s.flag_failures) out << "\n  flag " << name << " failed on " << c;
  for (const auto& g : s.mismatches) out << "\n  mismatch " << g;
  for (const auto& g : s.unresolved) out << "\n  unresolved " << g;
  return out.str();
}

}  // namespace energych
