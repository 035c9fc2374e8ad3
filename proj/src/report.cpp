#include "cocharlab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cocharlab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(static_cast<long long>(v.get_si()));
  return ordered_json(v.get_str());
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '^' || c == '#' || c == '%' || c == '&') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string row_verdict(const std::optional<Int>& engine,
                        const std::vector<PublishedValue>& published,
                        const std::optional<Int>& oracle) {
  if (!oracle) return "UNTESTED";
  bool engine_agrees = !engine || *engine == *oracle;
  bool all_published_agree = true;
  bool some_published_agrees = published.empty();
  for (const auto& p : published) {
    if (p.value == *oracle) some_published_agrees = true;
    else all_published_agree = false;
  }
  if (engine_agrees && all_published_agree) return "ALL_AGREE";
  if (engine_agrees) return "ENGINE_ORACLE_AGREE";
  if (some_published_agrees && !published.empty()) return "PUBLISHED_ONLY";
  return "ORACLE_ONLY";
}

DiscrepancyReport build_verify_report(int m, int n, int cap) {
  DiscrepancyReport rep;
  rep.m = m;
  rep.grading = "phi";

  EngineResult eng = xi_n(m, n);

  std::optional<OracleResult> orc;
  if (n <= cap) {
    GradedMatrixAlgebra algebra(ElementaryGrading::phi(m));
    orc = xi_n_oracle(algebra, n, cap);
  }

  bool have_table = true;
  std::vector<PublishedValue> pub_gammas;
  try {
    pub_gammas = published_table(m).gamma_at(n);
  } catch (const PatternNotCovered&) {
    have_table = false;
  }

  ReportRow grow;
  grow.key = "gamma";
  grow.engine = eng.gamma;
  grow.published = pub_gammas;
  if (orc) grow.oracle = orc->gamma;
  grow.verdict = row_verdict(grow.engine, grow.published, grow.oracle);
  rep.rows.push_back(std::move(grow));

  for (const Partition& lam : partitions_of(n)) {
    ReportRow row;
    row.key = "m" + lam.to_string();
    row.engine = eng.xi.multiplicity(lam);
    if (have_table) {
      try {
        row.published.push_back(published_table(m).multiplicity(lam));
      } catch (const PatternNotCovered&) {
      }
    }
    if (orc) row.oracle = orc->xi.multiplicity(lam);
    row.verdict = row_verdict(row.engine, row.published, row.oracle);
    rep.rows.push_back(std::move(row));
  }

  if (have_table) {
    try {
      for (const std::string& note : published_table(m).xi_at(n).normalization_notes)
        rep.notes.push_back(note);
    } catch (const PatternNotCovered&) {
    }
  }
  return rep;
}

std::string emit_report(const DiscrepancyReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["m"] = r.m;
    doc["grading"] = r.grading;
    doc["rows"] = ordered_json::array();
    for (const ReportRow& row : r.rows) {
      ordered_json jr;
      jr["key"] = row.key;
      jr["engine"] = row.engine ? json_int(*row.engine) : ordered_json(nullptr);
      jr["published"] = ordered_json::array();
      for (const auto& p : row.published) {
        ordered_json jp;
        jp["source"] = p.source;
        jp["value"] = json_int(p.value);
        jr["published"].push_back(jp);
      }
      jr["oracle"] = row.oracle ? json_int(*row.oracle) : ordered_json(nullptr);
      jr["verdict"] = row.verdict;
      doc["rows"].push_back(jr);
    }
    doc["notes"] = r.notes;
    return doc.dump(2) + "\n";
  }

  auto published_text = [](const ReportRow& row) {
    std::string s;
    for (size_t i = 0; i < row.published.size(); ++i) {
      if (i) s += "; ";
      s += row.published[i].source + "=" + int_str(row.published[i].value);
    }
    return s;
  };

  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "key,engine,published,oracle,verdict\n";
    for (const ReportRow& row : r.rows) {
      os << csv_quote(row.key) << ","
         << (row.engine ? int_str(*row.engine) : "") << ","
         << csv_quote(published_text(row)) << ","
         << (row.oracle ? int_str(*row.oracle) : "") << "," << row.verdict
         << "\n";
    }
    for (const std::string& note : r.notes)
      os << csv_quote("note") << "," << "" << "," << csv_quote(note) << ","
         << "" << ",\n";
    return os.str();
  }

  // latex
  std::ostringstream os;
  os << "\\begin{tabular}{lrlrl}\n";
  os << "\\hline\n";
  os << "key & engine & published & oracle & verdict \\\\\n\\hline\n";
  for (const ReportRow& row : r.rows) {
    os << "$" << latex_escape(row.key) << "$ & "
       << (row.engine ? int_str(*row.engine) : "--") << " & "
       << latex_escape(published_text(row)) << " & "
       << (row.oracle ? int_str(*row.oracle) : "--") << " & "
       << latex_escape(row.verdict) << " \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  for (const std::string& note : r.notes)
    os << "% " << note << "\n";
  return os.str();
}

}  // namespace cocharlab
