#include "cocharlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cocharlab/errors.hpp"
#include "cocharlab/report.hpp"

namespace cocharlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(static_cast<long long>(v.get_si()));
  return ordered_json(v.get_str());
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format: " + s);
}

std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (cur.empty()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(std::stoi(cur));
  }
  if (out.empty()) throw std::invalid_argument("bad integer list: " + s);
  return out;
}

struct NamedGrading {
  std::string name;
  ElementaryGrading grading;
};

NamedGrading parse_grading(int m, const std::string& s) {
  if (s == "phi") return {"phi", ElementaryGrading::phi(m)};
  if (s == "psi") return {"psi", ElementaryGrading::psi(m)};
  char sep = s.find(',') != std::string::npos ? ',' : '-';
  ElementaryGrading g(parse_int_list(s, sep));
  if (g.order() != m)
    throw std::invalid_argument("grading tuple length != m");
  return {g.to_string(), g};
}

// key/value rendering shared by the csv and latex formats of the
// non-report commands
struct FlatDoc {
  std::vector<std::pair<std::string, std::string>> kv;
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
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

std::string render(const ordered_json& doc, const FlatDoc& flat,
                   OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump(2) + "\n";
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : flat.kv) os << csv_quote(k) << "," << csv_quote(v) << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "\\begin{tabular}{ll}\n\\hline\n";
  for (const auto& [k, v] : flat.kv)
    os << latex_escape(k) << " & " << latex_escape(v) << " \\\\\n";
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

void put(ordered_json& doc, FlatDoc& flat, const std::string& key, const Int& v) {
  doc[key] = json_int(v);
  flat.kv.emplace_back(key, v.get_str());
}

std::string cmd_compute_or_oracle(bool oracle_mode, int m,
                                  const NamedGrading& g, std::optional<int> n,
                                  const std::optional<Multidegree>& l, int cap,
                                  OutputFormat format) {
  ordered_json doc;
  FlatDoc flat;
  doc["schema"] = 1;
  doc["command"] = oracle_mode ? "oracle" : "compute";
  doc["m"] = m;
  doc["grading"] = g.name;
  flat.kv.emplace_back("command", oracle_mode ? "oracle" : "compute");
  flat.kv.emplace_back("grading", g.name);

  if (!oracle_mode && !(g.grading == ElementaryGrading::phi(m)))
    throw std::invalid_argument(
        "compute implements the phi-grading formula; use the oracle for "
        "other gradings");

  auto xi_json = [&](const CharacterSum& xi) {
    ordered_json arr = ordered_json::array();
    for (const auto& [lam, mult] : xi.terms()) {
      ordered_json e;
      e["lambda"] = lam.to_string();
      e["multiplicity"] = json_int(mult);
      arr.push_back(e);
      flat.kv.emplace_back("xi" + lam.to_string(), mult.get_str());
    }
    return arr;
  };
  auto multi_json = [&](const MultiCharacter& mc) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, mult] : mc.terms()) {
      ordered_json e;
      ordered_json comps = ordered_json::array();
      std::string kk;
      for (const Partition& p : key) {
        comps.push_back(p.to_string());
        kk += p.to_string();
      }
      e["components"] = comps;
      e["multiplicity"] = json_int(mult);
      arr.push_back(e);
      flat.kv.emplace_back("xi" + kk, mult.get_str());
    }
    return arr;
  };

  if (l) {
    doc["multidegree"] = l->to_string();
    flat.kv.emplace_back("multidegree", l->to_string());
    if (oracle_mode) {
      GradedMatrixAlgebra algebra(g.grading);
      MultiCharacter mc = xi_oracle(algebra, *l, cap);
      put(doc, flat, "gamma", mc.total_dimension());
      doc["xi"] = multi_json(mc);
    } else {
      MultiCharacter mc = xi_multidegree(m, *l);
      put(doc, flat, "gamma", mc.total_dimension());
      doc["xi"] = multi_json(mc);
    }
    return render(doc, flat, format);
  }

  if (!n) throw std::invalid_argument("need --n or --multidegree");
  doc["n"] = *n;
  flat.kv.emplace_back("n", std::to_string(*n));
  ordered_json breakdown = ordered_json::array();
  if (oracle_mode) {
    GradedMatrixAlgebra algebra(g.grading);
    OracleResult res = xi_n_oracle(algebra, *n, cap);
    put(doc, flat, "gamma", res.gamma);
    doc["xi"] = xi_json(res.xi);
    for (const auto& [ml, gl] : res.breakdown) {
      ordered_json e;
      e["multidegree"] = ml.to_string();
      e["gamma"] = json_int(gl);
      breakdown.push_back(e);
    }
  } else {
    EngineResult res = xi_n(m, *n);
    put(doc, flat, "gamma", res.gamma);
    doc["xi"] = xi_json(res.xi);
    for (const auto& [ml, gl] : res.breakdown) {
      ordered_json e;
      e["multidegree"] = ml.to_string();
      e["gamma"] = json_int(gl);
      breakdown.push_back(e);
    }
  }
  doc["breakdown"] = breakdown;
  return render(doc, flat, format);
}

std::string cmd_tables(int m, const std::optional<Partition>& lambda,
                       std::optional<int> n, OutputFormat format) {
  const PublishedTable& t = published_table(m);
  ordered_json doc;
  FlatDoc flat;
  doc["schema"] = 1;
  doc["command"] = "tables";
  doc["m"] = m;
  flat.kv.emplace_back("command", "tables");
  if (lambda) {
    PublishedValue v = t.multiplicity(*lambda);
    doc["lambda"] = lambda->to_string();
    doc["value"] = json_int(v.value);
    doc["source"] = v.source;
    flat.kv.emplace_back("lambda", lambda->to_string());
    flat.kv.emplace_back("value", v.value.get_str());
    flat.kv.emplace_back("source", v.source);
    return render(doc, flat, format);
  }
  if (n) {
    doc["n"] = *n;
    ordered_json arr = ordered_json::array();
    for (const PublishedValue& v : t.gamma_at(*n)) {
      ordered_json e;
      e["source"] = v.source;
      e["value"] = json_int(v.value);
      arr.push_back(e);
      flat.kv.emplace_back("gamma " + v.source, v.value.get_str());
    }
    doc["gamma"] = arr;
    return render(doc, flat, format);
  }
  // full dump
  ordered_json gforms = ordered_json::array();
  for (const auto& f : t.gamma_forms()) {
    ordered_json e;
    e["label"] = f.label;
    e["source"] = f.source;
    e["printed"] = f.printed;
    gforms.push_back(e);
    flat.kv.emplace_back("gamma (" + f.label + ")", f.printed);
  }
  doc["gamma_forms"] = gforms;
  ordered_json badlist = ordered_json::array();
  for (const DegreeSequence& b : t.printed_bad_sequences()) {
    badlist.push_back(b.to_string());
    flat.kv.emplace_back("printed bad sequence", b.to_string());
  }
  doc["printed_bad_sequences"] = badlist;
  return render(doc, flat, format);
}

std::string cmd_badseq(int m, const NamedGrading& g, int maxlen,
                       OutputFormat format) {
  ordered_json doc;
  FlatDoc flat;
  doc["schema"] = 1;
  doc["command"] = "badseq";
  doc["m"] = m;
  doc["grading"] = g.name;
  doc["max_len"] = maxlen;
  flat.kv.emplace_back("command", "badseq");
  flat.kv.emplace_back("grading", g.name);

  std::vector<DegreeSequence> computed = bad_sequences(g.grading, maxlen);
  ordered_json arr = ordered_json::array();
  for (const DegreeSequence& eta : computed) {
    ordered_json e;
    e["eta"] = eta.to_string();
    e["generator"] = render_generator(eta);
    arr.push_back(e);
    flat.kv.emplace_back(eta.to_string(), render_generator(eta));
  }
  doc["bad_sequences"] = arr;

  bool is_phi = g.grading == ElementaryGrading::phi(m);
  if (is_phi && m >= 3 && m <= 5) {
    const auto& printed = published_table(m).printed_bad_sequences();
    ordered_json parr = ordered_json::array();
    for (const DegreeSequence& eta : printed) parr.push_back(eta.to_string());
    doc["printed_list"] = parr;
    ordered_json donly = ordered_json::array(), ponly = ordered_json::array();
    for (const DegreeSequence& eta : computed) {
      if (std::find(printed.begin(), printed.end(), eta) == printed.end()) {
        donly.push_back(eta.to_string());
        flat.kv.emplace_back("computed_only", eta.to_string());
      }
    }
    for (const DegreeSequence& eta : printed) {
      if (std::find(computed.begin(), computed.end(), eta) == computed.end()) {
        ponly.push_back(eta.to_string());
        flat.kv.emplace_back("printed_only", eta.to_string());
      }
    }
    ordered_json diff;
    diff["computed_only"] = donly;
    diff["printed_only"] = ponly;
    doc["diff"] = diff;
  }
  return render(doc, flat, format);
}

std::string cmd_verify(int m, int n, int cap, OutputFormat format) {
  return emit_report(build_verify_report(m, n, cap), format);
}

std::string cmd_compare(int m, const NamedGrading& a, const NamedGrading& b,
                        int n, int cap, OutputFormat format) {
  GradedMatrixAlgebra A(a.grading), B(b.grading);
  OracleResult ra = xi_n_oracle(A, n, cap);
  OracleResult rb = xi_n_oracle(B, n, cap);
  DominanceResult dom = dominance_compare(ra.xi, rb.xi);

  ordered_json doc;
  FlatDoc flat;
  doc["schema"] = 1;
  doc["command"] = "compare";
  doc["m"] = m;
  doc["n"] = n;
  doc["gradings"] = ordered_json::array({a.name, b.name});
  doc["conjecture"] = "m_lambda(" + a.name + ") <= m_lambda(" + b.name +
                      ") for all lambda (multiplicity order, Y-proper data)";
  doc["verdict"] = to_string(dom.verdict);
  flat.kv.emplace_back("command", "compare");
  flat.kv.emplace_back("conjecture", doc["conjecture"].get<std::string>());
  flat.kv.emplace_back("verdict", to_string(dom.verdict));
  ordered_json gam;
  gam[a.name] = json_int(ra.gamma);
  gam[b.name] = json_int(rb.gamma);
  doc["gamma"] = gam;
  flat.kv.emplace_back("gamma " + a.name, ra.gamma.get_str());
  flat.kv.emplace_back("gamma " + b.name, rb.gamma.get_str());
  ordered_json rows = ordered_json::array();
  for (const auto& [lam, d] : dom.diff) {
    ordered_json e;
    e["lambda"] = lam.to_string();
    e[a.name] = json_int(ra.xi.multiplicity(lam));
    e[b.name] = json_int(rb.xi.multiplicity(lam));
    e["diff"] = json_int(d);
    rows.push_back(e);
    flat.kv.emplace_back("diff" + lam.to_string(), d.get_str());
  }
  doc["rows"] = rows;
  return render(doc, flat, format);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Y-proper graded cocharacters of UT_m under elementary "
               "cyclic gradings"};
  app.require_subcommand(1);

  int m = 0, n = -1, cap = kDefaultOracleCap;
  std::string grading = "phi", format = "json", lambda_s, multidegree_s,
              gradings_s = "phi,psi";

  auto add_common = [&](CLI::App* sub, bool with_grading = true) {
    sub->add_option("--m", m, "matrix size / cyclic group order")->required();
    if (with_grading)
      sub->add_option("--grading", grading,
                      "phi | psi | explicit tuple g1,g2,...");
    sub->add_option("--format", format, "json | csv | latex");
    sub->add_option("--cap", cap, "total-degree cap for oracle runs");
  };

  CLI::App* compute = app.add_subcommand("compute", "engine xi_n / gamma_n");
  add_common(compute);
  compute->add_option("--n", n, "total degree");
  compute->add_option("--multidegree", multidegree_s, "l1,l2,...");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force xi_n / gamma_n");
  add_common(oracle);
  oracle->add_option("--n", n, "total degree");
  oracle->add_option("--multidegree", multidegree_s, "l1,l2,...");

  CLI::App* tables = app.add_subcommand("tables", "published-table lookup");
  add_common(tables, false);
  tables->add_option("--lambda", lambda_s, "partition a,b,...");
  tables->add_option("--n", n, "evaluate printed gamma forms at n");

  CLI::App* badseq =
      app.add_subcommand("badseq", "minimal bad sequences and generators");
  add_common(badseq);

  CLI::App* verify = app.add_subcommand("verify", "discrepancy report");
  add_common(verify, false);
  verify->add_option("--n", n, "total degree")->required();

  CLI::App* compare =
      app.add_subcommand("compare", "dominance-compare two gradings (oracle)");
  add_common(compare, false);
  compare->add_option("--gradings", gradings_s,
                      "two gradings, comma separated (phi,psi or tuples with "
                      "- separators: 0-0-1,0-1-2)");
  compare->add_option("--n", n, "total degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    if (m < 2) throw std::invalid_argument("need m >= 2");
    OutputFormat fmt = parse_format(format);
    std::optional<Multidegree> l;
    if (!multidegree_s.empty()) {
      l = Multidegree(parse_int_list(multidegree_s));
      if (l->length() != m)
        throw std::invalid_argument("multidegree length != m");
    }
    std::optional<Partition> lam;
    if (!lambda_s.empty()) lam = Partition(parse_int_list(lambda_s));
    std::optional<int> nn;
    if (n >= 0) nn = n;

    if (app.got_subcommand(compute))
      out << cmd_compute_or_oracle(false, m, parse_grading(m, grading), nn, l,
                                   cap, fmt);
    else if (app.got_subcommand(oracle))
      out << cmd_compute_or_oracle(true, m, parse_grading(m, grading), nn, l,
                                   cap, fmt);
    else if (app.got_subcommand(tables))
      out << cmd_tables(m, lam, nn, fmt);
    else if (app.got_subcommand(badseq))
      out << cmd_badseq(m, parse_grading(m, grading),
                        badseq->count("--cap") ? cap : m, fmt);
    else if (app.got_subcommand(verify))
      out << cmd_verify(m, n, cap, fmt);
    else if (app.got_subcommand(compare)) {
      auto comma = gradings_s.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--gradings needs two entries");
      NamedGrading ga = parse_grading(m, gradings_s.substr(0, comma));
      NamedGrading gb = parse_grading(m, gradings_s.substr(comma + 1));
      out << cmd_compare(m, ga, gb, n, cap, fmt);
    }
    return 0;
  } catch (const NotACharacter& e) {
    err << "internal error (NotACharacter): " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cocharlab
