#include "conehodge/report.hpp"

#include <sstream>

#include "conehodge/version.hpp"

namespace conehodge::report {

using nlohmann::json;

json to_json(const Obstruction& obstruction) {
  json out;
  switch (obstruction.kind) {
    case Obstruction::Kind::NonzeroCell:
      out["kind"] = "nonzero-cell";
      break;
    case Obstruction::Kind::NonzeroH0:
      out["kind"] = "nonzero-h0";
      break;
    case Obstruction::Kind::BlockNotIso:
      out["kind"] = "block-not-iso";
      break;
    case Obstruction::Kind::BlockNotInjective:
      out["kind"] = "block-not-injective";
      break;
    case Obstruction::Kind::BlockNotSurjective:
      out["kind"] = "block-not-surjective";
      break;
  }
  out["p"] = obstruction.p;
  out["q"] = obstruction.q;
  if (obstruction.kind == Obstruction::Kind::NonzeroCell ||
      obstruction.kind == Obstruction::Kind::NonzeroH0) {
    out["m"] = obstruction.m;
    out["value"] = obstruction.value;
  } else {
    out["rank"] = obstruction.rank;
    out["source_dim"] = obstruction.source_dim;
    out["target_dim"] = obstruction.target_dim;
  }
  out["detail"] = obstruction.describe();
  return out;
}

json to_json(const GradedDimension& graded) {
  json out;
  out["window_lo"] = graded.window_lo;
  out["window_hi"] = graded.window_hi;
  json values = json::object();
  for (const auto& [m, v] : graded.values) values[std::to_string(m)] = v;
  out["values"] = std::move(values);
  auto tail_json = [](const Tail& tail) -> json {
    if (tail.kind == Tail::Kind::Zero) return json{{"type", "zero"}};
    json coeffs = json::array();
    for (const auto& c : tail.poly.coeffs()) coeffs.push_back(rational_to_string(c));
    return json{{"type", "poly"}, {"coeffs", std::move(coeffs)}};
  };
  if (graded.pos_tail.declared()) out["pos_tail"] = tail_json(graded.pos_tail);
  if (graded.neg_tail.declared()) out["neg_tail"] = tail_json(graded.neg_tail);
  return out;
}

json to_json(const ValidationReport& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back(json{{"code", v.code}, {"path", v.path}, {"message", v.message}});
  }
  return out;
}

json to_json(const CatalogSpec& spec) {
  json out;
  out["factors"] = spec.factors;
  out["polarization"] = spec.polarization;
  out["window"] = spec.resolved_window();
  out["selector"] = spec.selector();
  return out;
}

json to_json(const ConeDuBoisTable& table) {
  json out;
  out["kind"] = "cone-dubois";
  out["k"] = table.k;
  out["dim_z"] = table.dim_z;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    r["i"] = row.i;
    r["constant_summand"] = row.constant_summand;
    r["top_part"] = to_json(row.top_part);
    if (row.lower_part) r["lower_part"] = to_json(*row.lower_part);
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out;
}

json to_json(const DepthValue& depth) {
  json out;
  out["k"] = depth.k;
  out["depth"] = depth.value;
  out["at_least"] = depth.capped;
  out["display"] = depth.display();
  if (depth.witness) {
    out["witness"] = json{{"failed_d", depth.witness->failed_d},
                          {"obstruction", to_json(depth.witness->obstruction)}};
  }
  if (!depth.defaulted_blocks.empty()) {
    json blocks = json::array();
    for (const auto& [p, q] : depth.defaulted_blocks) blocks.push_back(json::array({p, q}));
    out["defaulted_blocks_consulted"] = std::move(blocks);
  }
  return out;
}

json to_json(const DepthVector& depths) {
  json out;
  out["kind"] = "depth-vector";
  out["dim_z"] = depths.dim_z;
  json entries = json::array();
  for (const auto& entry : depths.entries) entries.push_back(to_json(entry));
  out["entries"] = std::move(entries);
  return out;
}

json to_json(const RestrictionTest& test) {
  json out;
  out["kind"] = "restriction-test";
  out["k"] = test.k;
  out["i"] = test.i;
  out["injective"] = test.injective;
  out["iso"] = test.iso;
  json obstructions = json::array();
  for (const auto& o : test.obstructions) obstructions.push_back(to_json(o));
  out["obstructions"] = std::move(obstructions);
  return out;
}

namespace {

json verdicts_to_json(const std::vector<ConditionVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) {
    json item;
    item["condition"] = v.condition;
    item["detail"] = v.detail;
    item["holds"] = v.holds;
    if (v.indeterminate) item["indeterminate"] = true;
    if (v.obstruction) item["obstruction"] = to_json(*v.obstruction);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

json to_json(const LcdefCertificate& cert) {
  json out;
  out["kind"] = "lcdef-certificate";
  switch (cert.path) {
    case LcdefCertificate::Path::Depth:
      out["path"] = "depth";
      break;
    case LcdefCertificate::Path::Lefschetz:
      out["path"] = "lefschetz";
      break;
    case LcdefCertificate::Path::Classical:
      out["path"] = "classical";
      break;
  }
  out["status"] =
      cert.status == LcdefCertificate::Status::Determined ? "determined" : "indeterminate";
  out["c"] = cert.c;
  if (cert.depth_evidence) {
    out["depth_evidence"] = to_json(*cert.depth_evidence);
    out["binding_k"] = cert.binding_k;
  }
  if (!cert.verdicts.empty()) out["verdicts"] = verdicts_to_json(cert.verdicts);
  if (!cert.previous_c_failures.empty()) {
    out["previous_c_failures"] = verdicts_to_json(cert.previous_c_failures);
  }
  if (!cert.missing_blocks.empty()) {
    json blocks = json::array();
    for (const auto& [p, q] : cert.missing_blocks) blocks.push_back(json::array({p, q}));
    out["missing_blocks"] = std::move(blocks);
  }
  if (!cert.footnote.empty()) {
    json footnote = json::array();
    for (const auto& f : cert.footnote) {
      footnote.push_back(json{{"j", f.j}, {"total", f.total}, {"expected", f.expected}, {"ok", f.ok}});
    }
    out["footnote_check"] = std::move(footnote);
  }
  if (cert.embedded_lcd) out["embedded_lcd"] = *cert.embedded_lcd;
  if (cert.restriction_c) out["restriction_c"] = *cert.restriction_c;
  return out;
}

json to_json(const VanishingAudit& audit) {
  json out;
  out["kind"] = "vanishing-audit";
  out["name"] = audit.name;
  out["violations"] = audit.violation_count();
  json findings = json::array();
  for (const auto& f : audit.findings) {
    findings.push_back(json{{"p", f.p},
                            {"q", f.q},
                            {"m", f.m},
                            {"value", f.value},
                            {"severity", f.violation ? "violation" : "informational"}});
  }
  out["findings"] = std::move(findings);
  return out;
}

json to_json(const PreDuBoisLevel& level) {
  json out;
  out["kind"] = "predubois-level";
  out["all"] = level.all;
  out["level"] = level.level;
  out["display"] = level.display();
  if (level.witness) out["witness"] = to_json(*level.witness);
  return out;
}

json to_json(const KGradedSeries& series) {
  json out;
  out["kind"] = "k-series";
  out["group"] = series.label();
  out["free_rank"] = series.free_rank;
  out["index_lo"] = series.index_lo;
  out["index_hi"] = series.index_hi;
  out["structurally_empty"] = series.structurally_empty();
  json contributions = json::array();
  for (const auto& c : series.contributions) {
    contributions.push_back(json{{"i", c.i}, {"m", c.m}, {"dim", c.dim}, {"p", c.p}, {"q", c.q}});
  }
  out["contributions"] = std::move(contributions);
  json tails = json::array();
  for (const auto& t : series.tails) {
    json tail;
    tail["i"] = t.i;
    tail["p"] = t.p;
    tail["q"] = t.q;
    if (t.tail.kind == Tail::Kind::Zero) {
      tail["law"] = "zero";
    } else {
      tail["law"] = "poly";
      json coeffs = json::array();
      for (const auto& c : t.tail.poly.coeffs()) coeffs.push_back(rational_to_string(c));
      tail["coeffs"] = std::move(coeffs);
    }
    tails.push_back(std::move(tail));
  }
  out["tails"] = std::move(tails);
  out["relative_base"] = "C-relative";
  json bounds = json::array();
  for (const auto& b : series.filtration_bounds) {
    bounds.push_back(
        json{{"j", b.j}, {"window_total", b.window_total}, {"certified_zero", b.certified_zero}});
  }
  out["filtration_bounds"] = std::move(bounds);
  out["q_relative_exact"] = series.q_relative_exact;
  if (series.pic) out["pic"] = to_json(*series.pic);
  return out;
}

json envelope(const std::string& command, json inputs, json results, json violations) {
  json out;
  out["tool_version"] = kVersion;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["violations"] = std::move(violations);
  return out;
}

std::string dump(const json& payload) { return payload.dump(2) + "\n"; }

namespace {

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << "|";
  for (const auto& h : header) out << " " << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : rows) {
    out << "|";
    for (const auto& cell : row) out << " " << cell << " |";
    out << "\n";
  }
  return out.str();
}

std::string graded_summary(const json& graded) {
  std::ostringstream out;
  out << "[" << graded["window_lo"].get<int>() << ", " << graded["window_hi"].get<int>() << "]:";
  if (graded["values"].empty()) {
    out << " 0";
  } else {
    for (const auto& [key, value] : graded["values"].items()) {
      out << " m=" << key << ":" << value.get<std::int64_t>();
    }
  }
  if (graded.contains("pos_tail")) {
    out << "; m>hi: " << (graded["pos_tail"]["type"] == "zero" ? "0" : "poly");
  }
  if (graded.contains("neg_tail")) {
    out << "; m<lo: " << (graded["neg_tail"]["type"] == "zero" ? "0" : "poly");
  }
  return out.str();
}

void render_results_markdown(const json& results, std::ostringstream& out);

void render_one_markdown(const json& results, std::ostringstream& out) {
  const std::string kind = results.value("kind", "");
  if (kind == "depth-vector") {
    out << "### Depth of the Du Bois complexes at the vertex\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& entry : results["entries"]) {
      std::string witness = "-";
      if (entry.contains("witness")) {
        witness = entry["witness"]["obstruction"]["detail"].get<std::string>() + " at d = " +
                  std::to_string(entry["witness"]["failed_d"].get<int>());
      }
      rows.push_back({std::to_string(entry["k"].get<int>()), entry["display"].get<std::string>(),
                      witness});
    }
    out << md_table({"k", "depth", "witness"}, rows);
  } else if (kind == "cone-dubois") {
    out << "### Graded pieces of H^i of the cone complex, k = " << results["k"].get<int>() << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : results["rows"]) {
      std::string constant = row["constant_summand"].get<int>() == 1 ? "C" : "-";
      std::string lower = row.contains("lower_part") ? graded_summary(row["lower_part"]) : "-";
      rows.push_back({std::to_string(row["i"].get<int>()), constant,
                      graded_summary(row["top_part"]), lower});
    }
    out << md_table({"i", "constant", "top part (m >= 1)", "lower part (m >= 1)"}, rows);
  } else if (kind == "lcdef-certificate") {
    out << "### lcdef certificate (" << results["path"].get<std::string>() << " path)\n\n";
    out << "- c = " << results["c"].get<int>() << " (" << results["status"].get<std::string>()
        << ")\n";
    if (results.contains("embedded_lcd")) {
      out << "- embedded lcd = " << results["embedded_lcd"].get<int>() << "\n";
    }
    if (results.contains("restriction_c")) {
      out << "- restriction-criterion c = " << results["restriction_c"].get<int>() << "\n";
    }
    if (results.contains("binding_k") && results["binding_k"].get<int>() >= 0) {
      out << "- binding k = " << results["binding_k"].get<int>() << "\n";
    }
    out << "\n";
    if (results.contains("depth_evidence")) {
      render_one_markdown(results["depth_evidence"], out);
      out << "\n";
    }
    if (results.contains("verdicts")) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : results["verdicts"]) {
        std::string status = v["holds"].get<bool>() ? "ok" : "failed";
        if (v.value("indeterminate", false)) status = "indeterminate";
        std::string detail = v["detail"].get<std::string>();
        if (v.contains("obstruction")) detail += "; " + v["obstruction"]["detail"].get<std::string>();
        rows.push_back({v["condition"].get<std::string>(), status, detail});
      }
      out << md_table({"condition", "status", "detail"}, rows);
    }
    if (results.contains("footnote_check")) {
      out << "\nFootnote corroboration (total H^j in the iso range):\n\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& f : results["footnote_check"]) {
        rows.push_back({std::to_string(f["j"].get<int>()),
                        std::to_string(f["total"].get<std::int64_t>()),
                        std::to_string(f["expected"].get<std::int64_t>()),
                        f["ok"].get<bool>() ? "ok" : "mismatch"});
      }
      out << md_table({"j", "total", "expected", "status"}, rows);
    }
  } else if (kind == "vanishing-audit") {
    out << "### " << results["name"].get<std::string>() << " audit: "
        << results["violations"].get<std::size_t>() << " violation(s)\n\n";
    if (!results["findings"].empty()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& f : results["findings"]) {
        rows.push_back({std::to_string(f["p"].get<int>()), std::to_string(f["q"].get<int>()),
                        std::to_string(f["m"].get<std::int64_t>()),
                        std::to_string(f["value"].get<std::int64_t>()),
                        f["severity"].get<std::string>()});
      }
      out << md_table({"p", "q", "m", "value", "severity"}, rows);
    }
  } else if (kind == "k-series") {
    out << "### " << results["group"].get<std::string>() << "\n\n";
    out << "- free rank: " << results["free_rank"].get<std::int64_t>() << "\n";
    out << "- Hodge index range: ";
    if (results["structurally_empty"].get<bool>()) {
      out << "empty\n";
    } else {
      out << "[" << results["index_lo"].get<int>() << ", " << results["index_hi"].get<int>()
          << "]\n";
    }
    out << "- Q-relative exact: " << (results["q_relative_exact"].get<bool>() ? "yes" : "bounds nonzero")
        << "\n\n";
    if (!results["contributions"].empty()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : results["contributions"]) {
        rows.push_back({std::to_string(c["i"].get<int>()), std::to_string(c["m"].get<std::int64_t>()),
                        std::to_string(c["dim"].get<std::int64_t>())});
      }
      out << md_table({"i", "m", "dim"}, rows);
    } else {
      out << "window contributions: none\n";
    }
    if (results.contains("pic")) {
      out << "\nPic summand (R+/R): " << graded_summary(results["pic"]) << "\n";
    }
  } else if (kind == "predubois-level") {
    out << "### pre-p-Du Bois level: " << results["display"].get<std::string>() << "\n";
    if (results.contains("witness")) {
      out << "\nwitness: " << results["witness"]["detail"].get<std::string>() << "\n";
    }
  } else if (kind == "restriction-test") {
    out << "### restriction H^" << results["i"].get<int>() << " for k = " << results["k"].get<int>()
        << ": injective = true, iso = " << (results["iso"].get<bool>() ? "true" : "false") << "\n";
  } else if (kind == "oracle-hodge") {
    out << "### h^q(P^" << results["n"].get<int>() << ", Omega^" << results["p"].get<int>() << "("
        << results["m"].get<std::int64_t>() << ")) = (";
    const auto& h = results["h"];
    for (std::size_t q = 0; q < h.size(); ++q) out << (q ? "," : "") << h[q].get<std::int64_t>();
    out << ")\n";
  } else if (kind == "oracle-sweep") {
    out << "### oracle sweep, n = " << results["n"].get<int>() << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results["rows"]) {
      rows.push_back({std::to_string(r["p"].get<int>()), std::to_string(r["q"].get<int>()),
                      std::to_string(r["m"].get<std::int64_t>()),
                      std::to_string(r["dim"].get<std::int64_t>())});
    }
    out << md_table({"p", "q", "m", "dim"}, rows);
  } else if (kind == "seminormal") {
    out << "### cone seminormal: " << (results["seminormal"].get<bool>() ? "true" : "false") << "\n";
  } else if (kind == "group") {
    for (const auto& item : results["items"]) {
      render_one_markdown(item, out);
      out << "\n";
    }
    if (results.contains("agreement")) {
      out << (results["agreement"].get<bool>()
                  ? "**Both paths agree.**\n"
                  : "**PATH DISAGREEMENT — see certificates above.**\n");
    }
  } else {
    out << "```json\n" << results.dump(2) << "\n```\n";
  }
}

void render_results_markdown(const json& results, std::ostringstream& out) {
  render_one_markdown(results, out);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void render_one_csv(const json& results, std::ostringstream& out) {
  const std::string kind = results.value("kind", "");
  if (kind == "oracle-sweep") {
    out << "n,p,q,m,dim\n";
    for (const auto& r : results["rows"]) {
      out << results["n"].get<int>() << "," << r["p"].get<int>() << "," << r["q"].get<int>() << ","
          << r["m"].get<std::int64_t>() << "," << r["dim"].get<std::int64_t>() << "\n";
    }
  } else if (kind == "oracle-hodge") {
    out << "n,p,q,m,dim\n";
    const auto& h = results["h"];
    for (std::size_t q = 0; q < h.size(); ++q) {
      out << results["n"].get<int>() << "," << results["p"].get<int>() << "," << q << ","
          << results["m"].get<std::int64_t>() << "," << h[q].get<std::int64_t>() << "\n";
    }
  } else if (kind == "depth-vector") {
    out << "k,depth,at_least,witness\n";
    for (const auto& entry : results["entries"]) {
      std::string witness;
      if (entry.contains("witness")) {
        witness = entry["witness"]["obstruction"]["detail"].get<std::string>();
      }
      out << entry["k"].get<int>() << "," << entry["depth"].get<int>() << ","
          << (entry["at_least"].get<bool>() ? 1 : 0) << "," << csv_escape(witness) << "\n";
    }
  } else if (kind == "vanishing-audit") {
    out << "audit,p,q,m,value,severity\n";
    for (const auto& f : results["findings"]) {
      out << results["name"].get<std::string>() << "," << f["p"].get<int>() << ","
          << f["q"].get<int>() << "," << f["m"].get<std::int64_t>() << ","
          << f["value"].get<std::int64_t>() << "," << f["severity"].get<std::string>() << "\n";
    }
  } else if (kind == "k-series") {
    out << "group,i,m,dim\n";
    for (const auto& c : results["contributions"]) {
      out << results["group"].get<std::string>() << "," << c["i"].get<int>() << ","
          << c["m"].get<std::int64_t>() << "," << c["dim"].get<std::int64_t>() << "\n";
    }
  } else if (kind == "cone-dubois") {
    out << "k,i,part,window_lo,window_hi,nonzero_cells\n";
    for (const auto& row : results["rows"]) {
      auto emit = [&](const char* part, const json& graded) {
        out << results["k"].get<int>() << "," << row["i"].get<int>() << "," << part << ","
            << graded["window_lo"].get<int>() << "," << graded["window_hi"].get<int>() << ","
            << graded["values"].size() << "\n";
      };
      emit("top", row["top_part"]);
      if (row.contains("lower_part")) emit("lower", row["lower_part"]);
    }
  } else if (kind == "group") {
    for (const auto& item : results["items"]) render_one_csv(item, out);
  } else {
    // Generic flattening.
    out << "key,value\n";
    for (const auto& [key, value] : results.items()) {
      out << csv_escape(key) << "," << csv_escape(value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

}  // namespace

std::string render_markdown(const json& env) {
  std::ostringstream out;
  out << "## " << env["command"].get<std::string>() << "\n\n";
  if (env.contains("inputs") && env["inputs"].is_object() && !env["inputs"].empty()) {
    for (const auto& [key, value] : env["inputs"].items()) {
      out << "- " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
    out << "\n";
  }
  render_results_markdown(env["results"], out);
  const auto& violations = env["violations"];
  if (!violations.empty()) {
    out << "\n### Violations\n\n";
    for (const auto& v : violations) {
      out << "- [" << v["code"].get<std::string>() << "] " << v["path"].get<std::string>() << ": "
          << v["message"].get<std::string>() << "\n";
    }
  }
  return out.str();
}

std::string render_csv(const json& env) {
  std::ostringstream out;
  render_one_csv(env["results"], out);
  return out.str();
}

}  // namespace conehodge::report
