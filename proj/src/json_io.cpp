#include "neckslime/json_io.hpp"

#include <fstream>
#include <sstream>

#include "neckslime/error.hpp"

namespace neckslime {

namespace {

Json entries_array(const Code& f) {
  Json out = Json::array();
  for (Entry e : f.entries()) out.push_back(e);
  return out;
}

Code code_from(const nlohmann::json& value) {
  if (!value.is_array()) throw DomainError("expected an array of entries, got " + value.dump());
  std::vector<Entry> entries;
  for (const auto& e : value) {
    if (!e.is_number_integer()) throw DomainError("code entries must be integers, got " + e.dump());
    entries.push_back(e.get<Entry>());
  }
  return Code(entries);
}

}  // namespace

Json to_json(const Code& f) {
  Json out;
  out["entries"] = entries_array(f);
  out["n"] = f.size();
  out["k"] = f.total();
  return out;
}

Json to_json(const SlimeDecomposition& d) {
  Json out;
  out["m"] = d.max_pair_sum;
  out["valid"] = d.valid;
  if (d.weight) out["weight"] = *d.weight;
  Json slimes = Json::array();
  for (const auto& s : d.slimes) slimes.push_back(Json{{"start", s.start}, {"len", s.length}});
  out["slimes"] = std::move(slimes);
  return out;
}

Json to_json(const Necklace& x) {
  Json out;
  out["canonical"] = entries_array(x.canonical());
  out["word"] = code_to_word(x.canonical()).str();
  return out;
}

Json to_json(const BijectionTable& table) {
  Json out;
  out["n"] = table.n;
  out["k"] = table.k;
  out["riwi"] = table.riwi;
  out["chooser"] = table.chooser;
  Json pairs = Json::array();
  for (const auto& p : table.pairs) {
    Json row;
    row["code"] = entries_array(p.code);
    row["necklace"] = entries_array(p.necklace.canonical());
    row["word"] = code_to_word(p.necklace.canonical()).str();
    pairs.push_back(std::move(row));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const RiwiReport& report) {
  Json out;
  out["n"] = report.n;
  out["k"] = report.k;
  out["riwi"] = report.descriptor;
  out["verdict"] = report.pass() ? "pass" : "fail";
  out["examined"] = report.examined;
  out["bijective"] = report.bijectivity_failures == 0;
  out["rotation_invariant"] = report.rotation_failures == 0;
  out["weighted_sum_increasing"] = report.weighted_sum_failures == 0;
  Json ces = Json::array();
  for (const auto& ce : report.counterexamples) ces.push_back(Json{{"property", ce.property}, {"detail", ce.detail}});
  out["counterexamples"] = std::move(ces);
  return out;
}

Json to_json(const Certificate& cert, bool include_timing) {
  Json out;
  out["check"] = cert.check;
  out["envelope"] = Json{{"n_min", cert.envelope.n_min},
                         {"n_max", cert.envelope.n_max},
                         {"k_min", cert.envelope.k_min},
                         {"k_max", cert.envelope.k_max}};
  out["verdict"] = cert.pass ? "pass" : "fail";
  out["failures"] = cert.failures;
  Json ces = Json::array();
  for (const auto& ce : cert.counterexamples) ces.push_back(Json{{"property", ce.property}, {"detail", ce.detail}});
  out["counterexamples"] = std::move(ces);
  Json counts = Json::object();
  for (const auto& [key, value] : cert.counts) counts[key] = value;
  out["counts"] = std::move(counts);
  Json notes = Json::object();
  for (const auto& [key, value] : cert.notes) notes[key] = value;
  out["notes"] = std::move(notes);
  if (include_timing) out["meta"] = Json{{"wall_ms", cert.wall_ms}};
  return out;
}

std::string table_to_csv(const BijectionTable& table) {
  std::ostringstream out;
  out << "code,necklace,word\n";
  for (const auto& p : table.pairs) {
    out << '"' << p.code.to_string() << "\",\"" << p.necklace.canonical().to_string() << "\","
        << code_to_word(p.necklace.canonical()).str() << '\n';
  }
  return out.str();
}

std::string table_to_text(const BijectionTable& table) {
  std::ostringstream out;
  out << "n=" << table.n << " k=" << table.k << " riwi=" << table.riwi << " chooser=" << table.chooser
      << " pairs=" << table.pairs.size() << '\n';
  for (const auto& p : table.pairs) {
    out << p.code.to_string() << "  ->  <" << p.necklace.canonical().to_string() << ">  "
        << code_to_word(p.necklace.canonical()).str() << '\n';
  }
  return out.str();
}

std::vector<std::pair<Code, Code>> parse_map(const nlohmann::json& doc) {
  if (!doc.is_array()) throw DomainError("map file must hold a JSON array of {\"from\", \"to\"} pairs");
  std::vector<std::pair<Code, Code>> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("from") || !item.contains("to")) {
      throw DomainError("map entry needs \"from\" and \"to\": " + item.dump());
    }
    out.emplace_back(code_from(item["from"]), code_from(item["to"]));
  }
  return out;
}

std::vector<std::pair<Code, Code>> load_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open map file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("map file " + path.string() + " is not JSON: " + e.what());
  }
  return parse_map(doc);
}

}  // namespace neckslime
