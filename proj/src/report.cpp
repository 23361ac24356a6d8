#include "jramsey/report.hpp"

#include <cstdio>

namespace jramsey {

namespace {

Json paths_json(const std::vector<PathWitness>& paths) {
  Json out = Json::array();
  for (const auto& p : paths) out.push_back(p.vertices);
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Json to_json(const ExtractionTrace& trace) {
  Json j;
  j["theorem"] = trace.theorem;
  j["case"] = trace.case_id;
  j["params"] = {{"n", trace.n}, {"s", trace.s}, {"m", trace.m}, {"t", trace.t}};
  j["k"] = trace.k;
  j["paths"] = paths_json(trace.paths);
  Json aug = Json::array();
  for (auto [u, v] : trace.augmented_edges) aug.push_back({u, v});
  j["augmented_edges"] = aug;
  Json groups = Json::object();
  for (const auto& [name, vs] : trace.groups) groups[name] = vs;
  j["groups"] = groups;
  Json sel = Json::object();
  for (const auto& [role, v] : trace.selections) sel[role] = v;
  j["selections"] = sel;
  j["notes"] = trace.notes;
  return j;
}

Json to_json(const DichotomyWitness& w) {
  Json j = to_json(w.trace);
  Json wit;
  if (const auto* p = std::get_if<PathsInF>(&w.outcome)) {
    wit["kind"] = "paths_in_f";
    wit["paths"] = paths_json(p->paths);
  } else {
    const auto& emb = std::get<JahangirInComplement>(w.outcome).embedding;
    wit["kind"] = "jahangir_in_complement";
    wit["pattern"] = to_string(emb.pattern);
    wit["map"] = emb.map;
  }
  j["witness"] = wit;
  j["verified"] = w.verified;
  j["forced"] = w.trace.forced;
  return j;
}

Json to_json(const RamseyCertificate& cert) {
  Json j;
  j["g"] = to_string(cert.g);
  j["h"] = to_string(cert.h);
  j["value"] = cert.value;
  j["lower_witness"] = to_graph6(cert.lower_witness);
  j["upper_record"] = {{"order", cert.upper.order},
                       {"classes", cert.upper.classes},
                       {"checksum", hex64(cert.upper.checksum)}};
  return j;
}

Json to_json(const RamseyBound& bound) {
  Json j;
  j["g"] = to_string(bound.g);
  j["h"] = to_string(bound.h);
  j["value"] = nullptr;
  j["at_least"] = bound.at_least;
  j["report"] = "value >= " + std::to_string(bound.at_least);
  return j;
}

RamseyCertificate certificate_from_json(const nlohmann::json& j) {
  RamseyCertificate cert;
  try {
    cert.g = parse_pattern(j.at("g").get<std::string>());
    cert.h = parse_pattern(j.at("h").get<std::string>());
    cert.value = j.at("value").get<int>();
    cert.lower_witness = from_graph6(j.at("lower_witness").get<std::string>());
    const auto& up = j.at("upper_record");
    cert.upper.order = up.at("order").get<int>();
    cert.upper.classes = up.at("classes").get<std::int64_t>();
    cert.upper.checksum = std::stoull(up.at("checksum").get<std::string>(), nullptr, 16);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("certificate: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidArgument(std::string("certificate: ") + e.what());
  }
  const auto& lw = cert.lower_witness;
  if (lw.order() != cert.value - 1) throw InvalidArgument("certificate: lower witness order is not value - 1");
  if (find_subgraph(lw, cert.g).status != Search::absent) {
    throw InvalidArgument("certificate: lower witness contains " + to_string(cert.g));
  }
  if (find_subgraph(complement(lw), cert.h).status != Search::absent) {
    throw InvalidArgument("certificate: complement of the lower witness contains " + to_string(cert.h));
  }
  return cert;
}

}  // namespace jramsey
