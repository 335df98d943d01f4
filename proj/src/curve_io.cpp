#include "hz/curve_io.hpp"

namespace hz {

using nlohmann::json;

CurveInput parse_curve_document(const json& doc) {
  CurveInput in;
  if (!doc.is_object()) fail(Errc::InvalidInput, "document must be a JSON object");
  if (!doc.contains("p") || !doc["p"].is_number_integer())
    fail(Errc::InvalidInput, "missing integer field \"p\"");
  long long p = doc["p"].get<long long>();
  if (p < 2) fail(Errc::InvalidInput, "p must be >= 3");
  if (p % 2 == 0) fail(Errc::EvenCharacteristic, "p = " + std::to_string(p));
  in.p = static_cast<uint64_t>(p);

  in.n = 1;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
      fail(Errc::InvalidInput, "\"n\" must be a positive integer");
    in.n = doc["n"].get<unsigned>();
  }

  if (doc.contains("field_poly")) {
    if (!doc["field_poly"].is_array() ||
        doc["field_poly"].size() != in.n + 1)
      fail(Errc::InvalidInput, "\"field_poly\" must list n+1 integers");
    for (const auto& v : doc["field_poly"]) {
      if (!v.is_number_integer()) fail(Errc::InvalidInput, "field_poly entries must be integers");
      long long c = v.get<long long>();
      if (c < 0 || c >= p) fail(Errc::InvalidInput, "field_poly coefficients must lie in [0, p)");
      in.field_poly.push_back(static_cast<uint32_t>(c));
    }
    in.field_poly_given = true;
  }

  if (!doc.contains("Q") || !doc["Q"].is_array())
    fail(Errc::InvalidInput, "missing array field \"Q\"");
  for (const auto& entry : doc["Q"]) {
    std::vector<uint32_t> coord(in.n, 0);
    if (entry.is_number_integer()) {
      long long c = entry.get<long long>();
      if (c < 0 || c >= p) fail(Errc::InvalidInput, "Q entries must lie in [0, p)");
      coord[0] = static_cast<uint32_t>(c);
    } else if (entry.is_array()) {
      if (entry.size() != in.n)
        fail(Errc::InvalidInput, "Q coefficient lists must have n entries");
      for (size_t j = 0; j < entry.size(); ++j) {
        if (!entry[j].is_number_integer())
          fail(Errc::InvalidInput, "Q coordinates must be integers");
        long long c = entry[j].get<long long>();
        if (c < 0 || c >= p) fail(Errc::InvalidInput, "Q coordinates must lie in [0, p)");
        coord[j] = static_cast<uint32_t>(c);
      }
    } else {
      fail(Errc::InvalidInput, "Q entries must be integers or coordinate lists");
    }
    in.Q.push_back(std::move(coord));
  }
  if (in.Q.size() < 4 || in.Q.size() % 2 != 0)
    fail(Errc::WrongDegree, "Q needs 2g+2 entries (odd degree 2g+1 >= 3)");
  std::vector<uint32_t> lead = in.Q.back();
  bool monic = lead[0] == 1;
  for (size_t j = 1; j < lead.size(); ++j) monic = monic && lead[j] == 0;
  if (!monic) fail(Errc::NotMonic, "last Q entry must equal 1");
  in.genus = static_cast<unsigned>((in.Q.size() - 2) / 2);
  return in;
}

CurveInput parse_curve_line(const std::string& line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(Errc::InvalidInput, std::string("JSON parse error: ") + e.what());
  }
  return parse_curve_document(doc);
}

json input_to_json(const CurveInput& in) {
  json j;
  j["p"] = in.p;
  j["n"] = in.n;
  j["field_poly"] = in.field_poly;
  json q = json::array();
  for (const auto& coord : in.Q) {
    if (in.n == 1)
      q.push_back(coord[0]);
    else
      q.push_back(coord);
  }
  j["Q"] = q;
  return j;
}

json result_to_json(const RunResult& r) {
  json j;
  j["input"] = input_to_json(r.input);
  j["genus"] = r.zeta.genus;
  j["q"] = r.zeta.q.get_str();
  json a = json::array();
  for (const auto& v : r.zeta.a) a.push_back(v.get_str());
  j["a"] = a;
  json L = json::array();
  for (const auto& v : r.zeta.L) L.push_back(v.get_str());
  j["L"] = L;
  json counts = json::array();
  for (const auto& v : r.zeta.counts) counts.push_back(v.get_str());
  j["counts"] = counts;
  j["precision"] = {{"N1", r.zeta.profile.N1},
                    {"N", r.zeta.profile.N},
                    {"J", r.zeta.profile.J},
                    {"delta", r.zeta.profile.delta}};
  j["weil_roots"] = {{"pass", r.zeta.weil_root_pass},
                     {"max_rel_dev", r.zeta.weil_root_max_dev}};
  j["timings_ms"] = {{"setup", r.timings.setup_ms},
                     {"step1", r.timings.step1_ms},
                     {"step2", r.timings.step2_ms},
                     {"step3", r.timings.step3_ms},
                     {"verify", r.timings.verify_ms},
                     {"total", r.timings.total_ms}};
  if (!r.verify.empty() || !r.verify_skipped.empty()) {
    json v;
    json entries = json::array();
    for (const auto& e : r.verify)
      entries.push_back({{"i", e.ext},
                         {"oracle_count", e.oracle_count.get_str()},
                         {"match", e.match}});
    v["entries"] = entries;
    v["skipped"] = r.verify_skipped;
    v["match"] = r.verified;
    j["verification"] = v;
  }
  return j;
}

json error_to_json(const Error& e) {
  return json{{"error", errc_name(e.code())}, {"message", e.what()}};
}

}  // namespace hz
