#include "extfair/io.hpp"

#include <fstream>

namespace extfair {

namespace {

Rational number(const Json& j, const char* where) {
  if (!j.is_string())
    throw Error(Errc::Parse, std::string("expected a rational string at ") + where);
  return parse_rational(j.get<std::string>());
}

std::vector<Rational> number_row(const Json& j, int m, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw Error(Errc::Parse, std::string("expected ") + std::to_string(m) + " values at " + where);
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(m));
  for (const Json& x : j) out.push_back(number(x, where));
  return out;
}

Json string_row(const std::vector<Rational>& row, size_t offset, size_t count) {
  Json arr = Json::array();
  for (size_t k = 0; k < count; ++k) arr.push_back(to_string(row[offset + k]));
  return arr;
}

struct Header {
  int n;
  int m;
  std::vector<std::string> item_ids;
};

Header read_header(const Json& doc, const char* schema) {
  if (!doc.is_object() || doc.value("schema", std::string()) != schema)
    throw Error(Errc::Parse, std::string("document is not ") + schema);
  if (!doc.contains("agents") || !doc["agents"].is_number_integer())
    throw Error(Errc::Parse, "missing integer field 'agents'");
  Header h;
  h.n = doc["agents"].get<int>();
  if (!doc.contains("items") || !doc["items"].is_array())
    throw Error(Errc::Parse, "missing array field 'items'");
  for (const Json& id : doc["items"]) {
    if (!id.is_string()) throw Error(Errc::Parse, "item ids must be strings");
    h.item_ids.push_back(id.get<std::string>());
  }
  h.m = static_cast<int>(h.item_ids.size());
  return h;
}

Json header_json(const char* schema, int n, const std::vector<std::string>& item_ids, int m) {
  Json doc;
  doc["schema"] = schema;
  doc["agents"] = n;
  Json items = Json::array();
  for (int k = 0; k < m; ++k)
    items.push_back(k < static_cast<int>(item_ids.size()) ? item_ids[static_cast<size_t>(k)]
                                                          : "g" + std::to_string(k + 1));
  doc["items"] = items;
  return doc;
}

const Json& agent_records(const Json& doc, int n) {
  if (!doc.contains("valuations") || !doc["valuations"].is_array() ||
      static_cast<int>(doc["valuations"].size()) != n)
    throw Error(Errc::Parse, "'valuations' must hold one record per agent");
  return doc["valuations"];
}

}  // namespace

Json to_json(const Instance2D& instance) {
  Json doc = header_json(kSchema2D, instance.n, instance.item_ids, instance.m);
  Json vals = Json::array();
  for (int i = 0; i < instance.n; ++i) {
    Json rec;
    rec["v"] = string_row(instance.v, instance.idx(i, 0), static_cast<size_t>(instance.m));
    rec["vprime"] =
        string_row(instance.vprime, instance.idx(i, 0), static_cast<size_t>(instance.m));
    vals.push_back(std::move(rec));
  }
  doc["valuations"] = std::move(vals);
  return doc;
}

Json to_json(const Instance1D& instance) {
  Json doc = header_json(kSchema1D, instance.n, instance.item_ids, instance.m);
  Json vals = Json::array();
  for (int i = 0; i < instance.n; ++i) {
    Json rec;
    rec["w"] = string_row(instance.w, instance.idx(i, 0), static_cast<size_t>(instance.m));
    vals.push_back(std::move(rec));
  }
  doc["valuations"] = std::move(vals);
  return doc;
}

Json to_json(const FullInstance& instance) {
  Json doc = header_json(kSchemaFull, instance.n, {}, instance.m);
  Json vals = Json::array();
  for (int i = 0; i < instance.n; ++i) {
    Json rows = Json::array();
    for (int j = 0; j < instance.n; ++j) {
      Json row = Json::array();
      for (int k = 0; k < instance.m; ++k) row.push_back(to_string(instance.value(i, j, k)));
      rows.push_back(std::move(row));
    }
    Json rec;
    rec["v_full"] = std::move(rows);
    vals.push_back(std::move(rec));
  }
  doc["valuations"] = std::move(vals);
  return doc;
}

Json to_json(const Allocation& alloc) {
  Json doc;
  doc["schema"] = kSchemaAlloc;
  doc["assignment"] = alloc.assignment;
  return doc;
}

Json to_json(const TransformResult& result, const std::vector<std::string>& item_ids) {
  Instance1D one_d = result.one_d;
  if (one_d.item_ids.empty()) one_d.item_ids = item_ids;
  Json doc = to_json(one_d);
  Json shift = Json::array();
  for (const Rational& s : result.shift) shift.push_back(to_string(s));
  doc["shift"] = std::move(shift);
  return doc;
}

Instance2D instance_2d_from_json(const Json& doc) {
  const Header h = read_header(doc, kSchema2D);
  Instance2D out;
  out.n = h.n;
  out.m = h.m;
  out.item_ids = h.item_ids;
  for (const Json& rec : agent_records(doc, h.n)) {
    if (!rec.is_object() || !rec.contains("v") || !rec.contains("vprime"))
      throw Error(Errc::Parse, "2-D agent records need 'v' and 'vprime'");
    for (Rational& x : number_row(rec["v"], h.m, "v")) out.v.push_back(std::move(x));
    for (Rational& x : number_row(rec["vprime"], h.m, "vprime"))
      out.vprime.push_back(std::move(x));
  }
  out.validate();
  return out;
}

Instance1D instance_1d_from_json(const Json& doc) {
  const Header h = read_header(doc, kSchema1D);
  Instance1D out;
  out.n = h.n;
  out.m = h.m;
  out.item_ids = h.item_ids;
  for (const Json& rec : agent_records(doc, h.n)) {
    if (!rec.is_object() || !rec.contains("w"))
      throw Error(Errc::Parse, "1-D agent records need 'w'");
    for (Rational& x : number_row(rec["w"], h.m, "w")) out.w.push_back(std::move(x));
  }
  out.validate();
  return out;
}

FullInstance instance_full_from_json(const Json& doc) {
  const Header h = read_header(doc, kSchemaFull);
  FullInstance out;
  out.n = h.n;
  out.m = h.m;
  for (const Json& rec : agent_records(doc, h.n)) {
    if (!rec.is_object() || !rec.contains("v_full") || !rec["v_full"].is_array() ||
        static_cast<int>(rec["v_full"].size()) != h.n)
      throw Error(Errc::Parse, "full records need 'v_full' with one row per holder");
    for (const Json& row : rec["v_full"])
      for (Rational& x : number_row(row, h.m, "v_full")) out.v_full.push_back(std::move(x));
  }
  out.validate();
  return out;
}

Allocation allocation_from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kSchemaAlloc)
    throw Error(Errc::Parse, std::string("document is not ") + kSchemaAlloc);
  if (!doc.contains("assignment") || !doc["assignment"].is_array())
    throw Error(Errc::Parse, "missing array field 'assignment'");
  std::vector<int> assignment;
  for (const Json& x : doc["assignment"]) {
    if (!x.is_number_integer()) throw Error(Errc::Parse, "assignment entries must be integers");
    assignment.push_back(x.get<int>());
  }
  return Allocation(std::move(assignment));
}

AnyInstance instance_from_json(const Json& doc) {
  const std::string schema = doc.is_object() ? doc.value("schema", std::string()) : std::string();
  if (schema == kSchema2D) return instance_2d_from_json(doc);
  if (schema == kSchema1D) return instance_1d_from_json(doc);
  if (schema == kSchemaFull) return instance_full_from_json(doc);
  throw Error(Errc::Parse, "unknown or missing instance schema");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw Error(Errc::Parse, "invalid JSON in " + path);
  return doc;
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write " + path);
  out << dump_json(doc);
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace extfair
