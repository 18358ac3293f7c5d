#include "render.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace hyplat::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string digest(const std::string& content) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string("fnv1a:") + buf;
}

json to_json(const SignatureTriple& s) {
  return json::array({s.positive, s.negative, s.zero});
}

json to_json(const MQField::Ptr& f) {
  json gens = json::array();
  for (const Integer& g : f->generators()) gens.push_back(g.get_str());
  return json{{"generators", gens}, {"description", f->describe()}};
}

json gram_to_json(const FMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const OrderResult& o) {
  switch (o.kind) {
    case OrderResult::Kind::Finite:
      return json{{"kind", "finite"}, {"order", o.order}};
    case OrderResult::Kind::ExceedsCap:
      return json{{"kind", "exceeds-cap"}, {"cap", o.cap}};
    case OrderResult::Kind::InfiniteHeuristic:
      return json{{"kind", "infinite-heuristic"}, {"evidence", o.evidence}};
  }
  return json{{"kind", "?"}};
}

json vector_to_json(const FMatrix& columns, std::size_t col) {
  json out = json::array();
  for (std::size_t i = 0; i < columns.rows(); ++i)
    out.push_back(columns(i, col).str());
  return out;
}

std::string signature_text(const SignatureTriple& s) { return s.str(); }

}  // namespace hyplat::cli
