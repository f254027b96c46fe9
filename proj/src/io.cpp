#include "io.hpp"

#include <stdexcept>

namespace mcg {

using nlohmann::json;

json word_to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("word: expected array");
  return reduce(j.get<std::vector<int>>(), rank);
}

json mapping_class_to_json(const MappingClass& f) {
  json fw = json::array(), bw = json::array();
  for (const auto& w : f.aut.forward.images) fw.push_back(word_to_json(w));
  for (const auto& w : f.aut.backward.images) bw.push_back(word_to_json(w));
  return json{{"rank", f.aut.rank()},
              {"genus", f.genus},
              {"provenance", f.provenance},
              {"forward", fw},
              {"backward", bw}};
}

MappingClass mapping_class_from_json(const json& j) {
  int rank = j.at("rank").get<int>();
  int genus = j.contains("genus") ? j.at("genus").get<int>() : rank / 2;
  if (rank != 2 * genus) throw std::invalid_argument("mapping class: rank != 2*genus");
  Endomorphism fw{rank, {}}, bw{rank, {}};
  for (const auto& w : j.at("forward")) fw.images.push_back(word_from_json(w, rank));
  for (const auto& w : j.at("backward")) bw.images.push_back(word_from_json(w, rank));
  if (static_cast<int>(fw.images.size()) != rank ||
      static_cast<int>(bw.images.size()) != rank)
    throw std::invalid_argument("mapping class: wrong image count");
  MappingClass f{Automorphism{fw, bw}, genus,
                 j.contains("provenance") ? j.at("provenance").get<std::string>() : ""};
  check_automorphism(f.aut);
  return f;
}

json matrix_to_json(const SymplecticMatrix& m) {
  return json{{"order", m.order == BasisOrder::interleaved ? "interleaved" : "block"},
              {"rows", m.rows}};
}

SymplecticMatrix matrix_from_json(const json& j) {
  SymplecticMatrix m;
  std::string ord = j.at("order").get<std::string>();
  if (ord == "interleaved") m.order = BasisOrder::interleaved;
  else if (ord == "block") m.order = BasisOrder::block;
  else throw std::invalid_argument("matrix: unknown order tag");
  m.rows = j.at("rows").get<Mat>();
  if (m.rows.empty() || m.rows.size() % 2 != 0)
    throw std::invalid_argument("matrix: need even positive size");
  m.genus = static_cast<int>(m.rows.size()) / 2;
  for (const auto& row : m.rows)
    if (row.size() != m.rows.size()) throw std::invalid_argument("matrix: not square");
  return m;
}

json int_matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(r);
  }
  return json{{"rows", rows}};
}

IntMat int_matrix_from_json(const json& j) {
  IntMat m;
  for (const auto& row : j.at("rows")) {
    std::vector<mpz_class> r;
    for (const auto& x : row) {
      if (x.is_number_integer()) r.push_back(mpz_class(x.get<long>()));
      else r.push_back(mpz_class(x.get<std::string>()));
    }
    m.push_back(r);
  }
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("int matrix: not square");
  return m;
}

json exterior_to_json(const ExteriorElement& e) {
  json terms = json::array();
  for (const auto& [idx, c] : e.terms)
    terms.push_back(json{{"indices", idx}, {"coeff", c}});
  return json{{"rank", e.rank}, {"degree", e.degree}, {"modulus", e.modulus},
              {"terms", terms}};
}

ExteriorElement exterior_from_json(const json& j) {
  std::vector<std::pair<std::vector<int>, long long>> raw;
  for (const auto& t : j.at("terms"))
    raw.push_back({t.at("indices").get<std::vector<int>>(), t.at("coeff").get<long long>()});
  return make_element(j.at("rank").get<int>(), j.at("degree").get<int>(),
                      j.at("modulus").get<long long>(), raw);
}

}  // namespace mcg
