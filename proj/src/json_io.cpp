#include "ringcover/json_io.hpp"

#include <limits>
#include <string>

#include "ringcover/errors.hpp"
#include "ringcover/specparser.hpp"

namespace ringcover::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidSpec(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InvalidSpec(std::string("expected a nonnegative integer for ") + what);
  }
  return j.get<std::uint64_t>();
}

Vec as_vec(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidSpec(std::string("expected an array for ") + what);
  Vec v;
  v.reserve(j.size());
  for (const auto& x : j) {
    const auto c = as_u64(x, what);
    if (c > std::numeric_limits<std::uint32_t>::max()) throw InvalidSpec(std::string("entry too large in ") + what);
    v.push_back(static_cast<std::uint32_t>(c));
  }
  return v;
}

arith::PrimePower as_prime_power(const Json& j, const char* what) {
  auto pp = arith::is_prime_power(as_u64(j, what));
  if (!pp) throw InvalidSpec(std::string(what) + " is not a prime power");
  return *pp;
}

}  // namespace

Json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json to_json(const arith::ExtNat& v) { return v.is_infinite() ? Json("inf") : to_json(v.value()); }

Json ring_to_json(const FiniteRing& r) {
  const std::size_t n = r.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto* c = r.product(i, j);
      row.push_back(Json(std::vector<std::uint32_t>(c, c + n)));
    }
    mult.push_back(std::move(row));
  }
  Json out;
  out["p"] = r.p();
  out["dim"] = n;
  out["mult"] = std::move(mult);
  out["unity"] = r.unity() ? Json(*r.unity()) : Json(nullptr);
  out["labels"] = r.labels();
  return out;
}

FiniteRing ring_from_json(const Json& j, const RingCaps& caps) {
  const auto p = as_u64(field(j, "p"), "p");
  if (!arith::is_prime(p) || p > std::numeric_limits<std::uint32_t>::max()) throw InvalidSpec("p must be a 32-bit prime");
  const auto dim = as_u64(field(j, "dim"), "dim");
  const Json& mult = field(j, "mult");
  if (!mult.is_array() || mult.size() != dim) throw InvalidSpec("mult must have dim rows");
  std::vector<std::uint32_t> table;
  table.reserve(dim * dim * dim);
  for (const auto& row : mult) {
    if (!row.is_array() || row.size() != dim) throw InvalidSpec("mult rows must have dim entries");
    for (const auto& cell : row) {
      Vec v = as_vec(cell, "mult");
      if (v.size() != dim) throw InvalidSpec("mult entries must have dim coefficients");
      for (auto c : v) {
        if (c >= p) throw InvalidSpec("mult coefficient not reduced mod p");
      }
      table.insert(table.end(), v.begin(), v.end());
    }
  }
  std::optional<Vec> unity;
  if (j.contains("unity") && !j.at("unity").is_null()) {
    unity = as_vec(j.at("unity"), "unity");
    if (unity->size() != dim) throw InvalidSpec("unity must have dim coefficients");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw InvalidSpec("labels must be an array");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InvalidSpec("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (!labels.empty() && labels.size() != dim) throw InvalidSpec("labels must have dim entries");
  }
  return FiniteRing(p, dim, std::move(table), std::move(unity), std::move(labels), std::nullopt, caps);
}

Json certificate_to_json(const oracle::CoverCertificate& c) {
  Json out;
  out["size"] = c.size;
  out["closed"] = c.closed;
  out["proper"] = c.proper;
  out["covering"] = c.covering;
  out["irredundant"] = c.irredundant;
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(Json(m.basis.rows));
  out["members"] = std::move(members);
  return out;
}

std::vector<std::vector<Vec>> certificate_members_from_json(const Json& j) {
  const Json& members = j.is_array() ? j : field(j, "members");
  if (!members.is_array()) throw InvalidSpec("members must be an array");
  std::vector<std::vector<Vec>> out;
  for (const auto& m : members) {
    if (!m.is_array()) throw InvalidSpec("each member must be an array of vectors");
    std::vector<Vec> vs;
    for (const auto& v : m) vs.push_back(as_vec(v, "member vector"));
    out.push_back(std::move(vs));
  }
  return out;
}

Json cover_to_json(const cover::ACover& c) {
  Json out;
  out["n"] = c.n;
  out["q1"] = c.q1.value();
  out["q2"] = c.q2.value();
  out["q"] = c.q.value();
  out["d"] = c.d;
  out["size"] = c.size();
  out["conjugates"] = c.conjugates;
  out["stabilizers"] = c.stabilizers;
  out["subfields"] = c.subfields;
  out["left_subfields"] = c.left_subfields;
  out["diagonal"] = c.diagonal;
  return out;
}

cover::ACover cover_from_json(const Json& j) {
  cover::ACover c;
  c.n = static_cast<unsigned>(as_u64(field(j, "n"), "n"));
  c.q1 = as_prime_power(field(j, "q1"), "q1");
  c.q2 = as_prime_power(field(j, "q2"), "q2");
  c.q = arith::tensor(c.q1, c.q2);
  c.d = formulas::a_ring_degree(c.q1, c.q2);
  const auto q = c.q.value();
  const auto q1 = c.q1.value();
  for (const auto& x : field(j, "conjugates")) {
    Vec v = as_vec(x, "conjugate");
    if (v.size() != c.n) throw InvalidSpec("conjugate vectors must have n entries");
    for (auto e : v) {
      if (e >= q) throw InvalidSpec("conjugate entry outside F_q");
    }
    c.conjugates.push_back(std::move(v));
  }
  for (const auto& u : field(j, "stabilizers")) {
    if (!u.is_array()) throw InvalidSpec("stabilizer must be an array of rows");
    std::vector<std::vector<cover::Elem>> rows;
    for (const auto& r : u) {
      Vec v = as_vec(r, "stabilizer row");
      if (v.size() != c.n) throw InvalidSpec("stabilizer rows must have n entries");
      for (auto e : v) {
        if (e >= q1) throw InvalidSpec("stabilizer entry outside F_q1");
      }
      rows.push_back(std::move(v));
    }
    c.stabilizers.push_back(std::move(rows));
  }
  auto degrees = [&](const char* key, unsigned of) {
    std::vector<unsigned> out;
    if (!j.contains(key)) return out;
    for (const auto& e : j.at(key)) {
      const auto v = as_u64(e, key);
      if (v == 0 || of % v != 0) throw InvalidSpec(std::string(key) + " degree must divide the field degree");
      out.push_back(static_cast<unsigned>(v));
    }
    return out;
  };
  c.subfields = degrees("subfields", c.q2.d());
  c.left_subfields = degrees("left_subfields", c.q1.d());
  c.diagonal = j.value("diagonal", false);
  return c;
}

Json report_to_json(const formulas::SigmaReport& r) {
  Json out;
  out["sigma"] = r.value ? to_json(*r.value) : Json(nullptr);
  out["sigma_u"] = r.unital_value ? to_json(*r.unital_value) : Json(nullptr);
  out["has_unity"] = r.has_unity;
  out["elementary"] = r.elementary;
  out["u_elementary"] = r.u_elementary;
  out["method"] = formulas::to_string(r.method);
  Json trail = Json::array();
  for (const auto& s : r.reduction_trail) {
    Json step;
    step["quotient"] = spec::format(s.quotient);
    step["rule"] = s.rule;
    trail.push_back(std::move(step));
  }
  out["trail"] = std::move(trail);
  out["note"] = r.note;
  return out;
}

}  // namespace ringcover::io
