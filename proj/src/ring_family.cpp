#include "ringcover/ring_family.hpp"

#include <map>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void flatten_into(const RingFamily& f, std::vector<RingFamily>& out) {
  if (f.is<DirectSum>()) {
    for (const auto& t : f.as<DirectSum>().terms) flatten_into(t, out);
  } else {
    out.push_back(f);
  }
}

std::uint64_t leaf_characteristic(const RingFamily& f) {
  return std::visit(overloaded{
                        [](const FieldSum& v) { return v.q.p(); },
                        [](const Idealization& v) { return v.q.p(); },
                        [](const MatrixRing& v) { return v.q.p(); },
                        [](const ARing& v) { return v.q1.p(); },
                        [](const ZeroMult& v) { return v.p; },
                        [](const DirectSum&) -> std::uint64_t { return 0; },
                    },
                    f.node);
}

}  // namespace

void validate(const RingFamily& f) {
  std::visit(overloaded{
                 [](const FieldSum& v) {
                   if (v.t < 1) throw InvalidSpec("F(q)^t needs t >= 1");
                 },
                 [](const Idealization& v) {
                   if (v.lambda < 1) throw InvalidSpec("Id(q,lambda) needs lambda >= 1");
                 },
                 [](const MatrixRing& v) {
                   if (v.n < 1) throw InvalidSpec("M(n,q) needs n >= 1");
                 },
                 [](const ARing& v) {
                   if (v.n < 1) throw InvalidSpec("A(n,q1,q2) needs n >= 1");
                   if (v.q1.p() != v.q2.p()) {
                     throw MixedCharacteristic("A(" + std::to_string(v.n) + "," + v.q1.to_string() +
                                               "," + v.q2.to_string() + ") mixes characteristics");
                   }
                 },
                 [](const ZeroMult& v) {
                   if (v.k < 1) throw InvalidSpec("Z(p,k) needs k >= 1");
                   if (!arith::is_prime(v.p)) throw InvalidSpec("Z(p,k) needs p prime");
                 },
                 [](const DirectSum& v) {
                   if (v.terms.empty()) throw InvalidSpec("empty direct sum");
                   for (const auto& t : v.terms) validate(t);
                 },
             },
             f.node);
}

std::vector<RingFamily> flatten(const RingFamily& f) {
  std::vector<RingFamily> out;
  flatten_into(f, out);
  return out;
}

std::uint64_t characteristic(const RingFamily& f) {
  std::uint64_t p = 0;
  for (const auto& leaf : flatten(f)) {
    std::uint64_t lp = leaf_characteristic(leaf);
    if (p != 0 && lp != p) {
      throw MixedCharacteristic(to_string(f) + " has summands of characteristic " + std::to_string(p) +
                                " and " + std::to_string(lp));
    }
    p = lp;
  }
  return p;
}

BigInt fp_dimension(const RingFamily& f) {
  return std::visit(overloaded{
                        [](const FieldSum& v) { return BigInt(v.t) * v.q.d(); },
                        [](const Idealization& v) { return BigInt(v.q.d()) * (1 + v.lambda); },
                        [](const MatrixRing& v) { return BigInt(v.n) * v.n * v.q.d(); },
                        [](const ARing& v) {
                          auto q = arith::tensor(v.q1, v.q2);
                          return BigInt(v.n) * v.n * v.q1.d() + BigInt(v.n) * q.d() + v.q2.d();
                        },
                        [](const ZeroMult& v) { return BigInt(v.k); },
                        [](const DirectSum& v) {
                          BigInt s = 0;
                          for (const auto& t : v.terms) s += fp_dimension(t);
                          return s;
                        },
                    },
                    f.node);
}

BigInt order(const RingFamily& f) {
  BigInt total = 1;
  for (const auto& leaf : flatten(f)) {
    total *= boost::multiprecision::pow(BigInt(leaf_characteristic(leaf)),
                                        fp_dimension(leaf).convert_to<unsigned>());
  }
  return total;
}

std::vector<std::pair<std::uint64_t, RingFamily>> split_by_characteristic(const RingFamily& f) {
  std::map<std::uint64_t, std::vector<RingFamily>> groups;
  for (auto& leaf : flatten(f)) groups[leaf_characteristic(leaf)].push_back(leaf);
  std::vector<std::pair<std::uint64_t, RingFamily>> out;
  for (auto& [p, terms] : groups) {
    if (terms.size() == 1) {
      out.emplace_back(p, terms.front());
    } else {
      out.emplace_back(p, RingFamily(DirectSum{std::move(terms)}));
    }
  }
  return out;
}

std::string to_string(const RingFamily& f) {
  return std::visit(
      overloaded{
          [](const FieldSum& v) {
            std::string s = "F(" + v.q.to_string() + ")";
            if (v.t != 1) s += "^" + std::to_string(v.t);
            return s;
          },
          [](const Idealization& v) {
            std::string s = "Id(" + v.q.to_string();
            if (v.lambda != 2) s += "," + std::to_string(v.lambda);
            return s + ")";
          },
          [](const MatrixRing& v) { return "M(" + std::to_string(v.n) + "," + v.q.to_string() + ")"; },
          [](const ARing& v) {
            return "A(" + std::to_string(v.n) + "," + v.q1.to_string() + "," + v.q2.to_string() + ")";
          },
          [](const ZeroMult& v) { return "Z(" + std::to_string(v.p) + "," + std::to_string(v.k) + ")"; },
          [](const DirectSum& v) {
            std::string s;
            for (const auto& t : v.terms) {
              if (!s.empty()) s += "+";
              s += to_string(t);
            }
            return s;
          },
      },
      f.node);
}

}  // namespace ringcover
