#ifndef RINGCOVER_JSON_IO_HPP
#define RINGCOVER_JSON_IO_HPP

// JSON interchange for rings, certificates, covers and reports.
//
// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings, and Infinity is the string "inf".

#include <vector>

#include <json.hpp>

#include "ringcover/arith.hpp"
#include "ringcover/coverbuilder.hpp"
#include "ringcover/finite_ring.hpp"
#include "ringcover/formulas.hpp"
#include "ringcover/oracle.hpp"

namespace ringcover::io {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const arith::ExtNat& v);

/// {p, dim, mult, unity, labels}; mult[i][j] is the coefficient vector of b_i b_j.
Json ring_to_json(const FiniteRing& r);
/// Throws InvalidSpec on schema errors plus whatever FiniteRing raises.
FiniteRing ring_from_json(const Json& j, const RingCaps& caps = {});

/// {size, closed, proper, covering, irredundant, members: [[vector, ...], ...]}.
Json certificate_to_json(const oracle::CoverCertificate& c);
/// Spanning vectors per member, as accepted by oracle::verify_certificate.
std::vector<std::vector<Vec>> certificate_members_from_json(const Json& j);

Json cover_to_json(const cover::ACover& c);
cover::ACover cover_from_json(const Json& j);

Json report_to_json(const formulas::SigmaReport& r);

}  // namespace ringcover::io

#endif  // RINGCOVER_JSON_IO_HPP
