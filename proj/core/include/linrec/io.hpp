#pragma once

// JSON descriptors for rings, polynomials and sequences.
//
//   ring     {"kind":"int"} | {"kind":"mod","modulus":"<decimal>"}
//   poly     {"coeffs":["a0","a1",...,"1"]}                  (ascending)
//   LinRecSeq {"ring":..., "dim":1, "charpoly":{...}, "init":[["v"],...]}
//   BiRecSeq  same as LinRecSeq plus "indexing":"Z"
//   KSeq      {"ring":..., "elem":[{...},...], "values":[["v"],...]}  (lex-chain order)
//
// Every descriptor may carry a "name". Numbers are written as decimal
// strings. On input JSON integers are accepted too, a bare value "v" stands
// for the one-component value ["v"], a ring may be "Z" or "Z/<m>", and a
// polynomial may be written as text such as "x^2-x-1".

#include <string>
#include <string_view>
#include <variant>

#include "linrec/kseq.hpp"
#include "linrec/poly.hpp"
#include "linrec/reversal.hpp"
#include "linrec/ring.hpp"
#include "linrec/sequence.hpp"

namespace linrec::io {

using AnySeq = std::variant<LinRecSeq, BiRecSeq, KSeq>;

struct Descriptor {
  std::string name;
  AnySeq seq;
};

/// Throws ParseError on malformed JSON, schema violations, or values that
/// break the sequence invariants (non-monic polynomial, wrong init length...).
Descriptor parse_descriptor(std::string_view json_text);

/// Accepts the JSON form or the shorthands "Z", "Z/<m>".
RingSpec parse_ring(std::string_view text);
/// Accepts the JSON form or the human form "x^2-x-1".
Poly parse_poly_text(const RingSpec& ring, std::string_view text);

std::string to_json(const RingSpec& ring);
std::string to_json(const Poly& f);
std::string to_json(const LinRecSeq& u, std::string_view name = {});
std::string to_json(const BiRecSeq& w, std::string_view name = {});
std::string to_json(const KSeq& w, std::string_view name = {});
std::string to_json(const AnySeq& s, std::string_view name = {});

}  // namespace linrec::io
