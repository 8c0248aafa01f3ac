#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "shfc/resolution.hpp"

namespace shfc {

/// A presentation over whichever field the file names.
using AnyPresentation = std::variant<Presentation<PrimeField>, Presentation<RationalField>>;

/// Reads {"ring":{"char":p,"vars":k},"generators":[a_1,...],
/// "relations":[[f_1,...],...]}. Generator j has degree a_j; each relation
/// column lists one polynomial per generator and its degree is inferred.
/// Throws ParseError (with line and column when known) or
/// InhomogeneousError naming the column.
AnyPresentation parse_module(std::string_view text);

template <class K>
nlohmann::json module_to_json(const Presentation<K>& m);

template <class K>
std::string serialize_module(const Presentation<K>& m);

std::string serialize_module(const AnyPresentation& m);

/// Ring for characteristic 0 or a prime below 2^31.
template <class K>
Ring<K> make_ring(std::uint32_t characteristic, int num_vars);

}  // namespace shfc
