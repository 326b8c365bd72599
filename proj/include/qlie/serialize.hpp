#ifndef QLIE_SERIALIZE_HPP
#define QLIE_SERIALIZE_HPP

#include <json.hpp>

#include "qlie/algebra.hpp"
#include "qlie/tensor.hpp"

namespace qlie {

using Json = nlohmann::ordered_json;

/// {"0":"1","2":"-1/3"} — exponent strings to rational strings.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"k":"E","d":[1,0]} for graded kinds, {"k":"D"} etc. for operators.
Json basis_to_json(const BasisElement& b);
BasisElement basis_from_json(const Json& j);

/// {"terms":[{"c":<laurent>,"b":<basis>}]}
Json algebra_to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const Json& j);

/// {"arity":2,"terms":[{"c":<laurent>,"f":[<basis>,...]}]}
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

TensorElement load_tensor_file(const std::string& path);

}  // namespace qlie

#endif
