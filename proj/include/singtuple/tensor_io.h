// JSON reading and writing for tensors and singular tuples.
//
// Tensor files look like
//   {"degrees": [2, 1], "dims": [1, 1],
//    "terms": [{"exponents": [[2, 0], [0, 1]], "coeff": "3/2"}, ...]}
// with "coeff" either an exact "p/q" string or a [re, im] pair.  A file whose
// coefficients are all strings loads as an exact tensor.

#ifndef SINGTUPLE_TENSOR_IO_H_
#define SINGTUPLE_TENSOR_IO_H_

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "singtuple/eigensolver.h"
#include "singtuple/tensor.h"

namespace singtuple {

using AnyTensor = std::variant<RationalTensor, ComplexTensor>;

nlohmann::json format_to_json(const TensorFormat& format);
nlohmann::json tensor_to_json(const RationalTensor& t);
nlohmann::json tensor_to_json(const ComplexTensor& t);

/// Throws std::invalid_argument on malformed input.
AnyTensor tensor_from_json(const nlohmann::json& j);

/// Throws std::runtime_error when the file cannot be read or parsed.
nlohmann::json read_json_file(const std::string& path);

const TensorFormat& format_of(const AnyTensor& t);

/// {"points": [{"re": [...], "im": [...]}, ...], "charts": [...], "residual": r}
nlohmann::json tuple_to_json(const SingularTuple& tuple);

/// Accepts a bare array of tuples or an object with a "tuples" array (the
/// output of `solve`).  Each tuple is re-normalized; throws
/// std::invalid_argument if a tuple does not fit the format.
std::vector<SingularTuple> tuples_from_json(const nlohmann::json& j,
                                            const TensorFormat& format);

}  // namespace singtuple

#endif  // SINGTUPLE_TENSOR_IO_H_
