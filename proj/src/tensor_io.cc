#include "singtuple/tensor_io.h"

#include <fstream>
#include <stdexcept>

namespace singtuple {

using nlohmann::json;

namespace {

template <typename Coeff>
json terms_to_json(const SymTensor<Coeff>& t) {
  const TensorFormat& format = t.format();
  const VariableLayout layout = format.layout();
  json terms = json::array();
  for (const auto& [e, c] : t.polynomial().terms()) {
    json blocks = json::array();
    for (int l = 0; l < format.k(); ++l) {
      const int off = layout.block_offset(l);
      blocks.push_back(std::vector<int>(e.begin() + off,
                                        e.begin() + off + layout.block_size(l)));
    }
    json coeff;
    if constexpr (std::is_same_v<Coeff, Rational>) {
      coeff = c.get_str();
    } else {
      coeff = json::array({c.real(), c.imag()});
    }
    terms.push_back({{"exponents", blocks}, {"coeff", coeff}});
  }
  return terms;
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Exponent join(const TensorFormat& format, const json& blocks) {
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != format.k())
    throw std::invalid_argument("term needs one exponent list per block");
  Exponent e;
  for (int l = 0; l < format.k(); ++l) {
    const auto b = int_list(blocks[l], "exponents");
    if (static_cast<int>(b.size()) != format.dims[l] + 1)
      throw std::invalid_argument("exponent list has wrong length");
    e.insert(e.end(), b.begin(), b.end());
  }
  return e;
}

Complex complex_value(const json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return to_complex(parse_rational(j.get<std::string>()));
  throw std::invalid_argument("coefficient must be \"p/q\" or [re, im]");
}

}  // namespace

json format_to_json(const TensorFormat& format) {
  return {{"degrees", format.degrees}, {"dims", format.dims}};
}

json tensor_to_json(const RationalTensor& t) {
  json j = format_to_json(t.format());
  j["terms"] = terms_to_json(t);
  return j;
}

json tensor_to_json(const ComplexTensor& t) {
  json j = format_to_json(t.format());
  j["terms"] = terms_to_json(t);
  return j;
}

AnyTensor tensor_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tensor must be a JSON object");
  for (const char* key : {"degrees", "dims", "terms"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("tensor lacks \"") + key + "\"");
  const TensorFormat format(int_list(j["degrees"], "degrees"),
                            int_list(j["dims"], "dims"));
  const json& terms = j["terms"];
  if (!terms.is_array()) throw std::invalid_argument("terms must be an array");

  bool exact = true;
  for (const auto& term : terms) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
      throw std::invalid_argument("term needs \"exponents\" and \"coeff\"");
    if (!term["coeff"].is_string()) exact = false;
  }
  const VariableLayout layout = format.layout();
  if (exact) {
    RationalPolynomial p(layout);
    for (const auto& term : terms)
      p.add_term(join(format, term["exponents"]),
                 parse_rational(term["coeff"].get<std::string>()));
    return RationalTensor(format, std::move(p));
  }
  ComplexPolynomial p(layout);
  for (const auto& term : terms)
    p.add_term(join(format, term["exponents"]), complex_value(term["coeff"]));
  return ComplexTensor(format, std::move(p));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

const TensorFormat& format_of(const AnyTensor& t) {
  return std::visit([](const auto& x) -> const TensorFormat& { return x.format(); }, t);
}

json tuple_to_json(const SingularTuple& tuple) {
  json points = json::array();
  for (const auto& block : tuple.points) {
    std::vector<double> re, im;
    for (Eigen::Index i = 0; i < block.size(); ++i) {
      re.push_back(block[i].real());
      im.push_back(block[i].imag());
    }
    points.push_back({{"re", re}, {"im", im}});
  }
  return {{"points", points}, {"charts", tuple.charts}, {"residual", tuple.residual}};
}

std::vector<SingularTuple> tuples_from_json(const json& j,
                                            const TensorFormat& format) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("tuples")) throw std::invalid_argument("no \"tuples\" array");
    list = &j["tuples"];
  }
  if (!list->is_array()) throw std::invalid_argument("tuples must be an array");
  std::vector<SingularTuple> out;
  for (const auto& item : *list) {
    if (!item.is_object() || !item.contains("points"))
      throw std::invalid_argument("tuple lacks \"points\"");
    const json& points = item["points"];
    if (!points.is_array() || static_cast<int>(points.size()) != format.k())
      throw std::invalid_argument("tuple has wrong number of blocks");
    BlockPoint raw;
    for (int l = 0; l < format.k(); ++l) {
      const json& b = points[l];
      if (!b.is_object() || !b.contains("re") || !b.contains("im"))
        throw std::invalid_argument("block needs \"re\" and \"im\"");
      const auto re = b["re"].get<std::vector<double>>();
      const auto im = b["im"].get<std::vector<double>>();
      if (static_cast<int>(re.size()) != format.dims[l] + 1 || im.size() != re.size())
        throw std::invalid_argument("block has wrong dimension");
      Eigen::VectorXcd v(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) v[i] = Complex(re[i], im[i]);
      raw.push_back(std::move(v));
    }
    out.push_back(SingularTuple::normalized(std::move(raw)));
  }
  return out;
}

}  // namespace singtuple
