#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "pin13/frames.hpp"
#include "pin13/matrix.hpp"
#include "pin13/spintensor.hpp"

namespace pin13 {

using nlohmann::json;

namespace detail {

inline json entry_pair(const cplx& v) { return json::array({v.real(), v.imag()}); }

inline cplx entry_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError(std::string(what) + ": entries must be [re, im] pairs");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw DomainError(std::string(what) + ": non-finite entry");
  return cplx(re, im);
}

template <std::size_t N, typename Scalar>
json matrix_json(const SquareMatrix<N, Scalar>& m) {
  json data = json::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      data.push_back(entry_pair(cplx(m(i, j))));
  return json{{"rows", N}, {"cols", N}, {"data", data}};
}

inline void check_matrix_shape(const json& j, std::size_t n,
                               const char* what) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw DomainError(std::string(what) +
                      ": expected {rows, cols, data} object");
  if (j["rows"] != n || j["cols"] != n)
    throw DomainError(std::string(what) + ": wrong matrix shape");
  if (!j["data"].is_array() || j["data"].size() != n * n)
    throw DomainError(std::string(what) + ": wrong data length");
}

}  // namespace detail

inline json to_json(const Mat2C& m) { return detail::matrix_json(m); }
inline json to_json(const Mat4C& m) { return detail::matrix_json(m); }
inline json to_json(const Mat4R& m) { return detail::matrix_json(to_complex(m)); }

inline Mat2C mat2c_from_json(const json& j) {
  detail::check_matrix_shape(j, 2, "2x2 matrix");
  Mat2C m;
  for (std::size_t k = 0; k < 4; ++k)
    m.data()[k] = detail::entry_from_json(j["data"][k], "2x2 matrix");
  return m;
}

inline Mat4C mat4c_from_json(const json& j) {
  detail::check_matrix_shape(j, 4, "4x4 matrix");
  Mat4C m;
  for (std::size_t k = 0; k < 16; ++k)
    m.data()[k] = detail::entry_from_json(j["data"][k], "4x4 matrix");
  return m;
}

inline Mat4R mat4r_from_json(const json& j) {
  const Mat4C m = mat4c_from_json(j);
  if (max_abs_imag(m) != 0.0)
    throw DomainError("4x4 real matrix: imaginary parts must be 0");
  return real_part(m);
}

inline json to_json(const SpinTensor& t) {
  json data = json::array();
  for (const cplx& v : t.data) data.push_back(detail::entry_pair(v));
  return json{{"type",
               {t.type.alpha, t.type.beta, t.type.nu, t.type.gamma_b,
                t.type.m, t.type.n}},
              {"data", data}};
}

inline SpinTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("data"))
    throw DomainError("spin tensor: expected {type, data} object");
  const json& ty = j["type"];
  if (!ty.is_array() || ty.size() != 6)
    throw DomainError("spin tensor: type must be six counts");
  for (const json& c : ty)
    if (!c.is_number_integer())
      throw DomainError("spin tensor: type counts must be integers");
  const SpinTensorType type =
      make_tensor_type(ty[0].get<int>(), ty[1].get<int>(), ty[2].get<int>(),
                       ty[3].get<int>(), ty[4].get<int>(), ty[5].get<int>());
  const json& data = j["data"];
  if (!data.is_array() || data.size() != component_count(type))
    throw DomainError("spin tensor: data length does not match the type");
  std::vector<cplx> entries;
  entries.reserve(data.size());
  for (const json& e : data)
    entries.push_back(detail::entry_from_json(e, "spin tensor"));
  return make_spin_tensor(type, std::move(entries));
}

// Transition files carry at least the spinor matrix; the inverse pair and
// the tangent pair may be given explicitly, otherwise the matrix must lie
// in the group representation and the remaining parts are derived from it.
inline FrameTransition transition_from_json(const json& j,
                                            double tol = kEpsFloat) {
  if (!j.is_object() || !j.contains("s_hat"))
    throw DomainError("frame transition: expected an object with s_hat");
  const Mat4C s_hat = mat4c_from_json(j["s_hat"]);
  if (!j.contains("t_hat") && !j.contains("s") && !j.contains("t"))
    return transition_from_pin(s_hat, tol);
  if (!j.contains("t_hat") || !j.contains("s") || !j.contains("t"))
    throw DomainError(
        "frame transition: give s_hat alone, or all of s_hat, t_hat, s, t");
  return make_frame_transition(s_hat, mat4c_from_json(j["t_hat"]),
                               mat4r_from_json(j["s"]),
                               mat4r_from_json(j["t"]), tol);
}

inline json to_json(const FrameClassification& c) {
  return json{{"class", to_string(c.frame_class)},
              {"signs",
               {{"d", c.signs.d}, {"H", c.signs.h}, {"D", c.signs.dirac}}},
              {"sector", to_string(c.sector)}};
}

}  // namespace pin13
