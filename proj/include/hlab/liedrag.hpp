#pragma once

#include <string>

#include "hlab/field.hpp"

namespace hlab {

/// A geometric object carried by the flow, represented by its flat-metric
/// proxy: 0-form and 3-form by a scalar field, 1-form (covector), 2-form
/// (flux vector) and vector field by a vector field.
enum class FormKind {
  Scalar0Form,
  OneForm,
  TwoForm,
  ThreeForm,
  VectorFieldKind
};

std::string to_string(FormKind k);

struct AdvectedObject {
  FormKind kind = FormKind::Scalar0Form;
  ScalarField scalar;
  VectorField vector;

  static AdvectedObject make_scalar(FormKind k, ScalarField f);
  static AdvectedObject make_vector(FormKind k, VectorField v);

  bool is_scalar_kind() const {
    return kind == FormKind::Scalar0Form || kind == FormKind::ThreeForm;
  }
  const Grid& grid() const {
    return is_scalar_kind() ? scalar.grid : vector.grid;
  }
};

struct AdvectedTangent {
  ScalarField scalar;
  VectorField vector;
  bool scalar_kind = true;

  AdvectedTangent& axpy(double a, const AdvectedTangent& o) {
    if (scalar_kind)
      scalar.axpy(a, o.scalar);
    else
      vector.axpy(a, o.vector);
    return *this;
  }
};

void apply_tangent(AdvectedObject& obj, double a, const AdvectedTangent& k);

/// Transport law per kind:
///   0-form  I:  -u.grad I
///   1-form  w:   u x curl(w) - grad(u.w)
///   2-form  F:   curl(u x F) - u div(F)
///   3-form  d:  -div(d u)
///   vector  b:  -[u, b]
AdvectedTangent drag_rhs(const AdvectedObject& obj, const VectorField& u);

/// Interior products used by the conserved-functional catalog:
///   (vector v, 1-form w)  -> 0-form v.w
///   (vector v, 2-form F)  -> 1-form F x v
///   (vector v, 3-form d)  -> 2-form d v
/// Throws std::invalid_argument on unsupported pairs.
AdvectedObject contract(const AdvectedObject& v, const AdvectedObject& form);

}  // namespace hlab
