#include "hlab/liedrag.hpp"

#include <stdexcept>

namespace hlab {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Scalar0Form: return "0-form";
    case FormKind::OneForm: return "1-form";
    case FormKind::TwoForm: return "2-form";
    case FormKind::ThreeForm: return "3-form";
    case FormKind::VectorFieldKind: return "vector";
  }
  return "?";
}

AdvectedObject AdvectedObject::make_scalar(FormKind k, ScalarField f) {
  if (k != FormKind::Scalar0Form && k != FormKind::ThreeForm)
    throw std::invalid_argument("AdvectedObject: kind needs a vector proxy");
  AdvectedObject o;
  o.kind = k;
  o.scalar = std::move(f);
  return o;
}

AdvectedObject AdvectedObject::make_vector(FormKind k, VectorField v) {
  if (k == FormKind::Scalar0Form || k == FormKind::ThreeForm)
    throw std::invalid_argument("AdvectedObject: kind needs a scalar proxy");
  AdvectedObject o;
  o.kind = k;
  o.vector = std::move(v);
  return o;
}

void apply_tangent(AdvectedObject& obj, double a, const AdvectedTangent& k) {
  if (obj.is_scalar_kind())
    obj.scalar.axpy(a, k.scalar);
  else
    obj.vector.axpy(a, k.vector);
}

AdvectedTangent drag_rhs(const AdvectedObject& obj, const VectorField& u) {
  require_same_grid(obj.grid(), u.grid, "drag_rhs");
  AdvectedTangent out;
  out.scalar_kind = obj.is_scalar_kind();
  switch (obj.kind) {
    case FormKind::Scalar0Form:
      out.scalar = -1.0 * advect(u, obj.scalar);
      break;
    case FormKind::ThreeForm:
      out.scalar = -1.0 * div(scale(u, obj.scalar));
      break;
    case FormKind::OneForm: {
      out.vector = cross(u, curl(obj.vector));
      out.vector -= grad(dot(u, obj.vector));
      break;
    }
    case FormKind::TwoForm: {
      out.vector = curl(cross(u, obj.vector));
      const ScalarField dv = div(obj.vector);
      for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < dv.values.size(); ++q)
          out.vector.comp[c].values[q] -= u.comp[c].values[q] * dv.values[q];
      break;
    }
    case FormKind::VectorFieldKind:
      out.vector = -1.0 * lie_bracket(u, obj.vector);
      break;
  }
  return out;
}

AdvectedObject contract(const AdvectedObject& v, const AdvectedObject& form) {
  if (v.kind != FormKind::VectorFieldKind)
    throw std::invalid_argument("contract: first argument must be a vector");
  require_same_grid(v.grid(), form.grid(), "contract");
  switch (form.kind) {
    case FormKind::OneForm:
      return AdvectedObject::make_scalar(FormKind::Scalar0Form,
                                         dot(v.vector, form.vector));
    case FormKind::TwoForm:
      // interior product of the flux 2-form: i_v (F.dS) = (F x v).dx
      return AdvectedObject::make_vector(FormKind::OneForm,
                                         cross(form.vector, v.vector));
    case FormKind::ThreeForm:
      return AdvectedObject::make_vector(FormKind::TwoForm,
                                         scale(v.vector, form.scalar));
    default:
      throw std::invalid_argument("contract: unsupported pair (vector, " +
                                  to_string(form.kind) + ")");
  }
}

}  // namespace hlab
