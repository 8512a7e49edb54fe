"""hlab: periodic-box ideal MHD / gas dynamics laboratory.

Thin re-export of the compiled extension; fields travel as numpy arrays in
(nz, ny, nx) layout, vectors as (3, nz, ny, nx).
"""

try:  # wheel layout keeps the extension inside the package
    from hlab import _hlab as _ext
except ImportError:  # build-tree layout has it on the path directly
    import _hlab as _ext

EquationOfState = _ext.EquationOfState
FluidState = _ext.FluidState
Grid = _ext.Grid
casimir_names = _ext.casimir_names
casimir_value = _ext.casimir_value
cfl_dt = _ext.cfl_dt
check_names = _ext.check_names
curl = _ext.curl
density_flux = _ext.density_flux
div = _ext.div
eval_thermo = _ext.eval_thermo
first_law_residual = _ext.first_law_residual
grad = _ext.grad
integrate = _ext.integrate
lie_bracket = _ext.lie_bracket
make_scenario = _ext.make_scenario
run_checks = _ext.run_checks
scenario_names = _ext.scenario_names
step_rk4 = _ext.step_rk4

__all__ = [
    "EquationOfState",
    "FluidState",
    "Grid",
    "casimir_names",
    "casimir_value",
    "cfl_dt",
    "check_names",
    "curl",
    "density_flux",
    "div",
    "eval_thermo",
    "first_law_residual",
    "grad",
    "integrate",
    "lie_bracket",
    "make_scenario",
    "run_checks",
    "scenario_names",
    "step_rk4",
]
