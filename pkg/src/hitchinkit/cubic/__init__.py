"""Curve models, residues and the SL2 residue cubic with its period oracle."""

from .curves import (CurveError, CurveModel, SectionBasis, riemann_roch_dimension, section_basis,
                     serre_pairing_nondegenerate)
from .oracle import CALIBRATION, OracleError, OracleResult, calibration_ratio, period_oracle, periods
from .residues import (CurvePoint, Differential, adapted_quadratic_expansion, local_chart, quadratic_residue,
                       rescale, rescaling_invariant, residue, residue_sum)
from .sl2 import (CameralError, SL2CameralData, cubic_tensor, residue_cubic_closed_form, residue_cubic_sl2,
                  is_fully_symmetric, sl2_cameral_data)

__all__ = [
    "CALIBRATION", "CameralError", "CurveError", "CurveModel", "CurvePoint", "Differential",
    "OracleError", "OracleResult", "SL2CameralData", "SectionBasis", "adapted_quadratic_expansion",
    "calibration_ratio", "cubic_tensor", "residue_cubic_closed_form", "residue_cubic_sl2", "is_fully_symmetric",
    "local_chart", "period_oracle", "periods", "quadratic_residue", "rescale", "rescaling_invariant",
    "residue", "residue_sum", "riemann_roch_dimension", "section_basis", "serre_pairing_nondegenerate",
    "sl2_cameral_data",
]
