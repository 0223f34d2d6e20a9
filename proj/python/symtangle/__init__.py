"""Entanglement measures of two-spinor symmetric multiqubit states."""

from ._symtangle import (
    CheckReport,
    DickeParams,
    OracleCell,
    OracleReport,
    PropertyResult,
    SymtangleError,
    TangleRecord,
    TwoQubitMarginal,
    amplitudes,
    cg_coefficients,
    check,
    concurrence,
    negativity,
    one_vs_rest,
    oracle,
    sweep_csv,
    tangle_record,
    two_qubit_marginal,
)

__all__ = [
    "CheckReport",
    "DickeParams",
    "OracleCell",
    "OracleReport",
    "PropertyResult",
    "SymtangleError",
    "TangleRecord",
    "TwoQubitMarginal",
    "amplitudes",
    "cg_coefficients",
    "check",
    "concurrence",
    "negativity",
    "one_vs_rest",
    "oracle",
    "sweep_csv",
    "tangle_record",
    "two_qubit_marginal",
]
