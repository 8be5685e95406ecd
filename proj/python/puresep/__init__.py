"""Separability tests for multipartite pure quantum states.

A pure state is fully separable exactly when, for every party, its cut
matrix (amplitudes reshaped with that party's level as the column index)
has rank one.  The package exposes four equivalent floating-point tests of
that condition, tensor-factor extraction for states that pass, and an
independent Schmidt-rank reference for cross-checking, all backed by a C++
core.

Quick start::

    import puresep

    state = puresep.cat_state(3)
    result = puresep.classify(state)
    assert not result.separable

    product = puresep.random_product_state(puresep.DimensionProfile([2, 3]), seed=1)
    factors = puresep.extract_factors(product).factors
"""

from ._core import (
    ClassifyResult,
    ConflictInfo,
    CriteriaOptions,
    Criterion,
    CrossValidationReport,
    CutSpectrum,
    DimensionProfile,
    FactorDecomposition,
    MinorCoords,
    OpCounters,
    OracleReport,
    PartyValue,
    PropCoords,
    PureState,
    ToleranceConfig,
    Verdict,
    Witness,
    __version__,
    all_criteria,
    cat_state,
    classify,
    criterion_from_name,
    criterion_name,
    cross_validate,
    evaluate,
    extract_factors,
    inner_product,
    method_label,
    oracle_schmidt,
    perturb,
    product_state,
    random_product_factors,
    random_product_state,
    random_state,
    read_state_file,
    state_from_text,
    state_to_text,
    w_state,
    write_state_file,
)

__all__ = [
    "ClassifyResult",
    "ConflictInfo",
    "CriteriaOptions",
    "Criterion",
    "CrossValidationReport",
    "CutSpectrum",
    "DimensionProfile",
    "FactorDecomposition",
    "MinorCoords",
    "OpCounters",
    "OracleReport",
    "PartyValue",
    "PropCoords",
    "PureState",
    "ToleranceConfig",
    "Verdict",
    "Witness",
    "__version__",
    "all_criteria",
    "cat_state",
    "classify",
    "criterion_from_name",
    "criterion_name",
    "cross_validate",
    "evaluate",
    "extract_factors",
    "inner_product",
    "method_label",
    "oracle_schmidt",
    "perturb",
    "product_state",
    "random_product_factors",
    "random_product_state",
    "random_state",
    "read_state_file",
    "state_from_text",
    "state_to_text",
    "w_state",
    "write_state_file",
]
