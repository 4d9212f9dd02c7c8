"""Polynomial approximation of quadrature-diagonal gates by
measurement-induced monomials, with exact two-mode cross-checks."""

from .analysis import (
    FidelityCurve,
    InputFamily,
    WignerGrid,
    bare_polynomial_fidelity,
    count_negative_regions,
    fidelity_mixed,
    fidelity_pure,
    gate_target,
    input_state,
    sweep_bare,
    sweep_counting,
    sweep_subtraction_exact,
    sweep_subtraction_postselected,
    wigner,
)
from .counting import CountingConfig, count_probability, counting_chain, counting_step
from .errors import (
    AsymmetricGrid,
    CvpolyError,
    EmptyEnsemble,
    EmptyScanRange,
    GridMismatch,
    GridTooNarrow,
    IllConditioned,
    SingularAncilla,
    UnsupportedInput,
    ZeroAncilla,
    ZeroNorm,
)
from .gates import (
    BlockKind,
    DiagonalUnitary,
    EffectiveBlock,
    MonomialPlan,
    apply_diagonal,
    apply_effective_block,
    counting_block,
    cubic_gate,
    solve_ancilla_counting,
    solve_ancilla_subtraction,
    subtraction_block,
    taylor_factorize,
)
from .states import (
    DEFAULT_GRID,
    Direction,
    DisplaceKind,
    Grid,
    Ladder,
    SqueezeAxis,
    SqueezedParams,
    TwoModeState,
    WaveFunction,
    apply_ladder,
    coherent_state,
    db_to_width,
    displace,
    fock_state,
    fourier,
    inner,
    momentum_moments,
    position_moments,
    squeezed_state,
)
from .subtraction import (
    CoherentInput,
    FockInput,
    OutcomeEnsemble,
    OutcomeEntry,
    SubtractionConfig,
    gaussian_moment_pdf,
    homodyne_pdf,
    optimize_state_prep,
    postselect_ensemble,
    postselected_fidelity,
    subtraction_chain_exact,
    subtraction_step,
    success_probability,
)
from .twomode import (
    ORACLE_GRID,
    apply_cz,
    circuit_step,
    homodyne_scan,
    make_product,
    project_fock,
    project_homodyne,
    reduced_purity,
)

__version__ = "0.1.0"
