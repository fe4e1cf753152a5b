"""Privacy-amplification toolkit: planning, GF(2) universal hashing, and
desk-scale brute-force verification of the underlying bounds."""

from .amplification import (
    CompressionAccount,
    amplify,
    output_length,
    uniformizer_deficit,
)
from .distributions import (
    EveDistribution,
    OutputDistribution,
    load_eve_csv,
    pushforward,
    renyi_entropy,
    save_eve_csv,
    security_deficit,
    shannon_entropy,
    validate,
)
from .errors import (
    BlockExhausted,
    DimensionMismatch,
    EnumerationTooLarge,
    EqualInputs,
    IndexOutOfRange,
    InfeasibleTarget,
    InsufficientSamples,
    InvalidDimensions,
    KeyExhausted,
    NegativeProbability,
    NonPositiveBeta,
    NotNormalized,
    PaKitError,
)
from .hashing import (
    ENUMERATION_CAP_BITS,
    FAMILIES,
    BitString,
    HashSpec,
    apply_hash,
    collision_count,
    enumerate_family,
    family_size,
    read_key_file,
    sample_hash,
    seed_length,
    write_key_file,
)
from .planner import (
    PlanParams,
    apa_bound,
    failure_probability,
    plan_from_targets,
    ppa_bound,
    tradeoff_table,
)
from .throughput import LinkModel, secret_rate, throughput_curve
from .verification import (
    DEFAULT_BETA_GRID,
    Exhaustive,
    FailureRateResult,
    MonteCarlo,
    TailCheck,
    VerificationReport,
    empirical_failure_rate,
    theoretical_average_bound,
    verify_average_bound,
    verify_tail_bound,
)

__version__ = "0.1.0"
