"""Two stochastic models of daily stock prices with information-theoretic scoring.

The package fits a normal-increment random walk (model 1) and a
continuous-time birth-death process (model 2) to a series of daily opening
prices, simulates seeded trajectory ensembles from each, and compares
simulated output to the actual data with histogram entropy and mutual
information.
"""

from ._version import __version__
from .birth_death import (
    EventTrajectory,
    sample_daily,
    simulate_bd_ensemble,
    simulate_birth_death,
)
from .errors import InsufficientDataError, ParseError, PricePathsError, SchemaError
from .evaluation import (
    BINNING_POLICIES,
    ENTROPY_SOURCES,
    EvaluationReport,
    SourceMetrics,
    cross_move_mi,
    evaluate,
    shuffled_move_mi_floor,
)
from .fitting import (
    BirthDeathModel,
    EventRecord,
    NormalMoveModel,
    extract_events,
    fit_birth_death,
    fit_exponential_rate,
    fit_normal,
    interevent_gaps,
    models_from_dict,
    models_to_dict,
)
from .infotheory import (
    BinningSpec,
    Histogram,
    bin_indices,
    bin_samples,
    entropy_bits,
    lag_pairs,
    make_binning,
    mutual_information_bits,
)
from .market_data import (
    DEFAULT_PRICE_COLUMN,
    MoveSeries,
    PriceSeries,
    differences,
    load_price_csv,
    parse_price_csv,
)
from .random_walk import Trajectory, simulate_normal, simulate_normal_ensemble
from .streams import SeededStream, derived_seed, exponentials, open_uniforms, standard_normals

__all__ = [
    "__version__",
    "BINNING_POLICIES",
    "ENTROPY_SOURCES",
    "BinningSpec",
    "BirthDeathModel",
    "DEFAULT_PRICE_COLUMN",
    "EvaluationReport",
    "EventRecord",
    "EventTrajectory",
    "Histogram",
    "InsufficientDataError",
    "MoveSeries",
    "NormalMoveModel",
    "ParseError",
    "PricePathsError",
    "PriceSeries",
    "SchemaError",
    "SeededStream",
    "SourceMetrics",
    "Trajectory",
    "bin_indices",
    "bin_samples",
    "cross_move_mi",
    "derived_seed",
    "differences",
    "entropy_bits",
    "evaluate",
    "exponentials",
    "extract_events",
    "fit_birth_death",
    "fit_exponential_rate",
    "fit_normal",
    "interevent_gaps",
    "lag_pairs",
    "load_price_csv",
    "make_binning",
    "models_from_dict",
    "models_to_dict",
    "mutual_information_bits",
    "open_uniforms",
    "parse_price_csv",
    "sample_daily",
    "shuffled_move_mi_floor",
    "simulate_bd_ensemble",
    "simulate_birth_death",
    "simulate_normal",
    "simulate_normal_ensemble",
    "standard_normals",
]
