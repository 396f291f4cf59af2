"""Fixed-length Levenshtein balls over Z_m: statistics, ball sizes, expectations,
Doob martingale increments and Azuma tail bounds."""

from .analytic import (
    ball_size_formula,
    exhaustive_ball_stats,
    exhaustive_means,
    expected_a,
    expected_ball_size,
    expected_h,
    expected_rho,
    expected_sum_s,
    expected_sum_s2,
    expected_t,
    f_mn,
    f_n,
)
from .estimators import BallSizeConcentration, BallSizeTransformer, SegmentProfileTransformer
from .martingale import (
    azuma_bound,
    f_partition_binary,
    f_partition_mary_bounds,
    g_mn,
    martingale_trace,
    tail_bound,
    z_binary,
    z_bruteforce,
    z_increment_binary,
    z_mary_bounds,
)
from .metric import (
    WordSet,
    deletion_sphere,
    fll_ball,
    fll_distance,
    fll_distance_definitional,
    insertion_count,
    insertion_sphere,
)
from .montecarlo import SimConfig, TailReport, expected_frequency, run_simulation, sample_word
from .words import (
    SegmentProfile,
    Word,
    brute_force_profile,
    make_word,
    parse_word,
    profile,
    reverse_word,
    shift_word,
)

__version__ = "0.1.0"
