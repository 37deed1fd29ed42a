"""Period-2p generalized cyclotomic binary sequences: construction,
autocorrelation, linear complexity over F_r and 2-adic complexity."""

from .adic2 import AdicReport, adic_complexity, check_lemma9, compute_Gp, gcd_split
from .cyclotomy import ClassLabel, CyclotomicTables, build_tables, check_class_lemmas, classify
from .errors import ConsistencyError
from .lincomp import (
    LinComplexityReport,
    analyze_linear,
    berlekamp_massey,
    lc_via_gcd,
    lc_via_roots,
    theorem1_prediction,
)
from .ntcore import PrimeParams, find_common_primitive_root
from .seqgen import (
    BinarySequence,
    autocorr_spectrum,
    autocorrelation,
    eval_S_at_2,
    generate,
    predicted_spectrum,
)

__version__ = "0.1.0"
