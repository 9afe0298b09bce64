"""Boolean-function analytics for the covering radius of RM(2,7).

The ``core`` module holds exact truth-table arithmetic (ANF, Walsh
transform, nonlinearity, affine action, concatenation), ``secondorder``
the exhaustive quadratic-coset analytics (nl2, Fh/NFh machinery, S16
statistics, pair profiles), and ``verify`` the check pipeline that
reproduces every published computed quantity and certifies the lower
bound with an explicit witness.
"""

from .core import (
    AffineMap,
    AnfTermSet,
    TruthTable,
    WalshSpectrum,
    apply_affine,
    concat,
    degree,
    distance,
    from_anf,
    fwht,
    nonlinearity,
    random_affine,
    to_anf,
)
from .secondorder import (
    FhSet,
    NFhSpectrum,
    QuadraticForm,
    concat_nl2_upper_bound,
    coset_nl_table,
    enumerate_quadratics,
    fh_set,
    nfh_spectrum,
    nl2,
    pair_profile,
    quad_table,
    s16_count,
    shifted_pair_profile,
    shifted_s16_count,
)

__version__ = "1.0.0"

__all__ = [
    "AffineMap",
    "AnfTermSet",
    "TruthTable",
    "WalshSpectrum",
    "apply_affine",
    "concat",
    "degree",
    "distance",
    "from_anf",
    "fwht",
    "nonlinearity",
    "random_affine",
    "to_anf",
    "FhSet",
    "NFhSpectrum",
    "QuadraticForm",
    "concat_nl2_upper_bound",
    "coset_nl_table",
    "enumerate_quadratics",
    "fh_set",
    "nfh_spectrum",
    "nl2",
    "pair_profile",
    "quad_table",
    "s16_count",
    "shifted_pair_profile",
    "shifted_s16_count",
    "__version__",
]
