"""Characters and Witt-type dimension formulas for free color Lie (p-)superalgebras."""

__version__ = "0.1.0"

from .arith import IntegralityError, Prime, divisors, mobius, mobius_p, multinomial, one_p
from .gchar import (
    GroupSeries,
    dim_by_group_degree,
    g_character_free,
    group_fiber,
    group_mul,
    group_twisted_dilate,
    op_EG,
    op_LG,
)
from .groups import FiniteAbelianGroup
from .lyndon import count_lyndon, oracle_dim_restricted, oracle_dim_super
from .operators import (
    VerificationReport,
    free_restricted_character,
    free_super_character,
    homogeneous_character_p,
    op_E,
    op_Ep,
    op_Ep_mixed,
    op_L,
    op_Lp,
    pbw_verify,
    pbw_verify_p,
)
from .schreier import epsilon_univariate, schreier_generators_series
from .series import (
    GeneratorClass,
    GradingSpec,
    Series,
    free_assoc_character,
    generator_character,
    twisted_dilate,
)
from .witt import dim_multidegree, dim_multidegree_p, dim_total_p, dim_total_super, hilbert_series_super
