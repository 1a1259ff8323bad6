"""Optimal LOCC conversion probabilities between bipartite pure states.

Works on Schmidt spectra only: single-copy optimal probabilities,
multiple-copy averages, catalyst-assisted conversion and the closed-form
supremum they share.
"""

from ._numeric import EXACT, FLOAT, get_mode, numeric_mode, set_mode
from .catalysis import (
    CatalystSearchResult,
    ProtocolReport,
    construct_catalyst,
    p_catalyzed,
    p_max_from_max_entangled,
    p_max_to_max_entangled,
    search_catalyst,
    simulate_protocol,
)
from .multicopy import (
    FiniteMResult,
    MulticopyEntry,
    MulticopyTrace,
    estimate_pm,
    find_finite_m,
    multicopy_radicand,
    p_multicopy_avg,
)
from .spectra import (
    CompressedSpectrum,
    expand,
    from_coefficients,
    maximally_entangled,
    tensor_power,
    tensor_product,
    weighted_direct_sum,
)
from .vidal import (
    ConversionReport,
    closed_form_pe,
    is_deterministic,
    is_majorized_by,
    p_max,
    suffix_sums,
)

__version__ = "0.1.0"
