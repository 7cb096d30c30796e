"""Binary (I | A) codes from circulant generator vectors."""

from .bounds import BoundsEntry, BoundsNotFound, BoundsTable, bundled_bounds, load_bounds
from .distance import (
    DistanceResult,
    WeightDistribution,
    enumerator_string,
    macwilliams_dual,
    min_distance,
    weight_distribution,
    weight_table,
)
from .gf2_core import (
    CirculantCode,
    Codeword,
    ConnectionSet,
    GeneratorVector,
    circulant_row,
    encode,
    is_graph_vector,
    min_degree_bound,
    paley_vector,
    parse_connection_set,
    parse_vector,
    vector_from_connection_set,
)
from .search import (
    BadCodewordCertificate,
    Classification,
    ElementScore,
    Outcome,
    SearchTrace,
    classify,
    find_bad_codewords,
    flip,
    improve,
    score_element,
)

__version__ = "0.1.0"
