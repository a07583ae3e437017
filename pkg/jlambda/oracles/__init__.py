from .symfunc import augmented_monomial_specialized
from .symfunc import power_sum_family_check
from .symfunc import specialized_p
from .symfunc import verify_factorization
from .trees import tree_inversion_poly
from .tutte import Multigraph
from .tutte import build_K
from .tutte import connected_spanning_sum
from .tutte import tutte_I

__all__ = (
    "Multigraph",
    "augmented_monomial_specialized",
    "build_K",
    "connected_spanning_sum",
    "power_sum_family_check",
    "specialized_p",
    "tree_inversion_poly",
    "tutte_I",
    "verify_factorization",
)
